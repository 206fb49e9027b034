/*
   Copyright 2026 The menzerath authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "menzerath/cli.hpp"

#include "menzerath/boundary.hpp"
#include "menzerath/copula.hpp"
#include "menzerath/ingest.hpp"
#include "menzerath/report.hpp"
#include "menzerath/svg.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace menzerath {

namespace {

struct RunConfig {
    std::string input;
    std::string kind = "table";
    std::string constituent_delimiter = "-";
    std::string subconstituent_delimiter;
    std::string comment_prefix = "#";
    std::vector<std::string> models;
    std::string estimator = "pearson-raw";
    bool log_copula = false;
    bool boundaries = false;
    std::int64_t n = 100;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::vector<std::string> emit{"json", "csv", "svg"};
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& cmd, RunConfig& cfg)
{
    cmd.add_option("--input", cfg.input, "frequency table (x,z,count) or segmented corpus")
        ->required();
    cmd.add_option("--kind", cfg.kind, "input kind")
        ->check(CLI::IsMember({"table", "corpus"}))
        ->capture_default_str();
    cmd.add_option("--constituent-delim", cfg.constituent_delimiter,
                   "corpus constituent delimiter")
        ->capture_default_str();
    cmd.add_option("--subconstituent-delim", cfg.subconstituent_delimiter,
                   "corpus subconstituent delimiter (default: count characters)");
    cmd.add_option("--comment-prefix", cfg.comment_prefix, "corpus comment prefix")
        ->capture_default_str();
    cmd.add_option("--estimator", cfg.estimator, "copula correlation estimator")
        ->check(CLI::IsMember({"pearson-raw", "pearson-log", "normal-scores"}))
        ->capture_default_str();
    cmd.add_flag("--log-copula", cfg.log_copula, "estimate rho on logarithmized data");
    cmd.add_flag("--boundaries", cfg.boundaries, "fit the copula on boundary counts");
    cmd.add_option("--n", cfg.n, "number of copula samples")->capture_default_str();
    cmd.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    cmd.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    cmd.add_option("--emit", cfg.emit, "artifacts to write")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv", "svg"}));
}

JointFrequencyTable load_table(const RunConfig& cfg)
{
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read input '" + cfg.input + "'");
    }
    if (cfg.kind == "corpus") {
        CorpusFormat format;
        format.constituent_delimiter = cfg.constituent_delimiter;
        format.comment_prefix = cfg.comment_prefix;
        if (!cfg.subconstituent_delimiter.empty()) {
            format.mode = SubconstituentMode::Delimited;
            format.subconstituent_delimiter = cfg.subconstituent_delimiter;
        }
        return parse_segmented_corpus(in, format);
    }
    auto table = parse_frequency_table(in);
    return table.domain() == Domain::Boundaries ? from_boundaries(table) : table;
}

RhoEstimator chosen_estimator(const RunConfig& cfg)
{
    return cfg.log_copula ? RhoEstimator::PearsonLog : *parse_estimator_name(cfg.estimator);
}

std::set<ModelKind> chosen_models(const RunConfig& cfg)
{
    std::set<ModelKind> models;
    for (const auto& name : cfg.models) {
        const auto kind = parse_model_name(name);
        if (!kind || *kind == ModelKind::CopulaBoundaries) {
            throw UsageError("unknown model '" + name + "'");
        }
        models.insert(*kind);
    }
    if (cfg.boundaries) {
        models.insert(ModelKind::CopulaBoundaries);
    }
    if (models.empty()) {
        throw UsageError("select at least one model");
    }
    return models;
}

bool emits(const RunConfig& cfg, const std::string& what)
{
    return std::find(cfg.emit.begin(), cfg.emit.end(), what) != cfg.emit.end();
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UsageError("cannot write '" + path.string() + "'");
    }
    out << contents;
}

std::filesystem::path prepare_out_dir(const RunConfig& cfg)
{
    std::filesystem::path dir(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
    }
    return dir;
}

// The copula that drives sampling: boundary variant when requested.
struct SamplingModel {
    CopulaFit fit;
    bool boundaries = false;
};

SamplingModel sampling_model(const JointFrequencyTable& table, const RunConfig& cfg)
{
    if (cfg.boundaries) {
        return {fit_copula(to_boundaries(table), chosen_estimator(cfg)), true};
    }
    return {fit_copula(table, chosen_estimator(cfg)), false};
}

std::vector<LengthPair> draw(const SamplingModel& m, std::size_t n, std::uint64_t seed)
{
    auto pairs = sample_copula(m.fit.model, n, seed);
    if (m.boundaries) {
        for (auto& p : pairs) {
            p = from_boundary(p);
        }
    }
    return pairs;
}

std::vector<PlotSeries> plot_series(const ComparisonReport& report)
{
    std::vector<PlotSeries> series;
    for (const auto& m : report.models) {
        series.push_back({std::string(model_name(m.kind)), m.curve, m.rss, is_classical(m.kind)});
    }
    return series;
}

void warn_clamped(const CopulaFit& fit, std::ostream& err)
{
    if (fit.rho_clamped) {
        err << "warning: copula correlation " << format_double(fit.estimated_rho)
            << " clamped to " << format_double(fit.model.rho()) << "\n";
    }
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto models = chosen_models(cfg);
    if (cfg.n < 0) {
        throw UsageError("--n must be >= 0");
    }
    const auto table = load_table(cfg);
    ModelRequest request{models, chosen_estimator(cfg), cfg.seed, static_cast<std::size_t>(cfg.n)};
    const auto report = compare_models(table, request);

    std::optional<std::vector<LengthPair>> samples;
    const bool has_copula =
        models.contains(ModelKind::Copula) || models.contains(ModelKind::CopulaBoundaries);
    if (has_copula) {
        const auto sm = sampling_model(table, cfg);
        warn_clamped(sm.fit, err);
        if (emits(cfg, "svg") && cfg.n > 0) {
            samples = draw(sm, static_cast<std::size_t>(cfg.n), cfg.seed);
        }
    }

    const auto dir = prepare_out_dir(cfg);
    if (emits(cfg, "json")) {
        write_file(dir / "report.json", write_report(report));
    }
    if (emits(cfg, "csv")) {
        write_file(dir / "curves.csv", write_curves_csv(report));
        write_file(dir / "cells.csv", write_cells_csv(table, report));
    }
    if (emits(cfg, "svg")) {
        const auto series = plot_series(report);
        std::optional<std::span<const LengthPair>> scatter;
        if (samples) {
            scatter = std::span<const LengthPair>(*samples);
        }
        write_file(dir / "figure.svg", render_svg(table, series, scatter, SvgLayout::Composite));
    }

    out << "constructs " << table.total() << ", cells " << table.cells().size() << "\n";
    for (const auto& m : report.models) {
        out << model_name(m.kind) << " rss " << format_double(m.rss);
        if (m.infeasible_mass) {
            out << " infeasible_mass " << format_double(*m.infeasible_mass);
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 1) {
        throw UsageError("--n must be >= 1 for sample");
    }
    for (const auto& name : cfg.models) {
        if (name != "copula") {
            throw UsageError("sample draws from the copula model only, got '" + name + "'");
        }
    }
    const auto table = load_table(cfg);
    const auto sm = sampling_model(table, cfg);
    warn_clamped(sm.fit, err);
    const auto pairs = draw(sm, static_cast<std::size_t>(cfg.n), cfg.seed);

    std::ostringstream csv;
    csv << "# model=copula\n"
        << "# variant=" << (sm.boundaries ? "boundaries" : "segments") << "\n"
        << "# estimator=" << estimator_name(sm.fit.model.estimator()) << "\n"
        << "# rho=" << format_double(sm.fit.model.rho()) << "\n"
        << "# seed=" << cfg.seed << "\n"
        << "# n=" << cfg.n << "\n"
        << "x,z\n";
    for (const auto& p : pairs) {
        csv << p.x << "," << p.z << "\n";
    }

    const auto dir = prepare_out_dir(cfg);
    write_file(dir / "samples.csv", csv.str());
    if (emits(cfg, "svg")) {
        ModelRequest request{{cfg.boundaries ? ModelKind::CopulaBoundaries : ModelKind::Copula},
                             chosen_estimator(cfg), cfg.seed, static_cast<std::size_t>(cfg.n)};
        const auto report = compare_models(table, request);
        const auto series = plot_series(report);
        write_file(dir / "samples.svg",
                   render_svg(table, series, std::span<const LengthPair>(pairs),
                              SvgLayout::Composite));
    }
    out << "wrote " << pairs.size() << " samples (seed " << cfg.seed << ")\n";
    return kExitOk;
}

} // namespace

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidPair:
    case ErrorKind::EmptyConstituent:
    case ErrorKind::CountOverflow:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UOutOfRange:
        return kExitInput;
    default:
        return kExitFit;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Menzerath's law as a property of the joint length distribution", "menzerath"};
    app.require_subcommand(1);

    RunConfig fit_cfg;
    fit_cfg.models = {"hyperbolic", "altmann", "altmann-direct", "gaussian", "lognormal", "copula"};
    auto* fit = app.add_subcommand("fit", "fit models and compare Menzerath curves by RSS");
    add_common_options(*fit, fit_cfg);
    fit->add_option("--models", fit_cfg.models, "models to fit")->delimiter(',');

    RunConfig sample_cfg;
    sample_cfg.emit = {"csv", "svg"};
    auto* sample = app.add_subcommand("sample", "draw samples from the fitted Gaussian copula");
    add_common_options(*sample, sample_cfg);
    sample->add_option("--models", sample_cfg.models, "must be copula")->delimiter(',');

    std::vector<std::string> argv_storage{"menzerath"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (fit->parsed()) {
            return cmd_fit(fit_cfg, out, err);
        }
        return cmd_sample(sample_cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

} // namespace menzerath
