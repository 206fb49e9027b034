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

#include "menzerath/report.hpp"

#include "menzerath/bivariate.hpp"
#include "menzerath/boundary.hpp"
#include "menzerath/error.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace menzerath {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<ModelKind, std::string_view>, 7> kModelNames{{
    {ModelKind::Hyperbolic, "hyperbolic"},
    {ModelKind::Altmann, "altmann"},
    {ModelKind::AltmannDirect, "altmann-direct"},
    {ModelKind::Gaussian, "gaussian"},
    {ModelKind::Lognormal, "lognormal"},
    {ModelKind::Copula, "copula"},
    {ModelKind::CopulaBoundaries, "copula-boundaries"},
}};

constexpr std::array<std::pair<RhoEstimator, std::string_view>, 3> kEstimatorNames{{
    {RhoEstimator::PearsonRaw, "pearson-raw"},
    {RhoEstimator::PearsonLog, "pearson-log"},
    {RhoEstimator::NormalScores, "normal-scores"},
}};

std::optional<WeightedMoments> try_moments(const JointFrequencyTable& table, Variable v)
{
    try {
        return weighted_moments(table, v);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::LogOfNonpositive) {
            return std::nullopt;
        }
        throw;
    }
}

std::optional<double> try_correlation(const JointFrequencyTable& table, VariablePair pair)
{
    try {
        return weighted_correlation(table, pair);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::LogOfNonpositive || e.kind() == ErrorKind::DegenerateVariance) {
            return std::nullopt;
        }
        throw;
    }
}

// Lattice window spanning the observed support.
std::pair<IntRange, IntRange> observed_window(const JointFrequencyTable& table)
{
    const auto& cells = table.cells();
    IntRange xr{cells.begin()->first.x, cells.rbegin()->first.x};
    IntRange zr{cells.begin()->first.z, cells.begin()->first.z};
    for (const auto& [key, n] : cells) {
        zr.lo = std::min(zr.lo, key.z);
        zr.hi = std::max(zr.hi, key.z);
    }
    return {xr, zr};
}

ModelBlock bivariate_block(const JointFrequencyTable& table, const MalCurve& empirical,
                           Space space)
{
    const auto params = fit_bivariate(table, space);
    ModelBlock block;
    block.kind = space == Space::Raw ? ModelKind::Gaussian : ModelKind::Lognormal;
    block.space = space;
    block.derivation = space == Space::Raw
                           ? "method-of-moments bivariate normal on (x, z); y = E[z|x] / x"
                           : "method-of-moments bivariate normal on (ln x, ln z); "
                             "y = exp(alpha) x^(beta - 1), conditional median";
    block.parameters = {{"mean_x", params.mean_x}, {"mean_z", params.mean_z},
                        {"sd_x", params.sd_x},     {"sd_z", params.sd_z},
                        {"rho", params.rho}};
    const auto line = regression_line(params);
    block.parameters["alpha"] = line.alpha;
    block.parameters["beta"] = line.beta;
    block.flags["rho_degenerate"] = params.degenerate();
    const auto xs = empirical.xs();
    block.curve = predicted_mal(params, xs);
    block.rss = rss(empirical, block.curve);
    if (!params.degenerate()) {
        const auto [xr, zr] = observed_window(table);
        const auto lattice = lattice_density(params, xr, zr);
        JointProbabilityTable cells{Domain::Segments, lattice.cells};
        block.infeasible_mass = infeasible_mass(cells);
        block.parameters["window_coverage"] = lattice.coverage;
        block.cells = std::move(cells);
    }
    return block;
}

ModelBlock copula_block(const CopulaFit& fit, JointProbabilityTable cells,
                        const MalCurve& empirical, ModelKind kind)
{
    ModelBlock block;
    block.kind = kind;
    block.space = fit.model.estimator() == RhoEstimator::PearsonLog ? Space::Log : Space::Raw;
    block.estimator = fit.model.estimator();
    block.derivation = kind == ModelKind::Copula
                           ? "Gaussian copula over the empirical marginals"
                           : "Gaussian copula over boundary-count marginals (x' = x - 1, "
                             "z' = z - x), cells mapped back to segments";
    block.parameters = {{"rho", fit.model.rho()}, {"rho_estimated", fit.estimated_rho}};
    block.flags["rho_clamped"] = fit.rho_clamped;
    block.curve = predicted_mal_from_cells(cells);
    block.rss = rss(empirical, block.curve);
    block.infeasible_mass = infeasible_mass(cells);
    block.cells = std::move(cells);
    return block;
}

json curve_json(const MalCurve& curve)
{
    json out = json::array();
    for (const auto& p : curve.points) {
        out.push_back({{"x", p.x}, {"y", p.y}, {"n", p.n}});
    }
    return out;
}

json moments_json(const std::optional<WeightedMoments>& m)
{
    if (!m) {
        return nullptr;
    }
    return {{"mean", m->mean}, {"sd", m->sd}};
}

template <typename T>
json optional_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

} // namespace

std::string_view model_name(ModelKind kind)
{
    for (const auto& [k, name] : kModelNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_name(std::string_view name)
{
    for (const auto& [k, n] : kModelNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view estimator_name(RhoEstimator estimator)
{
    for (const auto& [e, name] : kEstimatorNames) {
        if (e == estimator) {
            return name;
        }
    }
    return "unknown";
}

std::optional<RhoEstimator> parse_estimator_name(std::string_view name)
{
    for (const auto& [e, n] : kEstimatorNames) {
        if (n == name) {
            return e;
        }
    }
    return std::nullopt;
}

bool is_classical(ModelKind kind)
{
    return kind != ModelKind::Copula && kind != ModelKind::CopulaBoundaries;
}

DatasetSummary summarize(const JointFrequencyTable& table)
{
    DatasetSummary s;
    s.total = table.total();
    s.cells = table.cells().size();
    s.support_x = marginal(table, Axis::X).support();
    s.support_z = marginal(table, Axis::Z).support();
    s.x = weighted_moments(table, Variable::X);
    s.z = weighted_moments(table, Variable::Z);
    s.log_x = try_moments(table, Variable::LogX);
    s.log_z = try_moments(table, Variable::LogZ);
    s.correlation_raw = try_correlation(table, VariablePair::XZ);
    s.correlation_log = try_correlation(table, VariablePair::LogXLogZ);
    return s;
}

ComparisonReport compare_models(const JointFrequencyTable& table, const ModelRequest& request)
{
    ComparisonReport report;
    report.dataset = summarize(table);
    report.empirical = empirical_mal_curve(table);
    report.seed = request.seed;
    report.samples = request.samples;
    const auto& empirical = report.empirical;
    const auto xs = empirical.xs();

    for (const ModelKind kind : request.models) {
        switch (kind) {
        case ModelKind::Hyperbolic: {
            const auto line = fit_linear(table, Space::Raw);
            const auto fit = hyperbolic_from_linear(line);
            ModelBlock block;
            block.kind = kind;
            block.derivation = "closed-form moments: z = alpha + beta x, beta = rho s_z / s_x; "
                               "y = a / x + b";
            block.parameters = {{"a", fit.a}, {"b", fit.b}, {"alpha", line.alpha},
                                {"beta", line.beta}};
            block.curve = eval_model(CurveModel{fit}, xs);
            block.rss = rss(empirical, block.curve);
            report.models.push_back(std::move(block));
            break;
        }
        case ModelKind::Altmann: {
            const auto line = fit_linear(table, Space::Log);
            const auto fit = altmann_from_loglinear(line);
            ModelBlock block;
            block.kind = kind;
            block.space = Space::Log;
            block.derivation = "closed-form log moments: ln z = alpha + beta ln x; "
                               "y = a x^(-b), b = 1 - beta, a = exp(alpha)";
            block.parameters = {{"a", fit.a},         {"b", fit.b},
                                {"log_a", line.alpha}, {"alpha", line.alpha},
                                {"beta", line.beta}};
            block.curve = eval_model(CurveModel{fit}, xs);
            block.rss = rss(empirical, block.curve);
            report.models.push_back(std::move(block));
            break;
        }
        case ModelKind::AltmannDirect: {
            const auto fit = fit_altmann_direct(empirical);
            ModelBlock block;
            block.kind = kind;
            block.space = Space::Log;
            block.derivation = "unweighted least squares of ln y on ln x over the curve points";
            block.parameters = {{"a", fit.a}, {"b", fit.b}, {"log_a", std::log(fit.a)}};
            block.curve = eval_model(CurveModel{fit}, xs);
            block.rss = rss(empirical, block.curve);
            report.models.push_back(std::move(block));
            break;
        }
        case ModelKind::Gaussian:
            report.models.push_back(bivariate_block(table, empirical, Space::Raw));
            break;
        case ModelKind::Lognormal:
            report.models.push_back(bivariate_block(table, empirical, Space::Log));
            break;
        case ModelKind::Copula: {
            auto fit = fit_copula(table, request.estimator);
            auto cells = cell_probabilities(fit.model);
            report.models.push_back(copula_block(fit, std::move(cells), empirical, kind));
            break;
        }
        case ModelKind::CopulaBoundaries: {
            auto fit = fit_boundary_copula(table, request.estimator);
            report.models.push_back(
                copula_block(fit.fit, std::move(fit.segment_cells), empirical, kind));
            break;
        }
        }
    }
    return report;
}

std::string write_report(const ComparisonReport& report)
{
    const auto& d = report.dataset;
    json dataset = {
        {"total", d.total},
        {"cells", d.cells},
        {"domain", "segments"},
        {"support_x", d.support_x},
        {"support_z", d.support_z},
        {"moments",
         {{"x", moments_json(d.x)},
          {"z", moments_json(d.z)},
          {"log_x", moments_json(d.log_x)},
          {"log_z", moments_json(d.log_z)}}},
        {"correlation", {{"raw", optional_json(d.correlation_raw)},
                         {"log", optional_json(d.correlation_log)}}},
    };

    json models = json::array();
    for (const auto& m : report.models) {
        json block = {
            {"name", model_name(m.kind)},
            {"derivation", m.derivation},
            {"space", m.space == Space::Raw ? "raw" : "log"},
            {"parameters", m.parameters},
            {"rss", m.rss},
            {"curve", curve_json(m.curve)},
        };
        if (!m.flags.empty()) {
            block["flags"] = m.flags;
        }
        if (m.estimator) {
            block["estimator"] = estimator_name(*m.estimator);
            block["sampling"] = {{"seed", report.seed}, {"n", report.samples}};
        }
        if (m.infeasible_mass) {
            block["infeasible_mass"] = *m.infeasible_mass;
        }
        models.push_back(std::move(block));
    }

    json root = {
        {"schema_version", report.schema_version},
        {"dataset", std::move(dataset)},
        {"empirical_curve", curve_json(report.empirical)},
        {"models", std::move(models)},
        {"sampling", {{"seed", report.seed}, {"n", report.samples}}},
    };
    return root.dump(2) + "\n";
}

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string write_curves_csv(const ComparisonReport& report)
{
    std::string out = "x,y_empirical";
    for (const auto& m : report.models) {
        out += ",y_";
        out += model_name(m.kind);
    }
    out += "\n";
    for (std::size_t i = 0; i < report.empirical.points.size(); ++i) {
        const auto& p = report.empirical.points[i];
        out += std::to_string(p.x) + "," + format_double(p.y);
        for (const auto& m : report.models) {
            out += "," + format_double(m.curve.points.at(i).y);
        }
        out += "\n";
    }
    return out;
}

std::string write_cells_csv(const JointFrequencyTable& table, const ComparisonReport& report)
{
    std::set<LengthPair> keys;
    for (const auto& [key, n] : table.cells()) {
        keys.insert(key);
    }
    std::vector<const ModelBlock*> joint;
    for (const auto& m : report.models) {
        if (m.cells) {
            joint.push_back(&m);
            for (const auto& [key, p] : m.cells->cells) {
                keys.insert(key);
            }
        }
    }
    std::string out = "x,z,count";
    for (const auto* m : joint) {
        out += ",p_";
        out += model_name(m->kind);
    }
    out += "\n";
    for (const auto& key : keys) {
        out += std::to_string(key.x) + "," + std::to_string(key.z) + "," +
               std::to_string(table.count(key));
        for (const auto* m : joint) {
            const auto it = m->cells->cells.find(key);
            out += "," + format_double(it == m->cells->cells.end() ? 0.0 : it->second);
        }
        out += "\n";
    }
    return out;
}

} // namespace menzerath
