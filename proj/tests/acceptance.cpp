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

// One line per acceptance check; exit status is the number of failures.

#include "menzerath/bivariate.hpp"
#include "menzerath/boundary.hpp"
#include "menzerath/classical.hpp"
#include "menzerath/copula.hpp"
#include "menzerath/ingest.hpp"
#include "menzerath/normal.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>

namespace {

using namespace menzerath;
namespace fs = std::filesystem;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void check(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

double elapsed_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(const char* f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<JointFrequencyTable> fifty_tables()
{
    std::mt19937_64 rng(2024);
    std::vector<JointFrequencyTable> out;
    for (int i = 0; i < 50; ++i) {
        out.push_back(testing::random_table(rng, 12, 30, 200));
    }
    return out;
}

JointFrequencyTable words()
{
    std::ifstream in(MENZERATH_DATA_DIR "/synthetic_words.csv");
    return parse_frequency_table(in);
}

Outcome hyperbolic_chain()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& t : fifty_tables()) {
        std::vector<double> x;
        std::vector<double> z;
        for (const auto& [a, b] : testing::expand(t)) {
            x.push_back(static_cast<double>(a));
            z.push_back(static_cast<double>(b));
        }
        const auto ols = testing::normal_equations(x, z);
        const auto fit = hyperbolic_from_linear(fit_linear(t, Space::Raw));
        worst = std::max({worst, std::abs(fit.a - ols.intercept), std::abs(fit.b - ols.slope)});
    }
    const double secs = elapsed_since(t0);
    return {worst <= 1e-9 && secs < 1.0, fmt("max |diff| %.3g over 50 tables", worst)};
}

Outcome log_chain()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst_b = 0.0;
    double worst_a = 0.0;
    for (const auto& t : fifty_tables()) {
        std::vector<double> x;
        std::vector<double> z;
        for (const auto& [a, b] : testing::expand(t)) {
            x.push_back(std::log(static_cast<double>(a)));
            z.push_back(std::log(static_cast<double>(b)));
        }
        const auto ols = testing::normal_equations(x, z);
        const auto fit = altmann_from_loglinear(fit_linear(t, Space::Log));
        const double a_ref = std::exp(ols.intercept);
        worst_b = std::max(worst_b, std::abs(fit.b - (1.0 - ols.slope)));
        worst_a = std::max(worst_a, std::abs(fit.a - a_ref) / a_ref);
    }
    const double secs = elapsed_since(t0);
    return {worst_b <= 1e-9 && worst_a <= 1e-9 && secs < 1.0,
            fmt("max |b diff| %.3g, max rel a diff %.3g", worst_b, worst_a)};
}

Outcome recovery()
{
    const auto t0 = std::chrono::steady_clock::now();
    const BivariateGaussianParams truth{0.6, 1.7, 0.5, 0.6, 0.8, Space::Log};
    const auto points = sample_synthetic(truth, 100000, 1954, Discretize::None);
    const auto fit = fit_bivariate(points, Space::Log);
    const double b = altmann_from_loglinear(regression_line(fit)).b;
    const double want = 1.0 - 0.8 * (0.6 / 0.5);
    const double secs = elapsed_since(t0);
    return {std::abs(b - want) <= 0.02 && secs < 5.0,
            fmt("b = %.5f, analytic %.5f", b, want)};
}

Outcome phi2_accuracy()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst_closed = 0.0;
    for (double rho : {-0.95, -0.5, 0.0, 0.3, 0.5, 0.9}) {
        const double want = 0.25 + std::asin(rho) / (2.0 * std::numbers::pi);
        worst_closed = std::max(worst_closed, std::abs(phi2(0.0, 0.0, rho) - want));
    }
    double worst_grid = 0.0;
    const double hs[] = {-2.5, -1.0, 0.0, 0.7, 2.0};
    const double rhos[] = {-0.9, -0.4, 0.0, 0.5, 0.95};
    for (double h : hs) {
        for (double k : hs) {
            for (double rho : rhos) {
                worst_grid = std::max(worst_grid, std::abs(phi2(h, k, rho) -
                                                           testing::phi2_quadrature(h, k, rho)));
            }
        }
    }
    const double secs = elapsed_since(t0);
    return {worst_closed <= 1e-7 && worst_grid <= 1e-7 && secs < 10.0,
            fmt("closed-form max err %.3g, 5x5x5 quadrature max err %.3g", worst_closed,
                worst_grid)};
}

Outcome copula_cells()
{
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> rho_dist(-0.95, 0.95);
    double worst_sum = 0.0;
    double worst_marginal = 0.0;
    double worst_product = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto t = testing::random_table(rng, 15, 40, 100);
        const auto mx = marginal(t, Axis::X);
        const auto mz = marginal(t, Axis::Z);
        const auto cells = cell_probabilities(GaussianCopulaModel(rho_dist(rng), mx, mz));
        worst_sum = std::max(worst_sum, std::abs(cells.total() - 1.0));
        std::map<std::int64_t, double> px;
        std::map<std::int64_t, double> pz;
        for (const auto& [key, p] : cells.cells) {
            px[key.x] += p;
            pz[key.z] += p;
        }
        for (std::size_t j = 0; j < mx.size(); ++j) {
            worst_marginal = std::max(worst_marginal, std::abs(px[mx.support()[j]] - mx.pmf()[j]));
        }
        for (std::size_t j = 0; j < mz.size(); ++j) {
            worst_marginal = std::max(worst_marginal, std::abs(pz[mz.support()[j]] - mz.pmf()[j]));
        }
        const auto indep = cell_probabilities(GaussianCopulaModel(0.0, mx, mz));
        for (std::size_t a = 0; a < mx.size(); ++a) {
            for (std::size_t b = 0; b < mz.size(); ++b) {
                worst_product = std::max(
                    worst_product, std::abs(indep.cells.at({mx.support()[a], mz.support()[b]}) -
                                            mx.pmf()[a] * mz.pmf()[b]));
            }
        }
    }
    return {worst_sum <= 1e-9 && worst_marginal <= 1e-6 && worst_product <= 1e-9,
            fmt("sum err %.3g, marginal err %.3g, independence err %.3g", worst_sum,
                worst_marginal, worst_product)};
}

Outcome sampling_agreement()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto fit = fit_copula(words(), RhoEstimator::PearsonRaw);
    constexpr std::size_t n = 1000000;
    std::map<LengthPair, std::size_t> counts;
    for (const auto& p : sample_copula(fit.model, n, 20260101)) {
        ++counts[p];
    }
    const auto cells = cell_probabilities(fit.model);
    double worst_ratio = 0.0;
    std::size_t bad = 0;
    for (const auto& [key, p] : cells.cells) {
        const auto it = counts.find(key);
        const double f = it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
        const double bound = 4.0 * std::sqrt(p * (1.0 - p) / n);
        if (std::abs(f - p) > bound) {
            ++bad;
        }
        if (bound > 0.0) {
            worst_ratio = std::max(worst_ratio, std::abs(f - p) / bound);
        }
    }
    // Every sampled cell must be a model cell.
    for (const auto& [key, c] : counts) {
        bad += cells.cells.contains(key) ? 0 : 1;
    }
    const double secs = elapsed_since(t0);
    return {bad == 0 && secs < 30.0,
            fmt("%zu cells, %zu outside bound, worst |f-p| / bound %.3f", cells.cells.size(), bad,
                worst_ratio)};
}

double curve_rss(const MalCurve& empirical, const JointProbabilityTable& cells)
{
    const auto model = predicted_mal_from_cells(cells);
    std::map<std::int64_t, double> y;
    for (const auto& p : model.points) {
        y[p.x] = p.y;
    }
    MalCurve aligned;
    for (const auto& p : empirical.points) {
        aligned.points.push_back({p.x, y.at(p.x), 1.0});
    }
    return rss(empirical, aligned);
}

Outcome beats_independence()
{
    const auto mx = MarginalDistribution::from_weights({1, 2, 3, 4}, std::vector<double>{30, 40, 20, 10});
    std::vector<std::int64_t> zs;
    std::vector<double> wz;
    for (std::int64_t z = 4; z <= 14; ++z) {
        zs.push_back(z);
        wz.push_back(static_cast<double>(12 - std::abs(z - 8)));
    }
    const auto mz = MarginalDistribution::from_weights(zs, wz);
    const GaussianCopulaModel truth(0.8, mx, mz);
    int wins = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        std::vector<CountedPair> rows;
        for (const auto& p : sample_copula(truth, 500, 1000 + trial)) {
            rows.push_back({p.x, p.z, 1});
        }
        const auto table = build_table(rows, Domain::Segments);
        const auto empirical = empirical_mal_curve(table);
        const auto fit = fit_copula(table, RhoEstimator::PearsonRaw);
        const double fitted = curve_rss(empirical, cell_probabilities(fit.model));
        const double indep = curve_rss(
            empirical, cell_probabilities(GaussianCopulaModel(0.0, fit.model.marginal_x(),
                                                              fit.model.marginal_z())));
        wins += fitted < indep ? 1 : 0;
    }
    return {wins >= 95, fmt("copula RSS below independence RSS in %d of 100 trials", wins)};
}

Outcome boundary_round_trip()
{
    if (to_boundary({2, 7}) != LengthPair{1, 5} || from_boundary({1, 5}) != LengthPair{2, 7}) {
        return {false, "worked cell (2,7) <-> (1,5) does not map"};
    }
    std::mt19937_64 rng(8);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = testing::random_table(rng, 20, 60, 1000);
        const auto b = to_boundaries(t);
        mismatches += from_boundaries(b) == t && to_boundaries(from_boundaries(b)) == b ? 0 : 1;
    }
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto t = testing::random_table(rng);
        worst = std::max(worst,
                         infeasible_mass(fit_boundary_copula(t, RhoEstimator::PearsonRaw).segment_cells));
    }
    worst = std::max(worst, infeasible_mass(
                                fit_boundary_copula(words(), RhoEstimator::PearsonRaw).segment_cells));
    return {mismatches == 0 && worst == 0.0,
            fmt("%d of 1000 round trips differ, max infeasible mass %g", mismatches, worst)};
}

Outcome increasing_curve()
{
    // Log-space slope rho * sd_z / sd_x = 0.9 * 0.8 / 0.5 = 1.44.
    const BivariateGaussianParams gen{0.8, 1.5, 0.5, 0.8, 0.9, Space::Log};
    const auto table =
        table_from_samples(sample_synthetic(gen, 5000, 7, Discretize::RoundClamp), Domain::Segments);
    const auto line = fit_linear(table, Space::Log);
    const auto fit = altmann_from_loglinear(line);
    const auto xs = empirical_mal_curve(table).xs();
    const auto curve = eval_model(CurveModel{fit}, xs);
    const auto lognormal = predicted_mal(fit_bivariate(table, Space::Log), xs);
    bool increasing = true;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        increasing &= curve.points[i].y > curve.points[i - 1].y;
        increasing &= lognormal.points[i].y > lognormal.points[i - 1].y;
    }
    return {line.beta > 1.0 && fit.b < 0.0 && increasing && xs.size() >= 3,
            fmt("fitted slope %.4f, b = %.4f, %zu support points, increasing: %s", line.beta,
                fit.b, xs.size(), increasing ? "yes" : "no")};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome reproducibility()
{
    const fs::path root = fs::temp_directory_path() / "menzerath_acceptance";
    fs::remove_all(root);
    const std::string exe = MENZERATH_CLI;
    const std::string input = MENZERATH_DATA_DIR "/synthetic_words.csv";
    double fit_secs = 0.0;
    for (const char* run : {"a", "b"}) {
        const auto dir = (root / run).string();
        const auto t0 = std::chrono::steady_clock::now();
        const std::string fit = exe + " fit --input '" + input +
                                "' --boundaries --seed 11 --emit json,csv,svg --out '" + dir +
                                "' > /dev/null";
        if (std::system(fit.c_str()) != 0) {
            return {false, "fit run failed"};
        }
        fit_secs = std::max(fit_secs, elapsed_since(t0));
        const std::string sample = exe + " sample --input '" + input +
                                   "' --seed 11 --n 100 --emit csv,svg --out '" + dir +
                                   "' > /dev/null";
        if (std::system(sample.c_str()) != 0) {
            return {false, "sample run failed"};
        }
    }
    int differing = 0;
    int compared = 0;
    for (const char* f :
         {"report.json", "curves.csv", "cells.csv", "figure.svg", "samples.csv", "samples.svg"}) {
        const auto a = slurp(root / "a" / f);
        const auto b = slurp(root / "b" / f);
        ++compared;
        differing += !a.empty() && a == b ? 0 : 1;
    }
    fs::remove_all(root);
    return {differing == 0 && fit_secs < 5.0,
            fmt("%d of %d artifacts differ or are missing, slowest fit run %.2f s", differing,
                compared, fit_secs)};
}

} // namespace

int main()
{
    check(1, "hyperbolic fit equals brute-force OLS", hyperbolic_chain);
    check(2, "log chain equals brute-force log-log OLS", log_chain);
    check(3, "log-normal exponent recovery", recovery);
    check(4, "bivariate normal CDF accuracy", phi2_accuracy);
    check(5, "copula cell probabilities", copula_cells);
    check(6, "copula sampling matches cell probabilities", sampling_agreement);
    check(7, "copula beats independence", beats_independence);
    check(8, "boundary transform round trip and feasibility", boundary_round_trip);
    check(9, "increasing Menzerath curve", increasing_curve);
    check(10, "byte-identical CLI artifacts", reproducibility);
    std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
