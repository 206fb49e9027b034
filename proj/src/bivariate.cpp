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

#include "menzerath/bivariate.hpp"

#include "menzerath/error.hpp"
#include "menzerath/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace menzerath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_valid(const BivariateGaussianParams& p)
{
    if (!(p.sd_x > 0.0) || !(p.sd_z > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "standard deviations must be positive");
    }
    if (p.degenerate()) {
        throw Error(ErrorKind::RhoOutOfRange,
                    "correlation " + std::to_string(p.rho) + " must lie strictly inside (-1, 1)");
    }
}

// Standardized cell edges along one axis: edges[i] and edges[i + 1] bound
// the cell centered on lo + i.
std::vector<double> standardized_edges(IntRange range, double mean, double sd, Space space)
{
    std::vector<double> edges;
    edges.reserve(static_cast<std::size_t>(range.hi - range.lo + 2));
    for (std::int64_t v = range.lo; v <= range.hi + 1; ++v) {
        double edge = static_cast<double>(v) - 0.5;
        if (space == Space::Log) {
            edge = edge > 0.0 ? std::log(edge) : -kInf;
        }
        edges.push_back(std::isinf(edge) ? edge : (edge - mean) / sd);
    }
    return edges;
}

} // namespace

BivariateGaussianParams fit_bivariate(const JointFrequencyTable& table, Space space)
{
    const bool log_space = space == Space::Log;
    const auto mx = weighted_moments(table, log_space ? Variable::LogX : Variable::X);
    const auto mz = weighted_moments(table, log_space ? Variable::LogZ : Variable::Z);
    const double rho =
        weighted_correlation(table, log_space ? VariablePair::LogXLogZ : VariablePair::XZ);
    return {mx.mean, mz.mean, mx.sd, mz.sd, rho, space};
}

BivariateGaussianParams fit_bivariate(std::span<const SamplePoint> points, Space space)
{
    if (points.empty()) {
        throw Error(ErrorKind::EmptyInput, "no sample points");
    }
    const bool log_space = space == Space::Log;
    auto value = [log_space](double v) {
        if (log_space && !(v > 0.0)) {
            throw Error(ErrorKind::LogOfNonpositive,
                        "logarithm of " + std::to_string(v) + " is undefined");
        }
        return log_space ? std::log(v) : v;
    };
    const double n = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_z = 0.0;
    for (const auto& p : points) {
        mean_x += value(p.x);
        mean_z += value(p.z);
    }
    mean_x /= n;
    mean_z /= n;
    double sxx = 0.0;
    double szz = 0.0;
    double sxz = 0.0;
    for (const auto& p : points) {
        const double dx = value(p.x) - mean_x;
        const double dz = value(p.z) - mean_z;
        sxx += dx * dx;
        szz += dz * dz;
        sxz += dx * dz;
    }
    if (sxx == 0.0 || szz == 0.0) {
        throw Error(ErrorKind::DegenerateVariance,
                    std::string(sxx == 0.0 ? "x" : "z") + " takes a single value");
    }
    const double rho = std::clamp(sxz / std::sqrt(sxx * szz), -1.0, 1.0);
    return {mean_x, mean_z, std::sqrt(sxx / n), std::sqrt(szz / n), rho, space};
}

LinearFit regression_line(const BivariateGaussianParams& params)
{
    const double beta = params.rho * params.sd_z / params.sd_x;
    return {params.mean_z - beta * params.mean_x, beta, params.space};
}

LatticeDensity lattice_density(const BivariateGaussianParams& params, IntRange x_range,
                               IntRange z_range)
{
    require_valid(params);
    if (x_range.hi < x_range.lo || z_range.hi < z_range.lo) {
        throw Error(ErrorKind::InvalidArgument, "empty lattice window");
    }
    const auto ex = standardized_edges(x_range, params.mean_x, params.sd_x, params.space);
    const auto ez = standardized_edges(z_range, params.mean_z, params.sd_z, params.space);

    // Joint CDF at every pair of edges; each cell is a rectangle difference.
    const std::size_t nz = ez.size();
    std::vector<double> cdf(ex.size() * nz);
    for (std::size_t i = 0; i < ex.size(); ++i) {
        for (std::size_t j = 0; j < nz; ++j) {
            cdf[i * nz + j] = phi2(ex[i], ez[j], params.rho);
        }
    }

    LatticeDensity out;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < ex.size(); ++i) {
        for (std::size_t j = 0; j + 1 < nz; ++j) {
            const double mass = std::max(0.0, cdf[(i + 1) * nz + j + 1] - cdf[i * nz + j + 1] -
                                                  cdf[(i + 1) * nz + j] + cdf[i * nz + j]);
            const LengthPair key{x_range.lo + static_cast<std::int64_t>(i),
                                 z_range.lo + static_cast<std::int64_t>(j)};
            out.cells.emplace(key, mass);
            total += mass;
        }
    }
    out.coverage = total;
    if (total > 0.0) {
        for (auto& [key, mass] : out.cells) {
            mass /= total;
        }
    }
    return out;
}

MalCurve predicted_mal(const BivariateGaussianParams& params, std::span<const std::int64_t> xs,
                       CurveStatistic statistic)
{
    const LinearFit line = regression_line(params);
    if (params.space == Space::Raw) {
        return eval_model(CurveModel{hyperbolic_from_linear(line)}, xs);
    }
    LinearFit shifted = line;
    if (statistic == CurveStatistic::Mean) {
        shifted.alpha += params.sd_z * params.sd_z * (1.0 - params.rho * params.rho) / 2.0;
    }
    return eval_model(CurveModel{altmann_from_loglinear(shifted)}, xs);
}

std::vector<SamplePoint> sample_synthetic(const BivariateGaussianParams& params, std::size_t n,
                                          std::uint64_t seed, Discretize discretize)
{
    require_valid(params);
    NormalStream stream(seed);
    const double tail = std::sqrt(1.0 - params.rho * params.rho);
    std::vector<SamplePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = stream.normal();
        const double u2 = stream.normal();
        double x = params.mean_x + params.sd_x * u1;
        double z = params.mean_z + params.sd_z * (params.rho * u1 + tail * u2);
        if (params.space == Space::Log) {
            x = std::exp(x);
            z = std::exp(z);
        }
        if (discretize == Discretize::RoundClamp) {
            x = std::max(1.0, std::round(x));
            z = std::max(x, std::round(z));
        }
        out.push_back({x, z});
    }
    return out;
}

JointFrequencyTable table_from_samples(std::span<const SamplePoint> points, Domain domain)
{
    std::vector<CountedPair> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        if (p.x != std::trunc(p.x) || p.z != std::trunc(p.z) || std::abs(p.x) > 9.0e15 ||
            std::abs(p.z) > 9.0e15) {
            throw Error(ErrorKind::InvalidArgument, "sample coordinates must be integers");
        }
        rows.push_back({static_cast<std::int64_t>(p.x), static_cast<std::int64_t>(p.z), 1});
    }
    return build_table(rows, domain);
}

} // namespace menzerath
