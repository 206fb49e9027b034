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

#include "menzerath/copula.hpp"

#include "menzerath/error.hpp"
#include "menzerath/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace menzerath {

namespace {

std::vector<double> normal_scores(const MarginalDistribution& m)
{
    std::vector<double> scores;
    scores.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        scores.push_back(normal_quantile((m.cdf_below(i) + m.cdf()[i]) / 2.0));
    }
    return scores;
}

double score_of(const MarginalDistribution& m, const std::vector<double>& scores,
                std::int64_t value)
{
    const auto& s = m.support();
    const auto it = std::lower_bound(s.begin(), s.end(), value);
    return scores[static_cast<std::size_t>(it - s.begin())];
}

double normal_scores_correlation(const JointFrequencyTable& table)
{
    const auto mx = marginal(table, Axis::X);
    const auto mz = marginal(table, Axis::Z);
    if (mx.size() < 2 || mz.size() < 2) {
        throw Error(ErrorKind::DegenerateVariance,
                    std::string(mx.size() < 2 ? "x" : "z") + " takes a single value");
    }
    const auto sx = normal_scores(mx);
    const auto sz = normal_scores(mz);
    auto moments = [](const MarginalDistribution& m, const std::vector<double>& s) {
        double mean = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            mean += m.pmf()[i] * s[i];
        }
        double var = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            var += m.pmf()[i] * (s[i] - mean) * (s[i] - mean);
        }
        return WeightedMoments{mean, std::sqrt(var)};
    };
    const auto wx = moments(mx, sx);
    const auto wz = moments(mz, sz);
    const auto total = static_cast<double>(table.total());
    double cov = 0.0;
    for (const auto& [key, n] : table.cells()) {
        cov += static_cast<double>(n) / total * (score_of(mx, sx, key.x) - wx.mean) *
               (score_of(mz, sz, key.z) - wz.mean);
    }
    return std::clamp(cov / (wx.sd * wz.sd), -1.0, 1.0);
}

// Standardized edges: edges[0] = -inf, edges[i] = Phi^-1(cdf[i-1]),
// edges[size] = +inf.
std::vector<double> copula_edges(const MarginalDistribution& m)
{
    std::vector<double> edges;
    edges.reserve(m.size() + 1);
    edges.push_back(-std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        edges.push_back(normal_quantile(m.cdf()[i]));
    }
    edges.push_back(std::numeric_limits<double>::infinity());
    return edges;
}

double open_unit(double u)
{
    return u > 0.0 ? u : std::numeric_limits<double>::min();
}

} // namespace

double estimate_rho(const JointFrequencyTable& table, RhoEstimator estimator)
{
    switch (estimator) {
    case RhoEstimator::PearsonRaw:
        return weighted_correlation(table, VariablePair::XZ);
    case RhoEstimator::PearsonLog:
        return weighted_correlation(table, VariablePair::LogXLogZ);
    case RhoEstimator::NormalScores:
        return normal_scores_correlation(table);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown estimator");
}

GaussianCopulaModel::GaussianCopulaModel(double rho, MarginalDistribution marginal_x,
                                         MarginalDistribution marginal_z,
                                         RhoEstimator estimator, Domain domain)
    : rho_(rho), marginal_x_(std::move(marginal_x)), marginal_z_(std::move(marginal_z)),
      estimator_(estimator), domain_(domain)
{
    if (!(rho > -1.0 && rho < 1.0)) {
        throw Error(ErrorKind::RhoOutOfRange,
                    "copula correlation " + std::to_string(rho) + " must lie strictly inside (-1, 1)");
    }
}

CopulaFit fit_copula(const JointFrequencyTable& table, RhoEstimator estimator)
{
    const double estimated = estimate_rho(table, estimator);
    const double rho = std::clamp(estimated, -kMaxCopulaRho, kMaxCopulaRho);
    return {GaussianCopulaModel(rho, marginal(table, Axis::X), marginal(table, Axis::Z), estimator,
                                table.domain()),
            estimated, rho != estimated};
}

double JointProbabilityTable::total() const
{
    double sum = 0.0;
    for (const auto& [key, p] : cells) {
        sum += p;
    }
    return sum;
}

std::int64_t quantile(const MarginalDistribution& marginal, double u)
{
    if (!(u > 0.0 && u <= 1.0)) {
        throw Error(ErrorKind::UOutOfRange, "u = " + std::to_string(u) + " outside (0, 1]");
    }
    const auto& cdf = marginal.cdf();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto idx = std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    return marginal.support()[idx];
}

JointProbabilityTable cell_probabilities(const GaussianCopulaModel& model)
{
    const auto hx = copula_edges(model.marginal_x());
    const auto hz = copula_edges(model.marginal_z());
    const std::size_t nz = hz.size();
    std::vector<double> joint(hx.size() * nz);
    for (std::size_t i = 0; i < hx.size(); ++i) {
        for (std::size_t j = 0; j < nz; ++j) {
            joint[i * nz + j] = phi2(hx[i], hz[j], model.rho());
        }
    }

    JointProbabilityTable out{model.domain(), {}};
    const auto& sx = model.marginal_x().support();
    const auto& sz = model.marginal_z().support();
    for (std::size_t i = 0; i < sx.size(); ++i) {
        for (std::size_t j = 0; j < sz.size(); ++j) {
            const double p = joint[(i + 1) * nz + j + 1] - joint[i * nz + j + 1] -
                             joint[(i + 1) * nz + j] + joint[i * nz + j];
            out.cells.emplace(LengthPair{sx[i], sz[j]}, std::max(0.0, p));
        }
    }
    return out;
}

std::vector<LengthPair> sample_copula(const GaussianCopulaModel& model, std::size_t n,
                                      std::uint64_t seed)
{
    NormalStream stream(seed);
    const double rho = model.rho();
    const double tail = std::sqrt(1.0 - rho * rho);
    std::vector<LengthPair> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = stream.normal();
        const double u2 = stream.normal();
        const double ux = open_unit(normal_cdf(u1));
        const double uz = open_unit(normal_cdf(rho * u1 + tail * u2));
        out.push_back({quantile(model.marginal_x(), ux), quantile(model.marginal_z(), uz)});
    }
    return out;
}

MalCurve predicted_mal_from_cells(const JointProbabilityTable& cells)
{
    if (cells.domain != Domain::Segments) {
        throw Error(ErrorKind::WrongDomain,
                    "Menzerath curve needs segment-domain cells; map boundaries back first");
    }
    MalCurve curve;
    for (auto it = cells.cells.begin(); it != cells.cells.end();) {
        const std::int64_t x = it->first.x;
        double mass = 0.0;
        double sum_z = 0.0;
        for (; it != cells.cells.end() && it->first.x == x; ++it) {
            mass += it->second;
            sum_z += static_cast<double>(it->first.z) * it->second;
        }
        if (mass > 0.0 && x >= 1) {
            curve.points.push_back({x, sum_z / (static_cast<double>(x) * mass), mass});
        }
    }
    return curve;
}

double infeasible_mass(const JointProbabilityTable& cells)
{
    if (cells.domain != Domain::Segments) {
        throw Error(ErrorKind::WrongDomain, "infeasible mass is defined on segment-domain cells");
    }
    double mass = 0.0;
    for (const auto& [key, p] : cells.cells) {
        if (!satisfies_domain(key, Domain::Segments)) {
            mass += p;
        }
    }
    return mass;
}

} // namespace menzerath
