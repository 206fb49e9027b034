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

#pragma once

#include "menzerath/dist_core.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace menzerath {

/// How the copula correlation is estimated from a table.
///  PearsonRaw:   weighted Pearson on (x, z).
///  PearsonLog:   weighted Pearson on (ln x, ln z).
///  NormalScores: weighted Pearson after mapping each value v to
///                Phi^-1((F(v-) + F(v)) / 2) under its own marginal.
enum class RhoEstimator { PearsonRaw, PearsonLog, NormalScores };

/// Largest |rho| a copula model accepts; estimates beyond it are clamped.
inline constexpr double kMaxCopulaRho = 1.0 - 1e-9;

double estimate_rho(const JointFrequencyTable& table, RhoEstimator estimator);

/// Gaussian copula coupling two fixed discrete marginals.
class GaussianCopulaModel {
public:
    /// Throws RhoOutOfRange unless |rho| < 1.
    GaussianCopulaModel(double rho, MarginalDistribution marginal_x,
                        MarginalDistribution marginal_z,
                        RhoEstimator estimator = RhoEstimator::PearsonRaw,
                        Domain domain = Domain::Segments);

    double rho() const noexcept { return rho_; }
    const MarginalDistribution& marginal_x() const noexcept { return marginal_x_; }
    const MarginalDistribution& marginal_z() const noexcept { return marginal_z_; }
    RhoEstimator estimator() const noexcept { return estimator_; }
    Domain domain() const noexcept { return domain_; }

private:
    double rho_;
    MarginalDistribution marginal_x_;
    MarginalDistribution marginal_z_;
    RhoEstimator estimator_;
    Domain domain_;
};

struct CopulaFit {
    GaussianCopulaModel model;
    /// Estimate before clamping into [-kMaxCopulaRho, kMaxCopulaRho].
    double estimated_rho = 0.0;
    bool rho_clamped = false;
};

/// Empirical marginals of the table plus the estimated correlation.
CopulaFit fit_copula(const JointFrequencyTable& table, RhoEstimator estimator);

/// Model-side joint distribution.
struct JointProbabilityTable {
    Domain domain = Domain::Segments;
    std::map<LengthPair, double> cells;

    double total() const;
};

/// Smallest support value whose cdf reaches u. Throws UOutOfRange unless
/// 0 < u <= 1.
std::int64_t quantile(const MarginalDistribution& marginal, double u);

/// Rectangle probabilities of the copula over the cartesian product of
/// the two marginal supports.
JointProbabilityTable cell_probabilities(const GaussianCopulaModel& model);

/// Seeded draws through the copula and the marginal quantile functions.
std::vector<LengthPair> sample_copula(const GaussianCopulaModel& model, std::size_t n,
                                      std::uint64_t seed);

/// y(x) = E[z | x] / x under the model cells; weight is the x mass.
MalCurve predicted_mal_from_cells(const JointProbabilityTable& cells);

/// Mass on segment-domain cells that cannot exist (x < 1 or z < x).
double infeasible_mass(const JointProbabilityTable& cells);

} // namespace menzerath
