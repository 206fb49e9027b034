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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace menzerath {

/// Segment domain: (constituents, subconstituents) with x >= 1, z >= x.
/// Boundary domain: (constituent boundaries, inner subconstituent
/// boundaries) with x >= 0, z >= 0 and no coupling between the two.
enum class Domain { Segments, Boundaries };

enum class Axis { X, Z };

/// XYProduct is z read as x*y; it is the same variable as Z.
enum class Variable { X, Z, XYProduct, LogX, LogZ };

enum class VariablePair { XZ, LogXLogZ };

struct LengthPair {
    std::int64_t x = 0;
    std::int64_t z = 0;

    friend auto operator<=>(const LengthPair&, const LengthPair&) = default;
};

struct CountedPair {
    std::int64_t x = 0;
    std::int64_t z = 0;
    std::int64_t count = 0;

    friend bool operator==(const CountedPair&, const CountedPair&) = default;
};

bool satisfies_domain(LengthPair pair, Domain domain) noexcept;

/// Empirical joint distribution of (x, z) counts. Immutable; build it
/// with build_table().
class JointFrequencyTable {
public:
    using Cells = std::map<LengthPair, std::int64_t>;

    Domain domain() const noexcept { return domain_; }
    const Cells& cells() const noexcept { return cells_; }
    std::int64_t total() const noexcept { return total_; }
    std::int64_t count(LengthPair pair) const;

    /// Cells in ascending (x, z) order.
    std::vector<CountedPair> rows() const;

    friend bool operator==(const JointFrequencyTable&, const JointFrequencyTable&) = default;

private:
    JointFrequencyTable(Domain domain, Cells cells, std::int64_t total);
    friend JointFrequencyTable build_table(std::span<const CountedPair>, Domain);

    Domain domain_;
    Cells cells_;
    std::int64_t total_;
};

/// Aggregates equal keys by summing. Throws InvalidPair for keys outside
/// the domain or counts < 1, EmptyInput for no rows, CountOverflow when a
/// sum leaves int64.
JointFrequencyTable build_table(std::span<const CountedPair> pairs, Domain domain);

/// Discrete distribution over a strictly ascending integer support.
class MarginalDistribution {
public:
    /// Normalizes positive weights. The last cdf entry is set to exactly 1.
    static MarginalDistribution from_weights(std::vector<std::int64_t> support,
                                             std::span<const double> weights);

    const std::vector<std::int64_t>& support() const noexcept { return support_; }
    const std::vector<double>& pmf() const noexcept { return pmf_; }
    const std::vector<double>& cdf() const noexcept { return cdf_; }
    std::size_t size() const noexcept { return support_.size(); }

    /// cdf just below support()[i]: 0 for i == 0.
    double cdf_below(std::size_t i) const noexcept { return i == 0 ? 0.0 : cdf_[i - 1]; }

    /// Weighted mean of the support values.
    double mean() const noexcept;

    friend bool operator==(const MarginalDistribution&, const MarginalDistribution&) = default;

private:
    friend MarginalDistribution marginal(const JointFrequencyTable&, Axis);
    MarginalDistribution() = default;

    std::vector<std::int64_t> support_;
    std::vector<double> pmf_;
    std::vector<double> cdf_;
};

MarginalDistribution marginal(const JointFrequencyTable& table, Axis axis);

/// Population moments (divide by total count).
struct WeightedMoments {
    double mean = 0.0;
    double sd = 0.0;
};

struct MalPoint {
    std::int64_t x = 0;
    double y = 0.0;
    /// Number of constructs of length x (empirical) or probability mass (model).
    double n = 0.0;
};

/// Menzerath curve: mean constituent length per construct length x.
struct MalCurve {
    std::vector<MalPoint> points;

    std::vector<std::int64_t> xs() const;
};

/// y(x) = E[z | x] / x. Throws WrongDomain for boundary tables.
MalCurve empirical_mal_curve(const JointFrequencyTable& table);

/// Natural logarithm for the Log variants; throws LogOfNonpositive on zeros.
WeightedMoments weighted_moments(const JointFrequencyTable& table, Variable variable);

/// Weighted Pearson correlation, clamped into [-1, 1].
/// Throws DegenerateVariance when either variable is constant.
double weighted_correlation(const JointFrequencyTable& table, VariablePair pair);

} // namespace menzerath
