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

#include "menzerath/dist_core.hpp"

#include "menzerath/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace menzerath {

namespace {

std::string pair_text(LengthPair p)
{
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.z) + ")";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::CountOverflow, "count sum exceeds 2^63-1");
    }
    return out;
}

bool is_log(Variable v) { return v == Variable::LogX || v == Variable::LogZ; }

Axis axis_of(Variable v)
{
    return (v == Variable::X || v == Variable::LogX) ? Axis::X : Axis::Z;
}

double transform(std::int64_t value, bool log_space)
{
    return log_space ? std::log(static_cast<double>(value)) : static_cast<double>(value);
}

void require_log_defined(const MarginalDistribution& m, bool log_space)
{
    if (log_space && m.support().front() <= 0) {
        throw Error(ErrorKind::LogOfNonpositive,
                    "logarithm of " + std::to_string(m.support().front()) + " is undefined");
    }
}

WeightedMoments moments_of(const MarginalDistribution& m, bool log_space)
{
    require_log_defined(m, log_space);
    const auto& support = m.support();
    const auto& pmf = m.pmf();
    if (support.size() == 1) {
        return {transform(support.front(), log_space), 0.0};
    }
    double mean = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        mean += pmf[i] * transform(support[i], log_space);
    }
    double var = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const double d = transform(support[i], log_space) - mean;
        var += pmf[i] * d * d;
    }
    return {mean, std::sqrt(var)};
}

} // namespace

bool satisfies_domain(LengthPair pair, Domain domain) noexcept
{
    if (domain == Domain::Segments) {
        return pair.x >= 1 && pair.z >= pair.x;
    }
    return pair.x >= 0 && pair.z >= 0;
}

JointFrequencyTable::JointFrequencyTable(Domain domain, Cells cells, std::int64_t total)
    : domain_(domain), cells_(std::move(cells)), total_(total)
{
}

std::int64_t JointFrequencyTable::count(LengthPair pair) const
{
    const auto it = cells_.find(pair);
    return it == cells_.end() ? 0 : it->second;
}

std::vector<CountedPair> JointFrequencyTable::rows() const
{
    std::vector<CountedPair> out;
    out.reserve(cells_.size());
    for (const auto& [key, n] : cells_) {
        out.push_back({key.x, key.z, n});
    }
    return out;
}

JointFrequencyTable build_table(std::span<const CountedPair> pairs, Domain domain)
{
    if (pairs.empty()) {
        throw Error(ErrorKind::EmptyInput, "no (x, z, count) rows");
    }
    JointFrequencyTable::Cells cells;
    std::int64_t total = 0;
    for (const auto& row : pairs) {
        const LengthPair key{row.x, row.z};
        if (!satisfies_domain(key, domain)) {
            throw Error(ErrorKind::InvalidPair,
                        pair_text(key) + (domain == Domain::Segments
                                              ? " violates x >= 1, z >= x"
                                              : " violates x >= 0, z >= 0"));
        }
        if (row.count < 1) {
            throw Error(ErrorKind::InvalidPair,
                        "count " + std::to_string(row.count) + " for " + pair_text(key) +
                            " must be >= 1");
        }
        auto& slot = cells[key];
        slot = checked_add(slot, row.count);
        total = checked_add(total, row.count);
    }
    return JointFrequencyTable(domain, std::move(cells), total);
}

MarginalDistribution MarginalDistribution::from_weights(std::vector<std::int64_t> support,
                                                        std::span<const double> weights)
{
    if (support.empty() || support.size() != weights.size()) {
        throw Error(ErrorKind::InvalidArgument, "support and weights must be nonempty and equal length");
    }
    if (!std::is_sorted(support.begin(), support.end()) ||
        std::adjacent_find(support.begin(), support.end()) != support.end()) {
        throw Error(ErrorKind::InvalidArgument, "support must be strictly ascending");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::InvalidArgument, "weights must be positive and finite");
        }
        sum += w;
    }
    MarginalDistribution m;
    m.support_ = std::move(support);
    m.pmf_.reserve(weights.size());
    m.cdf_.reserve(weights.size());
    double running = 0.0;
    for (double w : weights) {
        m.pmf_.push_back(w / sum);
        running += w;
        m.cdf_.push_back(std::min(1.0, running / sum));
    }
    m.cdf_.back() = 1.0;
    return m;
}

double MarginalDistribution::mean() const noexcept
{
    double mean = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        mean += pmf_[i] * static_cast<double>(support_[i]);
    }
    return mean;
}

MarginalDistribution marginal(const JointFrequencyTable& table, Axis axis)
{
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& [key, n] : table.cells()) {
        auto& slot = counts[axis == Axis::X ? key.x : key.z];
        slot += n;
    }
    const auto total = static_cast<double>(table.total());
    MarginalDistribution m;
    m.support_.reserve(counts.size());
    std::int64_t running = 0;
    for (const auto& [value, n] : counts) {
        running += n;
        m.support_.push_back(value);
        m.pmf_.push_back(static_cast<double>(n) / total);
        m.cdf_.push_back(static_cast<double>(running) / total);
    }
    m.cdf_.back() = 1.0;
    return m;
}

std::vector<std::int64_t> MalCurve::xs() const
{
    std::vector<std::int64_t> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(p.x);
    }
    return out;
}

MalCurve empirical_mal_curve(const JointFrequencyTable& table)
{
    if (table.domain() != Domain::Segments) {
        throw Error(ErrorKind::WrongDomain,
                    "Menzerath curve needs a segment-domain table; convert boundaries first");
    }
    MalCurve curve;
    const auto& cells = table.cells();
    for (auto it = cells.begin(); it != cells.end();) {
        const std::int64_t x = it->first.x;
        long double sum_z = 0.0L;
        std::int64_t n = 0;
        for (; it != cells.end() && it->first.x == x; ++it) {
            sum_z += static_cast<long double>(it->first.z) * static_cast<long double>(it->second);
            n += it->second;
        }
        const double y = static_cast<double>(sum_z / (static_cast<long double>(x) *
                                                      static_cast<long double>(n)));
        curve.points.push_back({x, y, static_cast<double>(n)});
    }
    return curve;
}

WeightedMoments weighted_moments(const JointFrequencyTable& table, Variable variable)
{
    return moments_of(marginal(table, axis_of(variable)), is_log(variable));
}

double weighted_correlation(const JointFrequencyTable& table, VariablePair pair)
{
    const bool log_space = pair == VariablePair::LogXLogZ;
    const auto mx = moments_of(marginal(table, Axis::X), log_space);
    const auto mz = moments_of(marginal(table, Axis::Z), log_space);
    if (mx.sd == 0.0 || mz.sd == 0.0) {
        throw Error(ErrorKind::DegenerateVariance,
                    std::string(mx.sd == 0.0 ? "x" : "z") + " takes a single value");
    }
    const auto total = static_cast<double>(table.total());
    double cov = 0.0;
    for (const auto& [key, n] : table.cells()) {
        const double w = static_cast<double>(n) / total;
        cov += w * (transform(key.x, log_space) - mx.mean) * (transform(key.z, log_space) - mz.mean);
    }
    return std::clamp(cov / (mx.sd * mz.sd), -1.0, 1.0);
}

} // namespace menzerath
