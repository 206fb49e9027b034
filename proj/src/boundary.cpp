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

#include "menzerath/boundary.hpp"

#include "menzerath/error.hpp"

#include <vector>

namespace menzerath {

LengthPair to_boundary(LengthPair segments) noexcept
{
    return {segments.x - 1, segments.z - segments.x};
}

LengthPair from_boundary(LengthPair boundaries) noexcept
{
    return {boundaries.x + 1, boundaries.z + boundaries.x + 1};
}

JointFrequencyTable to_boundaries(const JointFrequencyTable& table)
{
    if (table.domain() != Domain::Segments) {
        throw Error(ErrorKind::WrongDomain, "table is already in the boundary domain");
    }
    std::vector<CountedPair> rows;
    rows.reserve(table.cells().size());
    for (const auto& [key, n] : table.cells()) {
        const auto b = to_boundary(key);
        rows.push_back({b.x, b.z, n});
    }
    return build_table(rows, Domain::Boundaries);
}

JointFrequencyTable from_boundaries(const JointFrequencyTable& table)
{
    if (table.domain() != Domain::Boundaries) {
        throw Error(ErrorKind::WrongDomain, "table is already in the segment domain");
    }
    std::vector<CountedPair> rows;
    rows.reserve(table.cells().size());
    for (const auto& [key, n] : table.cells()) {
        const auto s = from_boundary(key);
        rows.push_back({s.x, s.z, n});
    }
    return build_table(rows, Domain::Segments);
}

JointProbabilityTable from_boundaries(const JointProbabilityTable& cells)
{
    if (cells.domain != Domain::Boundaries) {
        throw Error(ErrorKind::WrongDomain, "cells are already in the segment domain");
    }
    JointProbabilityTable out{Domain::Segments, {}};
    for (const auto& [key, p] : cells.cells) {
        out.cells.emplace(from_boundary(key), p);
    }
    return out;
}

BoundaryCopulaFit fit_boundary_copula(const JointFrequencyTable& segments,
                                      RhoEstimator estimator)
{
    auto fit = fit_copula(to_boundaries(segments), estimator);
    auto cells = from_boundaries(cell_probabilities(fit.model));
    return {std::move(fit), std::move(cells)};
}

} // namespace menzerath
