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

#include "menzerath/copula.hpp"
#include "menzerath/dist_core.hpp"

namespace menzerath {

/// (x, z) -> (x - 1, z - x): constituent boundaries and subconstituent
/// boundaries that are not constituent boundaries.
LengthPair to_boundary(LengthPair segments) noexcept;

/// (x', z') -> (x' + 1, z' + x' + 1).
LengthPair from_boundary(LengthPair boundaries) noexcept;

/// Throws WrongDomain unless the table is in the segment domain.
JointFrequencyTable to_boundaries(const JointFrequencyTable& table);

/// Throws WrongDomain unless the table is in the boundary domain.
JointFrequencyTable from_boundaries(const JointFrequencyTable& table);
JointProbabilityTable from_boundaries(const JointProbabilityTable& cells);

struct BoundaryCopulaFit {
    /// Copula fitted on the boundary-domain table.
    CopulaFit fit;
    /// Its cell probabilities mapped back to the segment domain.
    JointProbabilityTable segment_cells;
};

/// Converts a segment table to boundaries, fits the copula there and maps
/// the model cells back. Every returned cell is feasible (z >= x >= 1).
BoundaryCopulaFit fit_boundary_copula(const JointFrequencyTable& segments,
                                      RhoEstimator estimator);

} // namespace menzerath
