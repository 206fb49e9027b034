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

#include "menzerath/classical.hpp"
#include "menzerath/dist_core.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace menzerath {

/// Bivariate normal over (x, z), or over (ln x, ln z) when space is Log.
/// A fit from collinear data carries |rho| == 1; such params are
/// `degenerate()` and rejected by lattice_density and sample_synthetic.
struct BivariateGaussianParams {
    double mean_x = 0.0;
    double mean_z = 0.0;
    double sd_x = 1.0;
    double sd_z = 1.0;
    double rho = 0.0;
    Space space = Space::Raw;

    bool degenerate() const noexcept { return !(rho > -1.0 && rho < 1.0); }
};

struct SamplePoint {
    double x = 0.0;
    double z = 0.0;

    friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// None keeps real values. RoundClamp rounds both coordinates to the
/// nearest integer (halves away from zero), then raises x to at least 1,
/// then raises z to at least x.
enum class Discretize { None, RoundClamp };

/// Median de-logs the log-space regression line as is; Mean adds the
/// log-normal correction sd_z^2 (1 - rho^2) / 2 to the log intercept.
enum class CurveStatistic { Median, Mean };

/// Inclusive integer window.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct LatticeDensity {
    /// Cell masses renormalized over the window.
    std::map<LengthPair, double> cells;
    /// Mass inside the window before renormalization.
    double coverage = 0.0;
};

/// Method of moments: population means and sds plus weighted Pearson
/// correlation, in the chosen space.
BivariateGaussianParams fit_bivariate(const JointFrequencyTable& table, Space space);
BivariateGaussianParams fit_bivariate(std::span<const SamplePoint> points, Space space);

/// Regression of z on x implied by the params (log-space line for Log).
LinearFit regression_line(const BivariateGaussianParams& params);

/// Probability of each unit cell [x-1/2, x+1/2] x [z-1/2, z+1/2]. In Log
/// space the cell edges are mapped through ln before integrating; edges
/// at or below zero map to -inf.
LatticeDensity lattice_density(const BivariateGaussianParams& params, IntRange x_range,
                               IntRange z_range);

/// Raw: y = E[z | x] / x, the hyperbolic curve. Log: y = a x^(-b) from the
/// de-logged regression line.
MalCurve predicted_mal(const BivariateGaussianParams& params, std::span<const std::int64_t> xs,
                       CurveStatistic statistic = CurveStatistic::Median);

/// Seeded draws (see NormalStream for the generator). Correlates standard
/// normal pairs as (u1, rho u1 + sqrt(1 - rho^2) u2), then scales, shifts,
/// and exponentiates in Log space.
std::vector<SamplePoint> sample_synthetic(const BivariateGaussianParams& params, std::size_t n,
                                          std::uint64_t seed, Discretize discretize);

/// Counts integer-valued points into a table. Throws InvalidArgument for
/// non-integer coordinates.
JointFrequencyTable table_from_samples(std::span<const SamplePoint> points, Domain domain);

} // namespace menzerath
