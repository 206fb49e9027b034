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

#include <cstdint>
#include <random>

namespace menzerath {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile. Exact limits: 0 -> -inf, 1 -> +inf.
/// Throws UOutOfRange outside [0, 1].
double normal_quantile(double p);

/// P(U <= h, V <= k) for a standard bivariate normal with correlation rho.
///
/// Genz's BVNU evaluation (Drezner-Wesolowsky form, 6/12/20-point
/// Gauss-Legendre depending on |rho|), absolute error below 1e-14 in
/// double precision. Infinite h or k and |rho| == 1 are handled as exact
/// limits. Throws RhoOutOfRange for |rho| > 1.
double phi2(double h, double k, double rho);

/// Deterministic stream of standard normal deviates.
///
/// Algorithm, reproducible from the seed alone: std::mt19937_64 seeded
/// with `seed`; each uniform is ((bits >> 11) + 0.5) * 2^-53, which lies in
/// the open interval (0, 1); each normal deviate is normal_quantile() of
/// one uniform (inverse-CDF method, one engine draw per deviate).
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal() { return normal_quantile(uniform()); }

private:
    std::mt19937_64 engine_;
};

} // namespace menzerath
