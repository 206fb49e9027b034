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

#include "menzerath/normal.hpp"

#include "menzerath/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/erf.hpp>

namespace menzerath {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussLegendre {
    std::array<double, 10> x;
    std::array<double, 10> w;
    int n;
};

// Half-rules (negative abscissae) of the 6, 12 and 20 point Gauss-Legendre
// rules on [-1, 1].
constexpr std::array<GaussLegendre, 3> kRules{{
    {{-0.9324695142031522, -0.6612093864662647, -0.2386191860831970},
     {0.1713244923791705, 0.3607615730481384, 0.4679139345726904},
     3},
    {{-0.9815606342467191, -0.9041172563704750, -0.7699026741943050, -0.5873179542866171,
      -0.3678314989981802, -0.1252334085114692},
     {0.04717533638651177, 0.1069393259953183, 0.1600783285433464, 0.2031674267230659,
      0.2334925365383547, 0.2491470458134029},
     6},
    {{-0.9931285991850949, -0.9639719272779138, -0.9122344282513259, -0.8391169718222188,
      -0.7463319064601508, -0.6360536807265150, -0.5108670019508271, -0.3737060887154196,
      -0.2277858511416451, -0.07652652113349733},
     {0.01761400713915212, 0.04060142980038694, 0.06267204833410906, 0.08327674157670475,
      0.1019301198172404, 0.1181945319615184, 0.1316886384491766, 0.1420961093183821,
      0.1491729864726037, 0.1527533871307259},
     10},
}};

// Upper orthant P(U > h, V > k), finite arguments, |r| < 1.
double bvnu(double h, double k, double r)
{
    const GaussLegendre& rule = std::abs(r) < 0.3 ? kRules[0]
                                : std::abs(r) < 0.75 ? kRules[1]
                                                     : kRules[2];
    double hk = h * k;
    double bvn = 0.0;
    if (std::abs(r) < 0.925) {
        const double hs = (h * h + k * k) / 2.0;
        const double asr = std::asin(r);
        for (int i = 0; i < rule.n; ++i) {
            double sn = std::sin(asr * (rule.x[i] + 1.0) / 2.0);
            bvn += rule.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
            sn = std::sin(asr * (-rule.x[i] + 1.0) / 2.0);
            bvn += rule.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
        }
        return bvn * asr / (2.0 * kTwoPi) + normal_cdf(-h) * normal_cdf(-k);
    }

    if (r < 0.0) {
        k = -k;
        hk = -hk;
    }
    const double as = (1.0 - r) * (1.0 + r);
    double a = std::sqrt(as);
    const double bs = (h - k) * (h - k);
    const double c = (4.0 - hk) / 8.0;
    const double d = (12.0 - hk) / 16.0;
    bvn = a * std::exp(-(bs / as + hk) / 2.0) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    if (hk > -160.0) {
        const double b = std::sqrt(bs);
        bvn -= std::exp(-hk / 2.0) * std::sqrt(kTwoPi) * normal_cdf(-b / a) * b *
               (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a /= 2.0;
    for (int i = 0; i < rule.n; ++i) {
        double xs = (a * (rule.x[i] + 1.0)) * (a * (rule.x[i] + 1.0));
        double rs = std::sqrt(1.0 - xs);
        bvn += a * rule.w[i] *
               (std::exp(-bs / (2.0 * xs) - hk / (1.0 + rs)) / rs -
                std::exp(-(bs / xs + hk) / 2.0) * (1.0 + c * xs * (1.0 + d * xs)));
        xs = as * (1.0 - rule.x[i]) * (1.0 - rule.x[i]) / 4.0;
        rs = std::sqrt(1.0 - xs);
        bvn += a * rule.w[i] * std::exp(-(bs / xs + hk) / 2.0) *
               (std::exp(-hk * xs / (2.0 * (1.0 + rs) * (1.0 + rs))) / rs -
                (1.0 + c * xs * (1.0 + d * xs)));
    }
    bvn = -bvn / kTwoPi;

    if (r > 0.0) {
        return bvn + normal_cdf(-std::max(h, k));
    }
    bvn = -bvn;
    if (k > h) {
        bvn += h < 0.0 ? normal_cdf(k) - normal_cdf(h) : normal_cdf(-h) - normal_cdf(-k);
    }
    return bvn;
}

} // namespace

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::UOutOfRange, "probability " + std::to_string(p) + " outside [0, 1]");
    }
    if (p == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (p == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double phi2(double h, double k, double rho)
{
    if (!(std::abs(rho) <= 1.0)) {
        throw Error(ErrorKind::RhoOutOfRange, "correlation " + std::to_string(rho) + " outside [-1, 1]");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (h == -inf || k == -inf) {
        return 0.0;
    }
    if (h == inf) {
        return normal_cdf(k);
    }
    if (k == inf) {
        return normal_cdf(h);
    }
    if (rho == 1.0) {
        return normal_cdf(std::min(h, k));
    }
    if (rho == -1.0) {
        return std::max(0.0, normal_cdf(h) - normal_cdf(-k));
    }
    return std::clamp(bvnu(-h, -k, rho), 0.0, 1.0);
}

double NormalStream::uniform()
{
    constexpr double scale = 0x1.0p-53;
    return (static_cast<double>(engine_() >> 11) + 0.5) * scale;
}

} // namespace menzerath
