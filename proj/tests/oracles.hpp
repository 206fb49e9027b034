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

// Test-only oracles. Nothing here calls into the library's fitting code.

#include "menzerath/dist_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace menzerath::testing {

/// Replicates every cell `count` times.
inline std::vector<std::pair<std::int64_t, std::int64_t>> expand(const JointFrequencyTable& t)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& [key, n] : t.cells()) {
        for (std::int64_t i = 0; i < n; ++i) {
            out.emplace_back(key.x, key.z);
        }
    }
    return out;
}

struct PlainMoments {
    double mean;
    double sd;
};

inline PlainMoments plain_moments(const std::vector<double>& v)
{
    long double sum = 0.0L;
    for (double d : v) {
        sum += d;
    }
    const long double mean = sum / static_cast<long double>(v.size());
    long double ss = 0.0L;
    for (double d : v) {
        ss += (d - mean) * (d - mean);
    }
    return {static_cast<double>(mean),
            static_cast<double>(std::sqrt(ss / static_cast<long double>(v.size())))};
}

struct OlsLine {
    double intercept;
    double slope;
};

/// Ordinary least squares by solving the 2x2 normal equations.
inline OlsLine normal_equations(const std::vector<double>& x, const std::vector<double>& y)
{
    long double n = static_cast<long double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += static_cast<long double>(x[i]) * x[i];
        sxy += static_cast<long double>(x[i]) * y[i];
    }
    const long double det = n * sxx - sx * sx;
    const long double slope = (n * sxy - sx * sy) / det;
    const long double intercept = (sy * sxx - sx * sxy) / det;
    return {static_cast<double>(intercept), static_cast<double>(slope)};
}

/// Bivariate standard normal CDF by nested adaptive Gauss-Kronrod
/// quadrature of the density over (-inf, h] x (-inf, k].
inline double phi2_quadrature(double h, double k, double rho)
{
    using boost::math::quadrature::gauss_kronrod;
    const double c = 1.0 - rho * rho;
    const double norm = 1.0 / (2.0 * std::numbers::pi * std::sqrt(c));
    const double lo = -12.0;
    if (h <= lo || k <= lo) {
        return 0.0;
    }
    auto inner = [&](double u) {
        auto density = [&](double v) {
            return norm * std::exp(-(u * u - 2.0 * rho * u * v + v * v) / (2.0 * c));
        };
        // The integrand in v peaks at rho * u; split there for the adaptive rule.
        const double peak = std::clamp(rho * u, lo, k);
        double sum = 0.0;
        if (peak > lo) {
            sum += gauss_kronrod<double, 61>::integrate(density, lo, peak, 10, 1e-11);
        }
        if (k > peak) {
            sum += gauss_kronrod<double, 61>::integrate(density, peak, k, 10, 1e-11);
        }
        return sum;
    };
    const double mid = std::min(0.0, h);
    double total = gauss_kronrod<double, 61>::integrate(inner, lo, mid, 10, 1e-11);
    if (h > mid) {
        total += gauss_kronrod<double, 61>::integrate(inner, mid, h, 10, 1e-11);
    }
    return total;
}

/// Random segment-domain table with at least two distinct x values.
inline JointFrequencyTable random_table(std::mt19937_64& rng, std::int64_t max_x = 8,
                                        std::int64_t max_extra = 20, std::int64_t max_count = 50)
{
    std::uniform_int_distribution<int> ncells(2, 30);
    std::uniform_int_distribution<std::int64_t> xs(1, max_x);
    std::uniform_int_distribution<std::int64_t> extra(0, max_extra);
    std::uniform_int_distribution<std::int64_t> counts(1, max_count);
    while (true) {
        std::vector<CountedPair> rows;
        const int n = ncells(rng);
        for (int i = 0; i < n; ++i) {
            const auto x = xs(rng);
            rows.push_back({x, x + extra(rng), counts(rng)});
        }
        auto table = build_table(rows, Domain::Segments);
        std::int64_t first = table.cells().begin()->first.x;
        std::int64_t last = table.cells().rbegin()->first.x;
        bool z_varies = false;
        for (const auto& [key, c] : table.cells()) {
            z_varies |= key.z != table.cells().begin()->first.z;
        }
        if (first != last && z_varies) {
            return table;
        }
    }
}

} // namespace menzerath::testing
