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

#include <span>
#include <variant>

namespace menzerath {

enum class Space { Raw, Log };

/// z = alpha + beta * x (Raw) or ln z = alpha + beta * ln x (Log).
struct LinearFit {
    double alpha = 0.0;
    double beta = 0.0;
    Space space = Space::Raw;
};

/// y = a / x + b
struct HyperbolicFit {
    double a = 0.0;
    double b = 0.0;
};

/// y = a * x^(-b), a > 0
struct AltmannFit {
    double a = 1.0;
    double b = 0.0;
};

using CurveModel = std::variant<HyperbolicFit, AltmannFit>;

/// Regression of z on x from the table's moments: beta = rho * s_z / s_x,
/// alpha = mean_z - beta * mean_x (in log space for Space::Log).
/// Throws DegenerateVariance, WrongDomain (Log on boundary tables).
LinearFit fit_linear(const JointFrequencyTable& table, Space space);

/// Substitutes z = x*y into the raw line: a = alpha, b = beta.
HyperbolicFit hyperbolic_from_linear(const LinearFit& fit);

/// b = 1 - beta and a = exp(alpha). alpha itself is the log-scale
/// intercept mean(ln z) - (1 - b) * mean(ln x).
AltmannFit altmann_from_loglinear(const LinearFit& fit);

/// Unweighted least squares of ln y on ln x over the curve points.
/// Throws DegenerateVariance (fewer than two x values), NonpositiveY.
AltmannFit fit_altmann_direct(const MalCurve& curve);

double eval_model(const HyperbolicFit& fit, double x);
double eval_model(const AltmannFit& fit, double x);
double eval_model(const CurveModel& fit, double x);

/// Model curve at xs; every weight is 1.
MalCurve eval_model(const CurveModel& fit, std::span<const std::int64_t> xs);

/// Sum of squared differences in y over matched x values.
/// Throws MismatchedSupport when the x sets differ.
double rss(const MalCurve& empirical, const MalCurve& model);

} // namespace menzerath
