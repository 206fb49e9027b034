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

#include "menzerath/classical.hpp"

#include "menzerath/error.hpp"

#include <cmath>

namespace menzerath {

LinearFit fit_linear(const JointFrequencyTable& table, Space space)
{
    if (space == Space::Log && table.domain() != Domain::Segments) {
        throw Error(ErrorKind::WrongDomain, "log-space regression needs a segment-domain table");
    }
    const bool log_space = space == Space::Log;
    const auto mx = weighted_moments(table, log_space ? Variable::LogX : Variable::X);
    const auto mz = weighted_moments(table, log_space ? Variable::LogZ : Variable::Z);
    if (mx.sd == 0.0) {
        throw Error(ErrorKind::DegenerateVariance, "regressor x takes a single value");
    }
    // A constant z gives a flat line rather than an error.
    const double rho = mz.sd == 0.0
                           ? 0.0
                           : weighted_correlation(table, log_space ? VariablePair::LogXLogZ
                                                                   : VariablePair::XZ);
    const double beta = rho * mz.sd / mx.sd;
    return {mz.mean - beta * mx.mean, beta, space};
}

HyperbolicFit hyperbolic_from_linear(const LinearFit& fit)
{
    if (fit.space != Space::Raw) {
        throw Error(ErrorKind::WrongSpace, "hyperbolic model needs a raw-space line");
    }
    return {fit.alpha, fit.beta};
}

AltmannFit altmann_from_loglinear(const LinearFit& fit)
{
    if (fit.space != Space::Log) {
        throw Error(ErrorKind::WrongSpace, "Altmann model needs a log-space line");
    }
    return {std::exp(fit.alpha), 1.0 - fit.beta};
}

AltmannFit fit_altmann_direct(const MalCurve& curve)
{
    const auto& pts = curve.points;
    for (const auto& p : pts) {
        if (!(p.y > 0.0)) {
            throw Error(ErrorKind::NonpositiveY, "y(" + std::to_string(p.x) + ") is not positive");
        }
        if (p.x < 1) {
            throw Error(ErrorKind::InvalidArgument, "curve x values must be >= 1");
        }
    }
    if (pts.size() < 2) {
        throw Error(ErrorKind::DegenerateVariance, "need at least two distinct x values");
    }
    const double m = static_cast<double>(pts.size());
    double mean_lx = 0.0;
    double mean_ly = 0.0;
    for (const auto& p : pts) {
        mean_lx += std::log(static_cast<double>(p.x));
        mean_ly += std::log(p.y);
    }
    mean_lx /= m;
    mean_ly /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : pts) {
        const double dx = std::log(static_cast<double>(p.x)) - mean_lx;
        sxx += dx * dx;
        sxy += dx * (std::log(p.y) - mean_ly);
    }
    if (sxx == 0.0) {
        throw Error(ErrorKind::DegenerateVariance, "need at least two distinct x values");
    }
    const double slope = sxy / sxx;
    return {std::exp(mean_ly - slope * mean_lx), -slope};
}

double eval_model(const HyperbolicFit& fit, double x)
{
    return fit.a / x + fit.b;
}

double eval_model(const AltmannFit& fit, double x)
{
    return fit.a * std::pow(x, -fit.b);
}

double eval_model(const CurveModel& fit, double x)
{
    return std::visit([x](const auto& f) { return eval_model(f, x); }, fit);
}

MalCurve eval_model(const CurveModel& fit, std::span<const std::int64_t> xs)
{
    MalCurve curve;
    curve.points.reserve(xs.size());
    for (const auto x : xs) {
        curve.points.push_back({x, eval_model(fit, static_cast<double>(x)), 1.0});
    }
    return curve;
}

double rss(const MalCurve& empirical, const MalCurve& model)
{
    if (empirical.points.size() != model.points.size()) {
        throw Error(ErrorKind::MismatchedSupport, "curves have different numbers of points");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < empirical.points.size(); ++i) {
        const auto& e = empirical.points[i];
        const auto& m = model.points[i];
        if (e.x != m.x) {
            throw Error(ErrorKind::MismatchedSupport,
                        "x " + std::to_string(e.x) + " vs " + std::to_string(m.x));
        }
        const double d = e.y - m.y;
        sum += d * d;
    }
    return sum;
}

} // namespace menzerath
