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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace menzerath {
namespace {

JointFrequencyTable seg(std::vector<CountedPair> rows)
{
    return build_table(rows, Domain::Segments);
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected menzerath::Error";
    return ErrorKind::InvalidArgument;
}

MalCurve curve(std::vector<std::pair<std::int64_t, double>> pts)
{
    MalCurve c;
    for (const auto& [x, y] : pts) {
        c.points.push_back({x, y, 1.0});
    }
    return c;
}

TEST(FitLinear, ExactLines)
{
    auto fit = fit_linear(seg({{1, 3, 1}, {2, 5, 1}, {3, 7, 1}}), Space::Raw);
    EXPECT_NEAR(fit.alpha, 1.0, 1e-12);
    EXPECT_NEAR(fit.beta, 2.0, 1e-12);
    EXPECT_EQ(fit.space, Space::Raw);

    fit = fit_linear(seg({{2, 5, 1}, {4, 10, 1}}), Space::Log);
    EXPECT_NEAR(fit.beta, 1.0, 1e-12);
    EXPECT_NEAR(fit.alpha, std::log(2.5), 1e-12);
    EXPECT_NEAR(fit.alpha, 0.91629, 1e-5);
}

TEST(FitLinear, Errors)
{
    EXPECT_EQ(kind_of([] { fit_linear(seg({{2, 5, 9}}), Space::Raw); }),
              ErrorKind::DegenerateVariance);
    EXPECT_EQ(kind_of([] { fit_linear(seg({{2, 5, 1}, {2, 9, 4}}), Space::Raw); }),
              ErrorKind::DegenerateVariance);
    const std::vector<CountedPair> rows{{1, 2, 1}, {2, 5, 1}};
    const auto boundary = build_table(rows, Domain::Boundaries);
    EXPECT_EQ(kind_of([&] { fit_linear(boundary, Space::Log); }), ErrorKind::WrongDomain);
}

TEST(FitLinear, ConstantZGivesFlatLine)
{
    const auto fit = fit_linear(seg({{1, 4, 2}, {2, 4, 3}}), Space::Raw);
    EXPECT_EQ(fit.beta, 0.0);
    EXPECT_EQ(fit.alpha, 4.0);
}

TEST(HyperbolicFromLinear, Substitution)
{
    const auto h = hyperbolic_from_linear({1.0, 2.0, Space::Raw});
    EXPECT_EQ(h.a, 1.0);
    EXPECT_EQ(h.b, 2.0);
    EXPECT_DOUBLE_EQ(eval_model(h, 1.0), 3.0);

    const auto flat = hyperbolic_from_linear({0.0, 2.5, Space::Raw});
    for (double x : {1.0, 2.0, 7.0}) {
        EXPECT_DOUBLE_EQ(eval_model(flat, x), 2.5);
    }
    EXPECT_EQ(kind_of([] { hyperbolic_from_linear({0.0, 1.0, Space::Log}); }),
              ErrorKind::WrongSpace);
}

TEST(AltmannFromLoglinear, Examples)
{
    auto a = altmann_from_loglinear({std::log(2.5), 1.0, Space::Log});
    EXPECT_NEAR(a.a, 2.5, 1e-15);
    EXPECT_EQ(a.b, 0.0);

    // beta > 1 gives b < 0, an increasing curve.
    a = altmann_from_loglinear({0.2, 1.2, Space::Log});
    EXPECT_NEAR(a.b, -0.2, 1e-15);
    EXPECT_LT(eval_model(a, 1.0), eval_model(a, 2.0));

    a = altmann_from_loglinear({0.0, 0.0, Space::Log});
    EXPECT_EQ(a.a, 1.0);
    EXPECT_EQ(a.b, 1.0);

    EXPECT_EQ(kind_of([] { altmann_from_loglinear({0.0, 1.0, Space::Raw}); }),
              ErrorKind::WrongSpace);
}

TEST(FitAltmannDirect, Examples)
{
    auto a = fit_altmann_direct(curve({{1, 4.0}, {4, 2.0}}));
    EXPECT_NEAR(a.a, 4.0, 1e-12);
    EXPECT_NEAR(a.b, 0.5, 1e-12);

    a = fit_altmann_direct(curve({{1, 3.0}, {2, 3.0}, {5, 3.0}}));
    EXPECT_NEAR(a.a, 3.0, 1e-12);
    EXPECT_NEAR(a.b, 0.0, 1e-12);

    EXPECT_EQ(kind_of([] { fit_altmann_direct(curve({{1, 2.0}})); }),
              ErrorKind::DegenerateVariance);
    EXPECT_EQ(kind_of([] { fit_altmann_direct(curve({{1, 2.0}, {2, 0.0}})); }),
              ErrorKind::NonpositiveY);
}

TEST(FitAltmannDirect, RecoversExactPowerLaw)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> as(0.5, 6.0);
    std::uniform_real_distribution<double> bs(-0.8, 0.8);
    for (int trial = 0; trial < 100; ++trial) {
        const AltmannFit truth{as(rng), bs(rng)};
        MalCurve c;
        for (std::int64_t x = 1; x <= 9; x += 1 + trial % 3) {
            c.points.push_back({x, eval_model(truth, static_cast<double>(x)), 1.0});
        }
        const auto fit = fit_altmann_direct(c);
        EXPECT_NEAR(fit.a, truth.a, 1e-9);
        EXPECT_NEAR(fit.b, truth.b, 1e-9);
    }
}

TEST(EvalModel, Examples)
{
    const std::vector<std::int64_t> xs{1, 2, 4};
    auto c = eval_model(CurveModel{HyperbolicFit{1.0, 2.0}}, xs);
    ASSERT_EQ(c.points.size(), 3u);
    EXPECT_DOUBLE_EQ(c.points[0].y, 3.0);
    EXPECT_DOUBLE_EQ(c.points[1].y, 2.5);
    EXPECT_DOUBLE_EQ(c.points[2].y, 2.25);
    EXPECT_EQ(c.points[2].n, 1.0);

    const std::vector<std::int64_t> xs2{1, 4};
    c = eval_model(CurveModel{AltmannFit{4.0, 0.5}}, xs2);
    EXPECT_DOUBLE_EQ(c.points[0].y, 4.0);
    EXPECT_DOUBLE_EQ(c.points[1].y, 2.0);

    // 32^0.2 = 2 by hand.
    const std::vector<std::int64_t> xs3{1, 32};
    c = eval_model(CurveModel{AltmannFit{2.5, -0.2}}, xs3);
    EXPECT_DOUBLE_EQ(c.points[0].y, 2.5);
    EXPECT_NEAR(c.points[1].y, 5.0, 1e-12);
}

TEST(Rss, Examples)
{
    const auto a = curve({{1, 3.0}, {2, 2.5}, {3, 2.0}});
    EXPECT_EQ(rss(a, a), 0.0);
    const auto b = curve({{1, 4.0}, {2, 2.5}, {3, 1.0}});
    EXPECT_DOUBLE_EQ(rss(a, b), 2.0);
    EXPECT_EQ(rss(a, b), rss(b, a));
    EXPECT_EQ(kind_of([] { rss(curve({{1, 1.0}, {2, 1.0}}), curve({{1, 1.0}, {3, 1.0}})); }),
              ErrorKind::MismatchedSupport);
    EXPECT_EQ(kind_of([] { rss(curve({{1, 1.0}, {2, 1.0}}), curve({{1, 1.0}})); }),
              ErrorKind::MismatchedSupport);
}

TEST(DerivationChain, HyperbolicMatchesBruteForceOls)
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = testing::random_table(rng);
        std::vector<double> x, z;
        for (const auto& [xi, zi] : testing::expand(t)) {
            x.push_back(static_cast<double>(xi));
            z.push_back(static_cast<double>(zi));
        }
        const auto ols = testing::normal_equations(x, z);
        const auto h = hyperbolic_from_linear(fit_linear(t, Space::Raw));
        EXPECT_NEAR(h.a, ols.intercept, 1e-9);
        EXPECT_NEAR(h.b, ols.slope, 1e-9);
        // Through z = x y: x * y_model(x) lies on the OLS line.
        for (double xv : {1.0, 3.0, 8.0}) {
            EXPECT_NEAR(xv * eval_model(h, xv), ols.intercept + ols.slope * xv, 1e-9);
        }
    }
}

TEST(DerivationChain, AltmannMatchesBruteForceLogOls)
{
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = testing::random_table(rng);
        std::vector<double> lx, lz;
        for (const auto& [xi, zi] : testing::expand(t)) {
            lx.push_back(std::log(static_cast<double>(xi)));
            lz.push_back(std::log(static_cast<double>(zi)));
        }
        const auto ols = testing::normal_equations(lx, lz);
        const auto line = fit_linear(t, Space::Log);
        const auto a = altmann_from_loglinear(line);
        EXPECT_NEAR(a.b, 1.0 - ols.slope, 1e-9);
        EXPECT_NEAR(a.a / std::exp(ols.intercept), 1.0, 1e-9);
        // b < 0 exactly when rho * s_lz / s_lx > 1.
        const double ratio = weighted_correlation(t, VariablePair::LogXLogZ) *
                             weighted_moments(t, Variable::LogZ).sd /
                             weighted_moments(t, Variable::LogX).sd;
        EXPECT_EQ(a.b < 0.0, ratio > 1.0);
    }
}

TEST(DerivationChain, CountScalingLeavesFitsUnchanged)
{
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<std::int64_t> factor(2, 500);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = testing::random_table(rng);
        std::vector<CountedPair> scaled;
        const auto k = factor(rng);
        for (auto r : t.rows()) {
            r.count *= k;
            scaled.push_back(r);
        }
        const auto tk = seg(scaled);
        for (const auto space : {Space::Raw, Space::Log}) {
            const auto a = fit_linear(t, space);
            const auto b = fit_linear(tk, space);
            EXPECT_NEAR(a.alpha, b.alpha, 1e-12);
            EXPECT_NEAR(a.beta, b.beta, 1e-12);
        }
        const auto da = fit_altmann_direct(empirical_mal_curve(t));
        const auto db = fit_altmann_direct(empirical_mal_curve(tk));
        EXPECT_NEAR(da.a, db.a, 1e-12);
        EXPECT_NEAR(da.b, db.b, 1e-12);
    }
}

} // namespace
} // namespace menzerath
