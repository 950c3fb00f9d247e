// uavcovert - covert link planning for UAV-assisted satellite downlinks
// Copyright (C) 2026 The uavcovert authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavcovert/convex/dinkelbach.hpp"

#include <doctest.h>

#include <cmath>

using namespace uavcovert::convex;
using doctest::Approx;

namespace
{

Vec v3(double a, double b, double c)
{
    Vec v(3);
    v << a, b, c;
    return v;
}

SmoothObjective constant(double k)
{
    return {[k](const Vec &) { return k; }, [](const Vec &x) -> Vec { return Vec::Zero(x.size()); },
            [](const Vec &x) -> Mat { return Mat::Zero(x.size(), x.size()); }};
}

SmoothObjective squared_distance(const Vec &w, double scale = 1.0)
{
    return {[=](const Vec &x) { return scale * (x - w).squaredNorm(); },
            [=](const Vec &x) -> Vec { return 2.0 * scale * (x - w); },
            [=](const Vec &x) -> Mat { return 2.0 * scale * Mat::Identity(x.size(), x.size()); }};
}

// (k - |x - p|^2) over a ball: concave numerator.
SmoothObjective capped_paraboloid(double k, const Vec &p, double scale = 1.0)
{
    return {[=](const Vec &x) { return scale * (k - (x - p).squaredNorm()); },
            [=](const Vec &x) -> Vec { return -2.0 * scale * (x - p); },
            [=](const Vec &x) -> Mat { return -2.0 * scale * Mat::Identity(x.size(), x.size()); }};
}

} // namespace

TEST_CASE("constant numerator: nearest point to the pole")
{
    const Vec center = v3(0.0, 0.0, 0.0);
    const Vec w = v3(3.0, 0.0, 0.0);
    FractionalProgram fp{constant(2.0), squared_distance(w), {BallConstraint{center, 1.0}}, 3};
    const auto res = dinkelbach(fp, center, 1e-10, 50);
    CHECK(res.converged);
    CHECK(res.lambda == Approx(2.0 / 4.0).epsilon(1e-8));
    CHECK(res.x(0) == Approx(1.0).epsilon(1e-4));
    CHECK(res.residual < 1e-10);
}

TEST_CASE("lambda sequence is nondecreasing after the first iterate")
{
    const Vec center = v3(0.0, 0.0, 1.0);
    FractionalProgram fp{capped_paraboloid(4.0, v3(0.5, 0.2, 1.0)), squared_distance(v3(-2.0, 1.0, 0.0)),
                         {BallConstraint{center, 1.2}}, 3};
    const auto res = dinkelbach(fp, center, 1e-10, 50);
    REQUIRE(res.lambda_trace.size() >= 2);
    for (std::size_t i = 2; i < res.lambda_trace.size(); ++i)
        CHECK(res.lambda_trace[i] >= res.lambda_trace[i - 1] - 1e-12);
    CHECK(res.converged);
    CHECK(std::abs(fp.numerator.value(res.x) - res.lambda * fp.denominator.value(res.x)) < 1e-9);

    // No sampled feasible point beats the returned ratio.
    for (double a = -1.0; a <= 1.0; a += 0.1)
        for (double b = -1.0; b <= 1.0; b += 0.1)
            for (double c = -1.0; c <= 1.0; c += 0.1)
            {
                const Vec x = center + 1.2 * v3(a, b, c);
                if ((x - center).norm() > 1.2)
                    continue;
                CHECK(fp.numerator.value(x) / fp.denominator.value(x) <= res.lambda + 1e-9);
            }
}

TEST_CASE("ratio is invariant to common scaling")
{
    const Vec center = v3(0.0, 0.0, 1.0);
    const Vec p = v3(0.5, 0.2, 1.0), w = v3(-2.0, 1.0, 0.0);
    const std::vector<Constraint> cons{BallConstraint{center, 1.2}};
    const auto base = dinkelbach({capped_paraboloid(4.0, p), squared_distance(w), cons, 3}, center, 1e-11, 50);
    const auto scaled =
        dinkelbach({capped_paraboloid(4.0, p, 7.0), squared_distance(w, 7.0), cons, 3}, center, 1e-11, 50);
    CHECK(scaled.lambda == Approx(base.lambda).epsilon(1e-8));
    CHECK((scaled.x - base.x).norm() < 1e-4);
    const auto num_only =
        dinkelbach({capped_paraboloid(4.0, p, 3.0), squared_distance(w), cons, 3}, center, 1e-11, 50);
    CHECK(num_only.lambda == Approx(3.0 * base.lambda).epsilon(1e-8));
}

TEST_CASE("iteration cap is reported")
{
    const Vec center = v3(0.0, 0.0, 1.0);
    FractionalProgram fp{capped_paraboloid(4.0, v3(0.5, 0.2, 1.0)), squared_distance(v3(-2.0, 1.0, 0.0)),
                         {BallConstraint{center, 1.2}}, 3};
    const auto res = dinkelbach(fp, center, 1e-300, 1);
    CHECK_FALSE(res.converged);
}

TEST_CASE("bisection")
{
    const auto sq = [](double x) { return x * x; };
    CHECK(bisect(sq, 2.0, 0.0, 2.0, 1e-14) == Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK(bisect([](double x) { return -x; }, -0.25, 0.0, 1.0, 1e-14) == Approx(0.25));
    CHECK_THROWS_AS(bisect(sq, 9.0, 0.0, 2.0, 1e-12), std::domain_error);
    CHECK_THROWS_AS(bisect(sq, 1.0, 2.0, 0.0, 1e-12), std::domain_error);
}
