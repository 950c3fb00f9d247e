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

#include "uavcovert/convex/barrier.hpp"

#include <doctest.h>

#include <random>

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

SmoothObjective neg_squared_distance(const Vec &p)
{
    return {[p](const Vec &x) { return -(x - p).squaredNorm(); },
            [p](const Vec &x) -> Vec { return -2.0 * (x - p); },
            [p](const Vec &) -> Mat { return -2.0 * Mat::Identity(p.size(), p.size()); }};
}

ConeConstraint upward_cone(double cx, double cy, double slope)
{
    Mat sel = Mat::Zero(2, 3);
    sel(0, 0) = 1.0;
    sel(1, 1) = 1.0;
    Vec off(2);
    off << cx, cy;
    return {sel, off, v3(0.0, 0.0, slope)};
}

} // namespace

TEST_CASE("linear objective over a ball has the closed-form maximizer")
{
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 20; ++trial)
    {
        const Vec c = v3(n01(rng), n01(rng), n01(rng));
        const double r = 0.5 + std::abs(n01(rng));
        const Vec d = v3(n01(rng), n01(rng), n01(rng));
        SmoothConvexProgram p{linear_objective(d), {BallConstraint{c, r}}, 3};
        const auto res = solve_smooth_convex(p, c);
        const Vec expect = c + r * d / d.norm();
        CHECK(res.objective == Approx(d.dot(expect)).epsilon(1e-8));
        CHECK((res.x - expect).norm() < 1e-3);
        CHECK(res.duality_gap <= 1e-9);
        CHECK(strictly_inside(p.constraints[0], res.x));
    }
}

TEST_CASE("projection onto a ball")
{
    const Vec c = v3(0.0, 0.0, 0.0);
    const Vec target = v3(3.0, 4.0, 0.0);
    SmoothConvexProgram p{neg_squared_distance(target), {BallConstraint{c, 1.0}}, 3};
    const auto res = solve_smooth_convex(p, c);
    CHECK((res.x - v3(0.6, 0.8, 0.0)).norm() < 1e-6);
    CHECK(res.kkt_residual < 1e-6);
}

TEST_CASE("mixed constraints agree with a rejection-sampling oracle")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial)
    {
        std::vector<Constraint> cons{
            BallConstraint{v3(0.2 * u(rng), 0.2 * u(rng), 1.0), 1.0},
            upward_cone(0.1 * u(rng), 0.1 * u(rng), 1.5),
            HalfspaceConstraint{v3(u(rng), u(rng), 1.0), 1.5},
            HalfspaceConstraint{v3(0.0, 0.0, -1.0), -0.2},
        };
        const Vec d = v3(u(rng), u(rng), u(rng));
        const auto ip = find_interior_point(cons, v3(0.0, 0.0, 1.0));
        REQUIRE(ip.max_residual < 0.0);
        const auto res = solve_smooth_convex({linear_objective(d), cons, 3}, ip.x);

        std::uniform_real_distribution<double> box(-1.5, 1.5), zbox(0.0, 2.0);
        double best = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 400000; ++i)
        {
            const Vec x = v3(box(rng), box(rng), zbox(rng));
            bool ok = true;
            for (const auto &c : cons)
                ok = ok && constraint_value(c, x) <= 0.0;
            if (ok)
                best = std::max(best, d.dot(x));
        }
        REQUIRE(std::isfinite(best));
        CHECK(res.objective >= best - 1e-9);
        CHECK(res.objective - best < 0.05 * d.norm());
        for (const auto &c : cons)
            CHECK(constraint_value(c, res.x) <= 0.0);
    }
}

TEST_CASE("constraint helpers")
{
    const BallConstraint ball{v3(0.0, 0.0, 0.0), 2.0};
    CHECK(constraint_value(ball, v3(1.0, 0.0, 0.0)) == Approx(-3.0));
    CHECK(constraint_residual(ball, v3(3.0, 0.0, 0.0)) == Approx(1.0));
    CHECK((constraint_gradient(ball, v3(1.0, 2.0, 0.0)) - v3(2.0, 4.0, 0.0)).norm() < 1e-15);
    const auto cone = upward_cone(0.0, 0.0, 1.0);
    CHECK(strictly_inside(cone, v3(0.5, 0.0, 1.0)));
    CHECK_FALSE(strictly_inside(cone, v3(2.0, 0.0, 1.0)));
    CHECK_FALSE(strictly_inside(cone, v3(0.0, 0.0, -1.0)));
    CHECK(constraint_residual(cone, v3(3.0, 4.0, 1.0)) == Approx(4.0));
    const HalfspaceConstraint hs{v3(1.0, 0.0, 0.0), 1.0};
    CHECK(constraint_residual(hs, v3(2.0, 0.0, 0.0)) == Approx(1.0));

    // Finite-difference check of the analytic derivatives.
    const Vec x = v3(0.3, -0.2, 1.1);
    const double h = 1e-6;
    for (const Constraint &c : std::vector<Constraint>{ball, cone, hs})
    {
        const Vec g = constraint_gradient(c, x);
        const Mat hess = constraint_hessian(c, x);
        for (int i = 0; i < 3; ++i)
        {
            Vec e = Vec::Zero(3);
            e(i) = h;
            CHECK((constraint_value(c, x + e) - constraint_value(c, x - e)) / (2 * h) == Approx(g(i)).epsilon(1e-6));
            const Vec dg = (constraint_gradient(c, x + e) - constraint_gradient(c, x - e)) / (2 * h);
            CHECK((dg - hess.col(i)).norm() < 1e-5);
        }
    }
}

TEST_CASE("interior point search")
{
    const std::vector<Constraint> overlap{BallConstraint{v3(0.0, 0.0, 0.0), 1.0},
                                          BallConstraint{v3(1.5, 0.0, 0.0), 1.0}};
    const auto ip = find_interior_point(overlap, v3(5.0, 5.0, 5.0));
    CHECK(ip.max_residual == Approx(-0.25).epsilon(1e-4));
    CHECK(ip.x(0) == Approx(0.75).epsilon(1e-4));

    const std::vector<Constraint> disjoint{BallConstraint{v3(0.0, 0.0, 0.0), 1.0},
                                           BallConstraint{v3(3.0, 0.0, 0.0), 1.0}};
    CHECK(find_interior_point(disjoint, v3(0.0, 0.0, 0.0)).max_residual > 0.0);
}

TEST_CASE("infeasible start is rejected")
{
    SmoothConvexProgram p{linear_objective(v3(1.0, 0.0, 0.0)), {BallConstraint{v3(0.0, 0.0, 0.0), 1.0}}, 3};
    CHECK_THROWS_AS(solve_smooth_convex(p, v3(2.0, 0.0, 0.0)), InfeasibleStart);
    CHECK_THROWS_AS(solve_smooth_convex(p, v3(1.0, 0.0, 0.0)), InfeasibleStart);
}
