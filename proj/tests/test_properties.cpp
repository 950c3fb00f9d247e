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

// Randomized invariants across modules.

#include "support.hpp"

#include "uavcovert/covert_analysis.hpp"
#include "uavcovert/planner.hpp"

#include <doctest.h>

#include <random>

using namespace uavcovert;
using doctest::Approx;

namespace
{

analysis::DetectionModel random_model(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> lg(-1.0, 1.0);
    auto pick = [&] { return std::pow(10.0, lg(rng)); };
    return {pick(), pick(), pick(), pick(), pick()};
}

// Measured shadowing rows plus further SR parameter sets with m >= 1.
std::vector<channel::SRParams> sr_rows()
{
    return {channel::SRParams::light(), channel::SRParams::average(), channel::SRParams::heavy(),
            {0.05, 2.0, 0.3},           {0.2, 5.0, 1.0},              {0.1, 1.5, 0.05},
            {0.3, 8.0, 2.0},            {0.15, 3.0, 0.8},             {0.08, 12.0, 1.5},
            {0.25, 1.0, 0.4}};
}

} // namespace

TEST_CASE("minimum DEP threshold is optimal over a dense grid")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto dm = random_model(rng);
        const auto best = analysis::min_dep(dm);
        CHECK(analysis::dep(best.tau, dm) == Approx(best.xi).epsilon(1e-12));
        const double lo = 0.5 * dm.rho1();
        const double hi = dm.rho4() * 1.5;
        double grid_min = 2.0;
        for (int i = 0; i < 10000; ++i)
            grid_min = std::min(grid_min, analysis::dep(lo + (hi - lo) * i / 9999.0, dm));
        CHECK(grid_min >= best.xi - 1e-9);
        CHECK(analysis::dep(0.99 * dm.rho1(), dm) == 1.0);
        CHECK(analysis::dep(dm.rho4(), dm) == 1.0);
    }
}

TEST_CASE("closed-form bound is strictly below the quadrature value")
{
    // Ratios from 0.1 mean power up to where alpha exp(-mu r / theta) drops to 1e-6, beyond
    // which the gap falls under the quadrature error.
    for (const auto &p : sr_rows())
    {
        const auto g = channel::gamma_from_sr(p);
        const double r_lo = 0.1 * p.mean_power();
        const double r_hi = std::max(2.0 * r_lo, g.theta / g.mu * std::log(g.alpha / 1e-6));
        double prev = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 20; ++i)
        {
            const double r = r_lo * std::pow(r_hi / r_lo, i / 19.0);
            const double lb = analysis::avg_min_dep_lower_bound(1.0, 1.0, r, 1.0, g).value_lb;
            const double quad = analysis::avg_min_dep_quadrature(1.0, 1.0, r, 1.0, p, 1e-11);
            CHECK(lb < quad);
            CHECK(lb > prev);
            CHECK(lb < 1.0);
            prev = lb;
        }
    }
}

TEST_CASE("phi is strictly increasing and its inverse round-trips")
{
    for (const auto &p : sr_rows())
    {
        const auto g = channel::gamma_from_sr(p);
        double prev = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const double x = std::pow(10.0, -4.0 + 5.0 * i / 999.0);
            const double v = analysis::phi(x, g);
            CHECK(v > prev);
            prev = v;
        }
        for (double eps : {0.005, 0.01, 0.05, 0.1})
            CHECK(std::abs(analysis::phi(analysis::phi_inverse(eps, g), g) - eps) <= analysis::kPhiInverseTol);
    }
}

TEST_CASE("covert constraint forms agree on random inputs")
{
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> lg(-2.0, 2.0);
    std::uniform_real_distribution<double> epsd(0.005, 0.1);
    const auto rows = sr_rows();
    int compared = 0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto g = channel::gamma_from_sr(rows[static_cast<std::size_t>(trial) % rows.size()]);
        const double eps = epsd(rng);
        const double pj = std::pow(10.0, lg(rng));
        const double g_uw = 1e-9 * std::pow(10.0, lg(rng));
        const double ell = 5.7e-13;
        const double boundary = pj * analysis::phi_inverse(eps, g) * g_uw / (g.theta * ell);
        const double pa = boundary * std::pow(10.0, 0.01 * lg(rng));
        if (std::abs(pa / boundary - 1.0) < 1e-9)
            continue;
        ++compared;
        CHECK(analysis::covert_constraint_satisfied(pa, pj, g_uw, ell, eps, g).satisfied == (pa <= boundary));
    }
    CHECK(compared > 990);
}

TEST_CASE("returned solutions satisfy every constraint and both covert forms agree nearby")
{
    auto s = testsupport::default_scenario().scenario;
    const double phi_inv = planner::phi_inverse_eps(s);
    std::mt19937_64 rng(303);
    std::normal_distribution<double> n01;
    for (double varpi : {0.0, 0.1})
    {
        s.varpi = varpi;
        const auto sol = planner::optimize(s);
        REQUIRE(sol.status != planner::SolveStatus::infeasible);
        const auto rep = planner::check_constraints(s, sol.placement, sol.powers, 1e-8);
        CHECK_MESSAGE(rep.ok, rep.violated);

        int disagreements = 0;
        for (int i = 0; i < 1000; ++i)
        {
            auto pl = sol.placement;
            pl.q.x += 5.0 * n01(rng);
            pl.q.y += 5.0 * n01(rng);
            pl.h += 5.0 * n01(rng);
            auto pw = sol.powers;
            pw.pa *= 1.0 + 0.01 * n01(rng);
            pw.pj_hat *= 1.0 + 0.01 * n01(rng);
            const double g_uw = channel::uav_gain(pl, s.willie, s.budget.beta0_chi);
            const double boundary = pw.pj_hat * planner::covert_power_factor(s, pl, phi_inv);
            if (std::abs(pw.pa / boundary - 1.0) < 1e-9)
                continue;
            const bool eq17 = analysis::covert_constraint_satisfied(pw.pa, pw.pj_hat, g_uw, s.sat.ell, s.eps, s.gamma)
                                  .satisfied;
            disagreements += eq17 != (pw.pa <= boundary);
        }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("perfect-cancellation solution meets the parametric stopping rule")
{
    auto s = testsupport::default_scenario().scenario;
    s.varpi = 0.0;
    const auto sol = planner::perfect_cancellation_optimize(s);
    REQUIRE(sol.status == planner::SolveStatus::converged);
    REQUIRE(sol.iterations.size() >= 2);
    const double len2 = s.h_max * s.h_max;
    const double f = sol.powers.pj_hat * planner::phi_inverse_eps(s) * s.budget.beta0_chi /
                     (s.gamma.theta * s.sat.ell * len2);
    const double g = channel::squared_distance(sol.placement, s.willie) / len2;
    const double lambda_prev = sol.iterations[sol.iterations.size() - 2].inner_value;
    CHECK(std::abs(f - lambda_prev * g) < s.delta);
}

TEST_CASE("BCD traces are nondecreasing across seeds")
{
    auto sf = testsupport::default_scenario();
    for (std::uint64_t seed : {2u, 3u, 4u, 5u})
    {
        experiment::reseed(sf, seed);
        const auto sol = planner::bcd_optimize(sf.scenario);
        if (sol.status == planner::SolveStatus::infeasible)
            continue;
        for (std::size_t i = 1; i < sol.trace.size(); ++i)
            CHECK(sol.trace[i] >= sol.trace[i - 1] - 1e-9);
        CHECK(planner::check_constraints(sf.scenario, sol.placement, sol.powers).ok);
    }
}
