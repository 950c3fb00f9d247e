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

#include "uavcovert/planner.hpp"

#include "uavcovert/convex/barrier.hpp"
#include "uavcovert/convex/dinkelbach.hpp"
#include "uavcovert/covert_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace uavcovert::planner
{

using convex::Mat;
using convex::Vec;

void Scenario::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw std::invalid_argument(std::string("scenario: ") + what);
    };
    sr.validate();
    require(gamma.alpha > 0.0 && gamma.theta > 0.0 && gamma.mu > 0.0, "Gamma surrogate must be positive");
    require(sat.ell > 0.0, "satellite large-scale gain must be positive");
    require(budget.beta0_chi > 0.0 && budget.beta0_kappa > 0.0, "reference gains must be positive");
    require(budget.phi_min > 0.0 && budget.phi_min < std::numbers::pi / 2.0, "phi_min must lie in (0, pi/2)");
    require(sigma_kappa2 > 0.0 && sigma_b2 > 0.0 && sigma_w2 > 0.0, "noise variances must be positive");
    require(varpi >= 0.0 && varpi <= 1.0, "varpi must lie in [0, 1]");
    require(eps > 0.0 && eps < 0.5, "eps must lie in (0, 0.5)");
    require(p_tot > 0.0 && pa_max > 0.0, "power budgets must be positive");
    require(h_min > 0.0 && h_min < h_max, "altitude limits must satisfy 0 < H_min < H_max");
    require(r_tg > 0.0, "UE target rate must be positive");
    require(delta > 0.0 && i_max >= 1, "convergence controls must be positive");
}

double Scenario::ue_power_factor() const { return (std::exp2(r_tg) - 1.0) * sigma_kappa2 / budget.beta0_kappa; }

std::vector<GroundPos> Scenario::ground_nodes() const
{
    std::vector<GroundPos> nodes{bob, willie};
    nodes.insert(nodes.end(), ues.begin(), ues.end());
    return nodes;
}

double PowerAllocation::uav_total() const { return pj_hat + std::accumulate(pk.begin(), pk.end(), 0.0); }

std::string to_string(SolveStatus s)
{
    switch (s)
    {
    case SolveStatus::converged:
        return "converged";
    case SolveStatus::iteration_capped:
        return "iteration_capped";
    case SolveStatus::infeasible:
        return "infeasible";
    }
    return "unknown";
}

double covert_rate(const Scenario &s, const UavPlacement &pl, const PowerAllocation &pw)
{
    const double g_ab = s.sat.ell * s.mean_fading();
    const double g_ub = channel::uav_gain(pl, s.bob, s.budget.beta0_chi);
    return channel::covert_rate(pw.pa, g_ab, s.varpi, pw.pj_hat, g_ub, s.sigma_b2);
}

double phi_inverse_eps(const Scenario &s) { return analysis::phi_inverse(s.eps, s.gamma); }

double covert_power_factor(const Scenario &s, const UavPlacement &pl, double phi_inv)
{
    const double upsilon = s.budget.beta0_chi / (s.gamma.theta * s.sat.ell * channel::squared_distance(pl, s.willie));
    return phi_inv * upsilon;
}

std::vector<double> min_ue_powers(const Scenario &s, const UavPlacement &pl)
{
    const double xi = s.ue_power_factor();
    std::vector<double> pk;
    pk.reserve(s.ues.size());
    for (const auto &u : s.ues)
        pk.push_back(xi * channel::squared_distance(pl, u));
    return pk;
}

ConstraintReport check_constraints(const Scenario &s, const UavPlacement &pl, const PowerAllocation &pw, double tol)
{
    ConstraintReport rep;
    auto flag = [&](const std::string &name, double violation) {
        if (violation > rep.worst)
            rep.worst = violation;
        if (violation > tol && rep.ok)
        {
            rep.ok = false;
            rep.violated = name;
        }
    };

    const double g_uw = channel::uav_gain(pl, s.willie, s.budget.beta0_chi);
    const auto c1 = analysis::covert_constraint_satisfied(pw.pa, pw.pj_hat, g_uw, s.sat.ell, s.eps, s.gamma);
    flag("C1 (covertness)", -c1.slack);

    if (pw.pk.size() != s.ues.size())
    {
        rep.ok = false;
        rep.violated = "C2 (one power per UE)";
        return rep;
    }
    for (std::size_t k = 0; k < s.ues.size(); ++k)
    {
        const double g_uk = channel::uav_gain(pl, s.ues[k], s.budget.beta0_kappa);
        flag("C2 (UE " + std::to_string(k) + " rate)", s.r_tg - channel::ue_rate(pw.pk[k], g_uk, s.sigma_kappa2));
        flag("C4 (UE power sign)", -pw.pk[k]);
    }
    flag("C3 (UAV power budget)", pw.uav_total() - s.p_tot);
    flag("C4 (jamming power sign)", -pw.pj_hat);
    flag("C5 (Alice power)", std::max(-pw.pa, pw.pa - s.pa_max));
    flag("C6 (altitude)", std::max(s.h_min - pl.h, pl.h - s.h_max));
    const auto nodes = s.ground_nodes();
    const auto elev = channel::elevation_feasible(pl, nodes, s.budget.phi_min);
    for (double sl : elev.slack)
        flag("C7 (elevation)", -sl);
    return rep;
}

namespace
{

// Placement problems are solved in coordinates scaled by H_max.
struct Scaled
{
    double length;

    Vec point(GroundPos g) const
    {
        Vec v(3);
        v << g.x / length, g.y / length, 0.0;
        return v;
    }
    Vec point(const UavPlacement &p) const
    {
        Vec v(3);
        v << p.q.x / length, p.q.y / length, p.h / length;
        return v;
    }
    UavPlacement placement(const Vec &z) const { return {{z(0) * length, z(1) * length}, z(2) * length}; }
};

// C6 slab and C7 cones.
std::vector<convex::Constraint> geometry_constraints(const Scenario &s, const Scaled &sc)
{
    std::vector<convex::Constraint> cons;
    Vec up = Vec::Zero(3);
    up(2) = 1.0;
    cons.push_back(convex::HalfspaceConstraint{-up, -s.h_min / sc.length});
    cons.push_back(convex::HalfspaceConstraint{up, s.h_max / sc.length});

    Mat select = Mat::Zero(2, 3);
    select(0, 0) = 1.0;
    select(1, 1) = 1.0;
    Vec axis = Vec::Zero(3);
    axis(2) = 1.0 / std::tan(s.budget.phi_min);
    for (const auto &n : s.ground_nodes())
    {
        Vec off(2);
        off << n.x / sc.length, n.y / sc.length;
        cons.push_back(convex::ConeConstraint{select, off, axis});
    }
    return cons;
}

convex::BarrierOptions placement_barrier()
{
    convex::BarrierOptions opt;
    opt.tol = 1e-12;
    return opt;
}

// A strictly feasible set must leave at least this much scaled slack.
constexpr double kInteriorMargin = 1e-9;

} // namespace

double sca_surrogate(const Scenario &s, const UavPlacement &q, const UavPlacement &q_ref)
{
    const double ref = channel::squared_distance(q_ref, s.bob);
    const double dx = q_ref.q.x - s.bob.x;
    const double dy = q_ref.q.y - s.bob.y;
    const double dh = q_ref.h;
    return ref + 2.0 * (dx * (q.q.x - q_ref.q.x) + dy * (q.q.y - q_ref.q.y) + dh * (q.h - q_ref.h));
}

PlacementResult placement_subproblem(const Scenario &s, const PowerAllocation &powers, const UavPlacement &q0,
                                     const PlacementOptions &opt)
{
    PlacementResult res;
    res.placement = q0;
    const Scaled sc{s.h_max};
    const double phi_inv = phi_inverse_eps(s);
    const double xi = s.ue_power_factor();

    auto cons = geometry_constraints(s, sc);
    if (powers.pa > 0.0)
    {
        if (!(powers.pj_hat > 0.0))
        {
            res.feasible = false;
            res.reason = "C1' (no jamming power for a positive Alice power)";
            return res;
        }
        // Willie ball: d_uw^2 <= Lambda Phi^{-1}(eps).
        const double lambda = powers.pj_hat * s.budget.beta0_chi / (s.gamma.theta * powers.pa * s.sat.ell);
        cons.push_back(convex::BallConstraint{sc.point(s.willie), std::sqrt(lambda * phi_inv) / sc.length});
    }
    if (powers.pk.size() != s.ues.size())
        throw std::invalid_argument("placement_subproblem: one UE power per UE required");
    for (std::size_t k = 0; k < s.ues.size(); ++k)
        cons.push_back(convex::BallConstraint{sc.point(s.ues[k]), std::sqrt(powers.pk[k] / xi) / sc.length});

    const Vec z0 = sc.point(q0);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto &c : cons)
        worst = std::max(worst, convex::constraint_residual(c, z0));
    if (worst > 1e-8 * std::max(1.0, z0.norm()))
    {
        res.feasible = false;
        res.reason = "start placement violates the placement constraints";
        return res;
    }

    const Vec bob = sc.point(s.bob);
    auto true_objective = [&](const Vec &z) { return (z - bob).squaredNorm() * sc.length * sc.length; };
    res.objective_trace.push_back(true_objective(z0));

    const auto ip = convex::find_interior_point(cons, z0, 10.0);
    if (ip.max_residual > -kInteriorMargin)
        return res; // No interior: the start point is the only admissible placement.

    Vec current = z0;
    const auto barrier = placement_barrier();
    const int max_iter = opt.sca_to_convergence ? opt.sca_max : 1;
    for (int l = 0; l < max_iter; ++l)
    {
        convex::SmoothConvexProgram sub;
        sub.dim = 3;
        sub.constraints = cons;
        sub.objective = convex::linear_objective(2.0 * (current - bob));
        const Vec cand = convex::solve_smooth_convex(sub, ip.x, barrier).x;
        const double value = true_objective(cand);
        const double improvement = value - res.objective_trace.back();
        if (improvement < 0.0)
            break;
        current = cand;
        res.objective_trace.push_back(value);
        ++res.sca_iterations;
        if (improvement < opt.sca_tol)
            break;
    }
    res.placement = sc.placement(current);
    return res;
}

PowerResult power_subproblem(const Scenario &s, const UavPlacement &pl)
{
    PowerResult res;
    const std::size_t k_count = s.ues.size();
    const auto k = static_cast<Eigen::Index>(k_count);
    const Eigen::Index jv = k, av = k + 1, uv = k + 2, n = k + 3;

    const double p_ref = s.p_tot;
    const double factor = covert_power_factor(s, pl, phi_inverse_eps(s));
    const double g_ub = channel::uav_gain(pl, s.bob, s.budget.beta0_chi);
    const auto pk_min = min_ue_powers(s, pl);

    // Charnes-Cooper variables in units of P_tot * t * sigma_b2, with u = t * sigma_b2.
    convex::LinearProgram lp;
    lp.objective = Vec::Zero(n);
    lp.objective(av) = 1.0;
    lp.a_ineq = Mat::Zero(k + 3, n);
    lp.b_ineq = Vec::Zero(k + 3);
    lp.a_ineq(0, av) = 1.0; // covert: a <= factor * j
    lp.a_ineq(0, jv) = -factor;
    for (Eigen::Index i = 0; i < k; ++i)
    {
        lp.a_ineq(1 + i, i) = -1.0; // UE rate: k_i >= Xi d_i^2 u / P_ref
        lp.a_ineq(1 + i, uv) = pk_min[static_cast<std::size_t>(i)] / p_ref;
    }
    lp.a_ineq.row(k + 1).head(k).setOnes(); // budget: sum k + j <= P_tot u / P_ref
    lp.a_ineq(k + 1, jv) = 1.0;
    lp.a_ineq(k + 1, uv) = -s.p_tot / p_ref;
    lp.a_ineq(k + 2, av) = 1.0; // Alice power: a <= Pa_max u / P_ref
    lp.a_ineq(k + 2, uv) = -s.pa_max / p_ref;

    lp.a_eq = Mat::Zero(1, n);
    lp.b_eq = Vec::Ones(1);
    lp.a_eq(0, jv) = s.varpi * g_ub * p_ref / s.sigma_b2;
    lp.a_eq(0, uv) = 1.0;

    lp.lower = Vec::Zero(n);
    lp.lower(uv) = 1e-12;

    res.lp = convex::solve_lp(lp);
    if (res.lp.status != convex::LpStatus::optimal)
    {
        res.feasible = false;
        res.reason = res.lp.status == convex::LpStatus::infeasible
                         ? "C2/C3 (UE rate targets exceed the UAV power budget)"
                         : "power LP " + std::string(convex::to_string(res.lp.status));
        return res;
    }

    const Vec &x = res.lp.x;
    const double u = x(uv);
    res.t = u / s.sigma_b2;
    const double pj_lp = x(jv) * p_ref / u;
    res.c8_residual = std::abs(s.varpi * g_ub * pj_lp * res.t + res.t * s.sigma_b2 - 1.0);

    // Project the LP output onto the exact constraint set (removes solver-tolerance residue).
    PowerAllocation pw;
    pw.pk.resize(k_count);
    for (std::size_t i = 0; i < k_count; ++i)
        pw.pk[i] = std::max(x(static_cast<Eigen::Index>(i)) * p_ref / u, pk_min[i]);
    const double ue_sum = std::accumulate(pw.pk.begin(), pw.pk.end(), 0.0);
    pw.pj_hat = std::clamp(pj_lp, 0.0, std::max(0.0, s.p_tot - ue_sum));
    pw.pa = std::clamp(x(av) * p_ref / u, 0.0, std::min(s.pa_max, pw.pj_hat * factor));

    const double leftover = s.p_tot - pw.uav_total();
    if (leftover > 0.0)
    {
        if (s.varpi == 0.0)
            pw.pj_hat += leftover;
        else if (k_count > 0)
        {
            const double base = std::accumulate(pw.pk.begin(), pw.pk.end(), 0.0);
            for (auto &p : pw.pk)
                p += leftover * (p / base);
        }
    }

    res.powers = pw;
    res.objective = pw.pa / (s.varpi * pw.pj_hat * g_ub + s.sigma_b2);
    return res;
}

BcdStart initial_point(const Scenario &s)
{
    BcdStart st;
    const auto nodes = s.ground_nodes();
    GroundPos c{0.0, 0.0};
    for (const auto &n : nodes)
    {
        c.x += n.x / static_cast<double>(nodes.size());
        c.y += n.y / static_cast<double>(nodes.size());
    }
    double reach = 0.0;
    for (const auto &n : nodes)
        reach = std::max(reach, channel::horizontal_distance(c, n));
    const double h = std::max(s.h_min, reach * std::tan(s.budget.phi_min));

    if (h <= s.h_max)
        st.placement = {c, h};
    else
    {
        const Scaled sc{s.h_max};
        Vec guess = sc.point(c);
        guess(2) = 0.5 * (s.h_min + s.h_max) / sc.length;
        const auto ip = convex::find_interior_point(geometry_constraints(s, sc), guess, 10.0);
        if (ip.max_residual > 0.0)
        {
            st.feasible = false;
            st.reason = "C6/C7 (no placement meets every elevation cone within [H_min, H_max])";
            return st;
        }
        st.placement = sc.placement(ip.x);
    }

    st.powers.pk = min_ue_powers(s, st.placement);
    const double residual = s.p_tot - std::accumulate(st.powers.pk.begin(), st.powers.pk.end(), 0.0);
    if (residual < 0.0)
    {
        st.feasible = false;
        st.reason = "C2/C3 (UE rate targets exceed the UAV power budget at the initial placement)";
        return st;
    }
    st.powers.pj_hat = residual;
    st.powers.pa = std::min(s.pa_max, residual * covert_power_factor(s, st.placement, phi_inverse_eps(s)));
    return st;
}

Solution bcd_optimize(const Scenario &s, const BcdStart &start, const PlacementOptions &opt)
{
    Solution sol;
    sol.algorithm = "bcd";
    sol.placement = start.placement;
    sol.powers = start.powers;
    if (!start.feasible)
    {
        sol.reason = start.reason;
        return sol;
    }
    if (const auto rep = check_constraints(s, start.placement, start.powers); !rep.ok)
    {
        sol.reason = "initial point violates " + rep.violated;
        return sol;
    }

    double rb = covert_rate(s, sol.placement, sol.powers);
    sol.trace.push_back(rb);
    sol.status = SolveStatus::iteration_capped;

    for (int l = 1;; ++l)
    {
        const auto pr = placement_subproblem(s, sol.powers, sol.placement, opt);
        if (!pr.feasible)
        {
            sol.status = SolveStatus::infeasible;
            sol.reason = pr.reason;
            break;
        }
        const auto pw = power_subproblem(s, pr.placement);
        if (!pw.feasible)
        {
            sol.status = SolveStatus::infeasible;
            sol.reason = pw.reason;
            break;
        }
        const double next = covert_rate(s, pr.placement, pw.powers);
        if (next < rb * (1.0 - 1e-12))
        {
            // Block updates cannot decrease Rb in exact arithmetic; treat a rounding dip as convergence.
            sol.status = SolveStatus::converged;
            break;
        }

        sol.placement = pr.placement;
        sol.powers = pw.powers;
        sol.trace.push_back(next);
        sol.iterations.push_back({l, next, pr.sca_iterations, pr.objective_trace.back()});

        const bool done = std::abs(next - rb) < s.delta;
        rb = next;
        if (done)
        {
            sol.status = SolveStatus::converged;
            break;
        }
        if (l > s.i_max)
            break;
    }
    sol.rb = rb;
    return sol;
}

Solution bcd_optimize(const Scenario &s) { return bcd_optimize(s, initial_point(s)); }

Solution perfect_cancellation_optimize(const Scenario &s)
{
    if (s.varpi != 0.0)
        throw std::invalid_argument("perfect_cancellation_optimize requires varpi = 0");

    Solution sol;
    sol.algorithm = "dinkelbach";
    const Scaled sc{s.h_max};
    const double phi_inv = phi_inverse_eps(s);
    const double xi = s.ue_power_factor();
    const double len2 = sc.length * sc.length;
    // f(z) = (P_tot - Xi L^2 sum_k |z - u_k|^2) * kappa,  g(z) = |z - w|^2; f / g equals the Pa bound.
    const double kappa = phi_inv * s.budget.beta0_chi / (s.gamma.theta * s.sat.ell * len2);

    std::vector<Vec> ue_pts;
    for (const auto &u : s.ues)
        ue_pts.push_back(sc.point(u));
    const Vec w = sc.point(s.willie);
    const auto kk = static_cast<double>(ue_pts.size());

    convex::FractionalProgram fp;
    fp.dim = 3;
    fp.constraints = geometry_constraints(s, sc);
    fp.numerator = {
        [=](const Vec &z) {
            double sum = 0.0;
            for (const auto &u : ue_pts)
                sum += (z - u).squaredNorm();
            return (s.p_tot - xi * len2 * sum) * kappa;
        },
        [=](const Vec &z) -> Vec {
            Vec g = Vec::Zero(3);
            for (const auto &u : ue_pts)
                g += z - u;
            return -2.0 * xi * len2 * kappa * g;
        },
        [=](const Vec &) -> Mat { return -2.0 * xi * len2 * kappa * kk * Mat::Identity(3, 3); },
    };
    fp.denominator = {
        [=](const Vec &z) { return (z - w).squaredNorm(); },
        [=](const Vec &z) -> Vec { return 2.0 * (z - w); },
        [](const Vec &) -> Mat { return 2.0 * Mat::Identity(3, 3); },
    };

    GroundPos c{0.0, 0.0};
    const auto nodes = s.ground_nodes();
    for (const auto &n : nodes)
    {
        c.x += n.x / static_cast<double>(nodes.size());
        c.y += n.y / static_cast<double>(nodes.size());
    }
    Vec guess = sc.point(c);
    guess(2) = 0.5 * (s.h_min + s.h_max) / sc.length;
    const auto ip = convex::find_interior_point(fp.constraints, guess, 10.0);
    if (ip.max_residual > -kInteriorMargin)
    {
        sol.reason = "C6/C7 (no placement meets every elevation cone within [H_min, H_max])";
        return sol;
    }

    convex::BarrierOptions barrier;
    barrier.tol = 1e-11;
    const auto dr = convex::dinkelbach(fp, ip.x, s.delta, s.i_max, barrier);

    sol.placement = sc.placement(dr.x);
    sol.powers.pk = min_ue_powers(s, sol.placement);
    sol.powers.pj_hat = s.p_tot - std::accumulate(sol.powers.pk.begin(), sol.powers.pk.end(), 0.0);
    if (!(sol.powers.pj_hat > 0.0))
    {
        sol.status = SolveStatus::infeasible;
        sol.reason = "C2/C3 (UE rate targets leave no jamming power at any admissible placement)";
        return sol;
    }
    sol.powers.pa = std::min(dr.lambda, s.pa_max);

    const double snr_scale = s.sat.ell * s.mean_fading() / s.sigma_b2;
    for (std::size_t i = 0; i < dr.lambda_trace.size(); ++i)
    {
        const double pa = std::clamp(dr.lambda_trace[i], 0.0, s.pa_max);
        const double rb = std::log2(1.0 + pa * snr_scale);
        sol.trace.push_back(rb);
        sol.iterations.push_back({static_cast<int>(i) + 1, rb, 1, dr.lambda_trace[i]});
    }
    sol.rb = covert_rate(s, sol.placement, sol.powers);
    sol.status = dr.converged ? SolveStatus::converged : SolveStatus::iteration_capped;
    return sol;
}

Solution optimize(const Scenario &s)
{
    s.validate();
    return s.varpi == 0.0 ? perfect_cancellation_optimize(s) : bcd_optimize(s);
}

ValidationReport validate_solution(const Scenario &s, const Solution &sol, int trials, std::uint64_t seed)
{
    if (trials < 2)
        throw std::invalid_argument("validate_solution needs at least two trials");
    constexpr int kChunk = 1024;

    const auto &pl = sol.placement;
    const auto &pw = sol.powers;
    const double g_uw = channel::uav_gain(pl, s.willie, s.budget.beta0_chi);
    const double g_ub = channel::uav_gain(pl, s.bob, s.budget.beta0_chi);

    struct Sums
    {
        double xi = 0.0, xi2 = 0.0, rate = 0.0, rate2 = 0.0;
    };
    const int chunks = (trials + kChunk - 1) / kChunk;
    std::vector<Sums> partial(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> jam(0.0, 1.0);
        const int n = std::min(kChunk, trials - c * kChunk);
        auto &acc = partial[static_cast<std::size_t>(c)];
        for (int i = 0; i < n; ++i)
        {
            const double h_aw = channel::sample_sr_power(s.sr, rng);
            const analysis::DetectionModel dm{pw.pa, s.sat.ell * h_aw, pw.pj_hat, g_uw, s.sigma_w2};
            const double xi = analysis::min_dep(dm).xi;

            const double h_ab = channel::sample_sr_power(s.sr, rng);
            const double pj = pw.pj_hat * jam(rng);
            const double rate = channel::covert_rate(pw.pa, s.sat.ell * h_ab, s.varpi, pj, g_ub, s.sigma_b2);

            acc.xi += xi;
            acc.xi2 += xi * xi;
            acc.rate += rate;
            acc.rate2 += rate * rate;
        }
    }

    Sums total;
    for (const auto &p : partial)
    {
        total.xi += p.xi;
        total.xi2 += p.xi2;
        total.rate += p.rate;
        total.rate2 += p.rate2;
    }
    const double n = trials;
    auto stderr_of = [n](double sum, double sum2) {
        const double mean = sum / n;
        const double var = std::max(0.0, (sum2 - n * mean * mean) / (n - 1.0));
        return std::sqrt(var / n);
    };

    ValidationReport rep;
    rep.trials = trials;
    rep.xi_mc = total.xi / n;
    rep.xi_stderr = stderr_of(total.xi, total.xi2);
    rep.rate_mc = total.rate / n;
    rep.rate_stderr = stderr_of(total.rate, total.rate2);
    rep.bound = analysis::avg_min_dep_lower_bound(pw.pa, s.sat.ell, pw.pj_hat, g_uw, s.gamma).value_lb;
    rep.rb_mean_fading = covert_rate(s, pl, pw);
    rep.threshold = 1.0 - s.eps - 2.0 * rep.xi_stderr;
    rep.pass = rep.xi_mc >= rep.threshold;
    return rep;
}

} // namespace uavcovert::planner
