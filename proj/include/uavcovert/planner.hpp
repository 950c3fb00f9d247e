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

#ifndef UAVCOVERT_PLANNER_HPP
#define UAVCOVERT_PLANNER_HPP

#include "uavcovert/channel_model.hpp"
#include "uavcovert/convex/lp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uavcovert::planner
{

using channel::GammaApprox;
using channel::GroundPos;
using channel::SatelliteLink;
using channel::SRParams;
using channel::UavLinkBudget;
using channel::UavPlacement;

/// Full problem instance, SI units throughout (W, m, rad, linear gains).
struct Scenario
{
    SRParams sr;
    GammaApprox gamma;
    SatelliteLink sat;
    UavLinkBudget budget;
    GroundPos bob;
    GroundPos willie;
    std::vector<GroundPos> ues;
    double sigma_kappa2 = 0.0;
    double sigma_b2 = 0.0;
    double sigma_w2 = 0.0;
    double varpi = 0.0;
    double eps = 0.01;
    double p_tot = 1.0;
    double pa_max = 10.0;
    double h_min = 50.0;
    double h_max = 500.0;
    double r_tg = 6.0;
    double delta = 1e-6;
    int i_max = 50;

    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;

    /// Xi = (2^R_tg - 1) sigma_kappa2 / beta0_kappa: UE power per squared meter of distance.
    double ue_power_factor() const;

    /// Average squared SR gain used for the deterministic covert rate.
    double mean_fading() const { return sr.mean_power(); }

    /// Bob, Willie and every UE; the nodes subject to the elevation cones.
    std::vector<GroundPos> ground_nodes() const;
};

struct PowerAllocation
{
    std::vector<double> pk;
    double pj_hat = 0.0;
    double pa = 0.0;

    double uav_total() const;
};

enum class SolveStatus
{
    converged,
    iteration_capped,
    infeasible,
};

std::string to_string(SolveStatus s);

/// Per-outer-iteration diagnostics.
struct IterationRecord
{
    int iteration = 0;
    double rb = 0.0;
    int inner_iterations = 0; // SCA iterations (BCD) or barrier solves (Dinkelbach)
    double inner_value = 0.0; // |q - b|^2 after the placement step (BCD) or lambda (Dinkelbach)
};

struct Solution
{
    std::string algorithm; // "bcd" or "dinkelbach"
    UavPlacement placement;
    PowerAllocation powers;
    double rb = 0.0;
    std::vector<double> trace;
    std::vector<IterationRecord> iterations;
    SolveStatus status = SolveStatus::infeasible;
    std::string reason; // violated constraint when infeasible
};

/// Deterministic covert rate at mean fading with jamming at its maximum Pj_hat.
double covert_rate(const Scenario &s, const UavPlacement &pl, const PowerAllocation &pw);

/// Covert constraint factor Phi^{-1}(eps) * Upsilon, so that the covert constraint reads Pa <= Pj_hat * factor.
double covert_power_factor(const Scenario &s, const UavPlacement &pl, double phi_inv);

/// Phi^{-1}(eps) for the scenario's Gamma surrogate.
double phi_inverse_eps(const Scenario &s);

struct ConstraintReport
{
    bool ok = true;
    std::string violated; // first violated constraint, empty when ok
    double worst = 0.0;   // largest scaled violation
};

/// Checks C1 (closed-form covert bound), C2-C7 with the given tolerance.
ConstraintReport check_constraints(const Scenario &s, const UavPlacement &pl, const PowerAllocation &pw,
                                   double tol = 1e-8);

/// Minimum UE powers Xi * (|q - u_k|^2 + H^2) meeting R_tg with equality.
std::vector<double> min_ue_powers(const Scenario &s, const UavPlacement &pl);

struct PlacementOptions
{
    double sca_tol = 1e-6; // m^2 change of |q - b|^2
    int sca_max = 30;
    bool sca_to_convergence = true; // false: one surrogate solve per call
};

struct PlacementResult
{
    UavPlacement placement;
    std::vector<double> objective_trace; // true |q - b|^2 (3D) per SCA iterate, starting at q0
    int sca_iterations = 0;
    bool feasible = true;
    std::string reason;
};

/// Maximizes the UAV-Bob distance with powers fixed, by SCA over second-order cone surrogates.
PlacementResult placement_subproblem(const Scenario &s, const PowerAllocation &powers, const UavPlacement &q0,
                                     const PlacementOptions &opt = {});

/// Linear minorant of |q - b|^2 (3D) at q_ref.
double sca_surrogate(const Scenario &s, const UavPlacement &q, const UavPlacement &q_ref);

struct PowerResult
{
    PowerAllocation powers;
    bool feasible = true;
    std::string reason;
    double t = 0.0;              // Charnes-Cooper scale 1 / (varpi Pj_hat g_ub + sigma_b2)
    double objective = 0.0;      // Pa / (varpi Pj_hat g_ub + sigma_b2)
    double c8_residual = 0.0;    // |varpi g_ub Pj_hat t + t sigma_b2 - 1|
    convex::LpResult lp;
};

/// Optimal powers for a fixed placement via the Charnes-Cooper linear program.
/// Power not needed by the optimum is assigned to jamming when varpi = 0 and spread over the
/// UEs otherwise (left unused when there are none); neither changes the objective.
PowerResult power_subproblem(const Scenario &s, const UavPlacement &pl);

struct BcdStart
{
    UavPlacement placement;
    PowerAllocation powers;
    bool feasible = true;
    std::string reason;
};

/// Centroid of all ground nodes at the lowest altitude meeting C6/C7 (max-slack point if that
/// fails), with UE powers at their minimum, the rest on jamming and Pa at the covert maximum.
BcdStart initial_point(const Scenario &s);

/// Block coordinate descent over placement (SCA) and powers (LP).
Solution bcd_optimize(const Scenario &s, const BcdStart &start, const PlacementOptions &opt = {});
Solution bcd_optimize(const Scenario &s);

/// Perfect interference cancellation (varpi = 0): Dinkelbach over the placement with
/// closed-form powers.
Solution perfect_cancellation_optimize(const Scenario &s);

/// Chooses Dinkelbach for varpi = 0 and BCD otherwise.
Solution optimize(const Scenario &s);

struct ValidationReport
{
    int trials = 0;
    double xi_mc = 0.0;
    double xi_stderr = 0.0;
    double rate_mc = 0.0;
    double rate_stderr = 0.0;
    double bound = 0.0;    // closed-form lower bound at the solution
    double rb_mean_fading = 0.0;
    double threshold = 0.0; // 1 - eps - 2 SE
    bool pass = false;
};

/// Monte Carlo check of a solution: average minimum DEP over |h_aw|^2 and mean covert rate over
/// |h_ab|^2 and Pj ~ U(0, Pj_hat). Trials run in fixed-size chunks with independent streams.
ValidationReport validate_solution(const Scenario &s, const Solution &sol, int trials, std::uint64_t seed);

} // namespace uavcovert::planner

#endif
