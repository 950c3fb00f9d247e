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

#ifndef UAVCOVERT_CONVEX_LP_HPP
#define UAVCOVERT_CONVEX_LP_HPP

#include <Eigen/Dense>

#include <string_view>

namespace uavcovert::convex
{

/// maximize    c^T x
/// subject to  A_ineq x <= b_ineq,  A_eq x = b_eq,  x >= lower
/// Empty matrices (0 rows) are allowed for either constraint block.
struct LinearProgram
{
    Eigen::VectorXd objective;
    Eigen::MatrixXd a_ineq;
    Eigen::VectorXd b_ineq;
    Eigen::MatrixXd a_eq;
    Eigen::VectorXd b_eq;
    Eigen::VectorXd lower;

    Eigen::Index num_vars() const { return objective.size(); }

    /// Throws std::invalid_argument on inconsistent dimensions.
    void validate() const;
};

enum class LpStatus
{
    optimal,
    infeasible,
    unbounded,
    iteration_limit,
};

std::string_view to_string(LpStatus s);

struct LpResult
{
    LpStatus status = LpStatus::iteration_limit;
    Eigen::VectorXd x;
    double objective = 0.0;

    // Optimal: dual multipliers (dual_ineq >= 0, dual_eq free) of the maximization.
    // Infeasible: a Farkas certificate (y >= 0, z) with
    //   w = A_ineq^T y + A_eq^T z >= 0  and  w^T lower > y^T b_ineq + z^T b_eq.
    Eigen::VectorXd dual_ineq;
    Eigen::VectorXd dual_eq;

    int iterations = 0;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule.
/// tol is the pivot / feasibility / optimality tolerance.
LpResult solve_lp(const LinearProgram &lp, double tol = 1e-9);

} // namespace uavcovert::convex

#endif
