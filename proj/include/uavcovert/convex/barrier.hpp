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

#ifndef UAVCOVERT_CONVEX_BARRIER_HPP
#define UAVCOVERT_CONVEX_BARRIER_HPP

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace uavcovert::convex
{

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// |x - center|^2 <= radius^2
struct BallConstraint
{
    Vec center;
    double radius = 0.0;
};

/// |selector x - offset|^2 <= (axis^T x)^2 with axis^T x > 0, i.e. a second-order
/// cone |selector x - offset| <= axis^T x in squared form.
struct ConeConstraint
{
    Mat selector;
    Vec offset;
    Vec axis;
};

/// normal^T x <= bound
struct HalfspaceConstraint
{
    Vec normal;
    double bound = 0.0;
};

using Constraint = std::variant<BallConstraint, ConeConstraint, HalfspaceConstraint>;

/// Smooth constraint function f(x) (feasible iff f(x) <= 0) and its derivatives.
double constraint_value(const Constraint &c, const Vec &x);
Vec constraint_gradient(const Constraint &c, const Vec &x);
Mat constraint_hessian(const Constraint &c, const Vec &x);

/// True when x lies in the open interior of the constraint's convex set.
bool strictly_inside(const Constraint &c, const Vec &x);

/// Distance-like convex residual used to measure slack (negative inside):
/// |x - c| - r for balls, |Qx - u| - a^T x for cones, n^T x - b for halfspaces.
double constraint_residual(const Constraint &c, const Vec &x);

/// Concave objective to maximize, with first and second derivatives.
struct SmoothObjective
{
    std::function<double(const Vec &)> value;
    std::function<Vec(const Vec &)> gradient;
    std::function<Mat(const Vec &)> hessian;
};

SmoothObjective linear_objective(Vec direction, double offset = 0.0);

struct SmoothConvexProgram
{
    SmoothObjective objective;
    std::vector<Constraint> constraints;
    int dim = 3;
};

struct BarrierOptions
{
    double tol = 1e-9;        // stop once (#constraints) / t < tol
    double t0 = 1.0;          // initial barrier weight
    double growth = 10.0;     // t <- growth * t between centering steps
    int max_newton = 200;     // per centering step
    double newton_tol = 1e-12; // half squared Newton decrement
};

struct BarrierResult
{
    Vec x;
    double objective = 0.0;
    double duality_gap = 0.0;   // m / t at exit
    double kkt_residual = 0.0;  // |grad obj - sum_i lambda_i grad f_i| with lambda_i = 1 / (t (-f_i))
    int newton_steps = 0;
};

class InfeasibleStart : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class LineSearchFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Log-barrier Newton method with backtracking line search. x0 must be strictly feasible.
BarrierResult solve_smooth_convex(const SmoothConvexProgram &p, const Vec &x0, const BarrierOptions &opt = {});

struct InteriorPoint
{
    Vec x;
    double max_residual = 0.0; // max_i residual_i(x); negative means strictly feasible
};

/// Max-slack point: minimizes max_i constraint_residual(c_i, x) (a Chebyshev-like centre),
/// solved with the same barrier machinery in the lifted variable (x, s).
/// slack_floor bounds s from below for sets with unbounded slack.
InteriorPoint find_interior_point(const std::vector<Constraint> &constraints, const Vec &guess,
                                  double slack_floor = 1e3, const BarrierOptions &opt = {});

} // namespace uavcovert::convex

#endif
