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

#ifndef UAVCOVERT_CONVEX_DINKELBACH_HPP
#define UAVCOVERT_CONVEX_DINKELBACH_HPP

#include "uavcovert/convex/barrier.hpp"

#include <functional>
#include <vector>

namespace uavcovert::convex
{

/// maximize f(x) / g(x) over a convex set, f concave, g convex and positive.
struct FractionalProgram
{
    SmoothObjective numerator;   // f
    SmoothObjective denominator; // g (value / gradient / hessian of a convex function)
    std::vector<Constraint> constraints;
    int dim = 3;
};

struct DinkelbachResult
{
    Vec x;
    double lambda = 0.0;
    double residual = 0.0; // |f(x_i) - lambda_{i-1} g(x_i)| at exit
    int iterations = 0;
    bool converged = false; // false when the iteration cap stopped the loop
    std::vector<double> lambda_trace;
};

/// Parametric iteration starting at lambda = 0: x_i maximizes f - lambda_{i-1} g,
/// lambda_i = f(x_i) / g(x_i), until |f(x_i) - lambda_{i-1} g(x_i)| < delta or i > i_max.
/// x0 must be strictly feasible; each subproblem is warm-started from the previous iterate.
DinkelbachResult dinkelbach(const FractionalProgram &fp, const Vec &x0, double delta, int i_max,
                            const BarrierOptions &opt = {});

/// Finds x in [lo, hi] with |fn(x) - target| <= tol for fn monotone on the bracket.
/// Throws std::domain_error when target is outside [fn(lo), fn(hi)] (bracket violation).
double bisect(const std::function<double(double)> &fn, double target, double lo, double hi, double tol);

} // namespace uavcovert::convex

#endif
