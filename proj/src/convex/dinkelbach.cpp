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

#include <cmath>
#include <stdexcept>

namespace uavcovert::convex
{

DinkelbachResult dinkelbach(const FractionalProgram &fp, const Vec &x0, double delta, int i_max,
                            const BarrierOptions &opt)
{
    DinkelbachResult res;
    Vec x = x0;
    double lambda = 0.0;

    for (int i = 1;; ++i)
    {
        SmoothConvexProgram sub;
        sub.dim = fp.dim;
        sub.constraints = fp.constraints;
        const double lam = lambda;
        sub.objective = {
            [&fp, lam](const Vec &z) { return fp.numerator.value(z) - lam * fp.denominator.value(z); },
            [&fp, lam](const Vec &z) -> Vec { return fp.numerator.gradient(z) - lam * fp.denominator.gradient(z); },
            [&fp, lam](const Vec &z) -> Mat { return fp.numerator.hessian(z) - lam * fp.denominator.hessian(z); },
        };
        x = solve_smooth_convex(sub, x, opt).x;

        const double f = fp.numerator.value(x);
        const double g = fp.denominator.value(x);
        if (!(g > 0.0))
            throw std::domain_error("fractional program denominator is not positive at an iterate");

        res.residual = std::abs(f - lambda * g);
        lambda = f / g;
        res.lambda_trace.push_back(lambda);
        res.iterations = i;

        if (res.residual < delta)
        {
            res.converged = true;
            break;
        }
        if (i > i_max)
            break;
    }
    res.x = x;
    res.lambda = lambda;
    return res;
}

double bisect(const std::function<double(double)> &fn, double target, double lo, double hi, double tol)
{
    if (!(lo <= hi))
        throw std::domain_error("bisect: empty bracket");
    double flo = fn(lo);
    double fhi = fn(hi);
    const bool increasing = fhi >= flo;
    if (!increasing)
        std::swap(flo, fhi);
    if (target < flo - tol || target > fhi + tol)
        throw std::domain_error("bisect: target outside the bracket range");

    if (std::abs(fn(lo) - target) <= tol)
        return lo;
    if (std::abs(fn(hi) - target) <= tol)
        return hi;

    double best = lo;
    double best_err = std::abs(fn(lo) - target);
    for (int k = 0; k < 400; ++k)
    {
        const double mid = 0.5 * (lo + hi);
        const double v = fn(mid);
        const double err = std::abs(v - target);
        if (err < best_err)
        {
            best = mid;
            best_err = err;
        }
        if (err <= tol || mid == lo || mid == hi)
            break;
        if ((v < target) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return best;
}

} // namespace uavcovert::convex
