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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace uavcovert::convex
{

namespace
{

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Smoothing of the Euclidean norm in the phase-one residuals.
constexpr double kNormSmoothing = 1e-6;

// One barrier term f(x) <= 0 in the form the Newton core consumes.
struct Term
{
    std::function<double(const Vec &)> value;
    std::function<Vec(const Vec &)> gradient;
    std::function<Mat(const Vec &)> hessian;
    std::function<bool(const Vec &)> inside;
};

bool all_inside(const std::vector<Term> &terms, const Vec &x)
{
    return std::all_of(terms.begin(), terms.end(), [&](const Term &t) { return t.inside(x); });
}

double barrier_merit(const SmoothObjective &obj, const std::vector<Term> &terms, double t, const Vec &x)
{
    double v = -t * obj.value(x);
    for (const auto &term : terms)
        v -= std::log(-term.value(x));
    return v;
}

// Maximizes obj subject to terms via the log-barrier path.
BarrierResult barrier_newton(const SmoothObjective &obj, const std::vector<Term> &terms, const Vec &x0,
                             const BarrierOptions &opt)
{
    if (terms.empty())
        throw std::invalid_argument("barrier method needs at least one constraint");
    if (!all_inside(terms, x0))
        throw InfeasibleStart("barrier start point is not strictly feasible");

    const auto n = x0.size();
    const double m = static_cast<double>(terms.size());
    BarrierResult res;
    Vec x = x0;
    double t = opt.t0;

    Vec g(n);
    Mat h(n, n);
    auto assemble = [&](const Vec &at) {
        g = -t * obj.gradient(at);
        h = -t * obj.hessian(at);
        for (const auto &term : terms)
        {
            const double f = term.value(at);
            const Vec gf = term.gradient(at);
            g += gf / (-f);
            h += gf * gf.transpose() / (f * f) + term.hessian(at) / (-f);
        }
    };

    while (true)
    {
        for (int k = 0; k < opt.max_newton; ++k)
        {
            assemble(x);
            Eigen::LDLT<Mat> ldlt(h);
            Vec dx = ldlt.solve(-g);
            if (ldlt.info() != Eigen::Success || !dx.allFinite())
            {
                const double reg = 1e-12 * std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
                dx = (h + reg * Mat::Identity(n, n)).colPivHouseholderQr().solve(-g);
            }
            const double slope = g.dot(dx);
            const double decrement2 = -slope;
            if (decrement2 / 2.0 <= opt.newton_tol)
                break;

            double step = 1.0;
            while (step > 1e-18 && !all_inside(terms, x + step * dx))
                step *= 0.5;
            // Inside the quadratic convergence region take the pure Newton step; merit
            // differences there are at rounding level.
            const double base = barrier_merit(obj, terms, t, x);
            while (decrement2 >= 0.1 && step > 1e-18 && barrier_merit(obj, terms, t, x + step * dx) > base + 0.25 * step * slope)
                step *= 0.5;
            if (step <= 1e-18)
            {
                // Merit differences are below rounding; only a real failure when far from the centre.
                if (decrement2 > 1.0)
                    throw LineSearchFailure("barrier line search stalled with Newton decrement^2 = " +
                                            std::to_string(decrement2));
                break;
            }
            x += step * dx;
            ++res.newton_steps;
        }
        if (m / t < opt.tol)
            break;
        t *= opt.growth;
    }

    assemble(x);
    res.x = x;
    res.objective = obj.value(x);
    res.duality_gap = m / t;
    res.kkt_residual = (g / t).norm();
    return res;
}

double smooth_norm(const Vec &v) { return std::sqrt(v.squaredNorm() + kNormSmoothing * kNormSmoothing); }

// Gradient and Hessian of the smoothed |v| with v = A x - b, expressed in x.
void smooth_norm_derivatives(const Mat &a, const Vec &v, Vec &grad, Mat &hess)
{
    const double nv = smooth_norm(v);
    grad = a.transpose() * v / nv;
    const Mat inner = Mat::Identity(v.size(), v.size()) / nv - v * v.transpose() / (nv * nv * nv);
    hess = a.transpose() * inner * a;
}

} // namespace

double constraint_value(const Constraint &c, const Vec &x)
{
    return std::visit(overloaded{
                          [&](const BallConstraint &b) { return (x - b.center).squaredNorm() - b.radius * b.radius; },
                          [&](const ConeConstraint &k) {
                              const double a = k.axis.dot(x);
                              return (k.selector * x - k.offset).squaredNorm() - a * a;
                          },
                          [&](const HalfspaceConstraint &h) { return h.normal.dot(x) - h.bound; },
                      },
                      c);
}

Vec constraint_gradient(const Constraint &c, const Vec &x)
{
    return std::visit(overloaded{
                          [&](const BallConstraint &b) -> Vec { return 2.0 * (x - b.center); },
                          [&](const ConeConstraint &k) -> Vec {
                              return 2.0 * k.selector.transpose() * (k.selector * x - k.offset) -
                                     2.0 * k.axis.dot(x) * k.axis;
                          },
                          [&](const HalfspaceConstraint &h) -> Vec { return h.normal; },
                      },
                      c);
}

Mat constraint_hessian(const Constraint &c, const Vec &x)
{
    const auto n = x.size();
    return std::visit(overloaded{
                          [&](const BallConstraint &) -> Mat { return 2.0 * Mat::Identity(n, n); },
                          [&](const ConeConstraint &k) -> Mat {
                              return 2.0 * k.selector.transpose() * k.selector - 2.0 * k.axis * k.axis.transpose();
                          },
                          [&](const HalfspaceConstraint &) -> Mat { return Mat::Zero(n, n); },
                      },
                      c);
}

bool strictly_inside(const Constraint &c, const Vec &x)
{
    if (!x.allFinite())
        return false;
    if (const auto *k = std::get_if<ConeConstraint>(&c); k && !(k->axis.dot(x) > 0.0))
        return false;
    return constraint_value(c, x) < 0.0;
}

double constraint_residual(const Constraint &c, const Vec &x)
{
    return std::visit(overloaded{
                          [&](const BallConstraint &b) { return (x - b.center).norm() - b.radius; },
                          [&](const ConeConstraint &k) { return (k.selector * x - k.offset).norm() - k.axis.dot(x); },
                          [&](const HalfspaceConstraint &h) { return h.normal.dot(x) - h.bound; },
                      },
                      c);
}

SmoothObjective linear_objective(Vec direction, double offset)
{
    const auto n = direction.size();
    return {
        [direction, offset](const Vec &x) { return direction.dot(x) + offset; },
        [direction](const Vec &) { return direction; },
        [n](const Vec &) { return Mat::Zero(n, n); },
    };
}

BarrierResult solve_smooth_convex(const SmoothConvexProgram &p, const Vec &x0, const BarrierOptions &opt)
{
    if (x0.size() != p.dim)
        throw std::invalid_argument("start point dimension does not match the program");
    std::vector<Term> terms;
    terms.reserve(p.constraints.size());
    for (const auto &c : p.constraints)
    {
        terms.push_back({
            [&c](const Vec &x) { return constraint_value(c, x); },
            [&c](const Vec &x) { return constraint_gradient(c, x); },
            [&c](const Vec &x) { return constraint_hessian(c, x); },
            [&c](const Vec &x) { return strictly_inside(c, x); },
        });
    }
    return barrier_newton(p.objective, terms, x0, opt);
}

InteriorPoint find_interior_point(const std::vector<Constraint> &constraints, const Vec &guess, double slack_floor,
                                  const BarrierOptions &opt)
{
    const auto n = guess.size();
    if (constraints.empty())
        return {guess, -std::numeric_limits<double>::infinity()};

    // Lifted variable z = (x, s); each term is residual_i(x) - s <= 0, plus -s - floor <= 0.
    auto smoothed = [](const Constraint &c, const Vec &x, Vec *grad, Mat *hess) -> double {
        return std::visit(
            overloaded{
                [&](const BallConstraint &b) {
                    const auto d = x.size();
                    const Vec v = x - b.center;
                    if (grad)
                        smooth_norm_derivatives(Mat::Identity(d, d), v, *grad, *hess);
                    return smooth_norm(v) - b.radius;
                },
                [&](const ConeConstraint &k) {
                    const Vec v = k.selector * x - k.offset;
                    if (grad)
                    {
                        smooth_norm_derivatives(k.selector, v, *grad, *hess);
                        *grad -= k.axis;
                    }
                    return smooth_norm(v) - k.axis.dot(x);
                },
                [&](const HalfspaceConstraint &h) {
                    if (grad)
                    {
                        *grad = h.normal;
                        *hess = Mat::Zero(x.size(), x.size());
                    }
                    return h.normal.dot(x) - h.bound;
                },
            },
            c);
    };

    std::vector<Term> terms;
    for (const auto &c : constraints)
    {
        auto value = [&c, &smoothed, n](const Vec &z) { return smoothed(c, z.head(n), nullptr, nullptr) - z(n); };
        terms.push_back({
            value,
            [&c, &smoothed, n](const Vec &z) {
                Vec g;
                Mat h;
                smoothed(c, z.head(n), &g, &h);
                Vec out(n + 1);
                out << g, -1.0;
                return out;
            },
            [&c, &smoothed, n](const Vec &z) {
                Vec g;
                Mat h;
                smoothed(c, z.head(n), &g, &h);
                Mat out = Mat::Zero(n + 1, n + 1);
                out.topLeftCorner(n, n) = h;
                return out;
            },
            [value](const Vec &z) { return z.allFinite() && value(z) < 0.0; },
        });
    }
    terms.push_back({
        [n, slack_floor](const Vec &z) { return -z(n) - slack_floor; },
        [n](const Vec &) {
            Vec g = Vec::Zero(n + 1);
            g(n) = -1.0;
            return g;
        },
        [n](const Vec &) { return Mat::Zero(n + 1, n + 1); },
        [n, slack_floor](const Vec &z) { return -z(n) - slack_floor < 0.0; },
    });

    double s0 = -std::numeric_limits<double>::infinity();
    for (const auto &c : constraints)
        s0 = std::max(s0, smoothed(c, guess, nullptr, nullptr));
    s0 = std::max(s0 + 1.0, -slack_floor + 1.0);

    Vec z0(n + 1);
    z0 << guess, s0;
    Vec dir = Vec::Zero(n + 1);
    dir(n) = -1.0;
    const BarrierResult r = barrier_newton(linear_objective(dir), terms, z0, opt);

    InteriorPoint out;
    out.x = r.x.head(n);
    out.max_residual = -std::numeric_limits<double>::infinity();
    for (const auto &c : constraints)
        out.max_residual = std::max(out.max_residual, constraint_residual(c, out.x));
    return out;
}

} // namespace uavcovert::convex
