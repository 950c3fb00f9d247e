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

#include "uavcovert/covert_analysis.hpp"

#include "uavcovert/convex/dinkelbach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcovert::analysis
{

double fa_probability(double tau, const DetectionModel &dm)
{
    if (tau < dm.rho1())
        return 1.0;
    if (tau >= dm.rho2())
        return 0.0;
    return 1.0 - (tau - dm.sigma_w2) / dm.jam();
}

double md_probability(double tau, const DetectionModel &dm)
{
    if (tau < dm.rho3())
        return 0.0;
    if (tau >= dm.rho4())
        return 1.0;
    return (tau - dm.signal() - dm.sigma_w2) / dm.jam();
}

double dep(double tau, const DetectionModel &dm) { return fa_probability(tau, dm) + md_probability(tau, dm); }

MinDep min_dep(const DetectionModel &dm)
{
    MinDep out;
    out.tau = dm.rho2();
    if (dm.jam() <= 0.0)
        out.xi = dm.signal() > 0.0 ? 0.0 : 1.0;
    else
        out.xi = std::max(0.0, 1.0 - dm.signal() / dm.jam());
    return out;
}

namespace
{

double simpson(double fa, double fm, double fb, double a, double b) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double simpson_rec(const std::function<double(double)> &f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol)
        return left + right + diff / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol, int panels)
{
    if (b <= a)
        return 0.0;
    panels = std::max(1, panels);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i)
    {
        const double lo = a + i * h;
        const double hi = i + 1 == panels ? b : lo + h;
        const double flo = f(lo);
        const double fhi = f(hi);
        const double fm = f(0.5 * (lo + hi));
        total += simpson_rec(f, lo, hi, flo, fm, fhi, simpson(flo, fm, fhi, lo, hi), tol / panels, 40);
    }
    return total;
}

double avg_min_dep_quadrature(double pa, double ell_aw, double pj_hat, double g_uw, const SRParams &p, double tol)
{
    p.validate();
    if (pa < 0.0 || ell_aw < 0.0 || pj_hat < 0.0 || g_uw < 0.0)
        throw std::domain_error("average minimum DEP needs non-negative powers and gains");
    const double signal_scale = pa * ell_aw;
    const double jam = pj_hat * g_uw;
    if (signal_scale == 0.0)
        return 1.0;
    if (jam == 0.0)
        return 0.0;

    const double r = jam / signal_scale;

    // Beyond the cutoff the SR tail is negligible for the partial-mean integral.
    double cutoff = p.mean_power();
    while (cutoff < r && (1.0 - channel::sr_cdf(cutoff, p)) * cutoff > 1e-3 * tol)
        cutoff *= 2.0;
    const double upper = std::min(r, cutoff);

    const auto partial_mean = adaptive_simpson([&p](double x) { return x * channel::sr_pdf(x, p); }, 0.0, upper,
                                               tol * r, 32);
    return std::clamp(channel::sr_cdf(r, p) - partial_mean / r, 0.0, 1.0);
}

CovertBound avg_min_dep_lower_bound(double pa, double ell_aw, double pj_hat, double g_uw, const GammaApprox &g)
{
    CovertBound out;
    out.gamma = g;
    const double signal_scale = pa * ell_aw;
    const double jam = pj_hat * g_uw;
    if (signal_scale <= 0.0)
    {
        out.ratio = std::numeric_limits<double>::infinity();
        out.value_lb = 1.0;
        return out;
    }
    out.ratio = jam / signal_scale;
    out.value_lb = 1.0 - g.alpha * std::exp(-g.mu * out.ratio / g.theta) - g.alpha * g.theta / out.ratio;
    return out;
}

double phi(double x, const GammaApprox &g)
{
    if (!(x > 0.0))
        throw std::domain_error("phi is defined for x > 0 only");
    return g.alpha * std::exp(-g.mu / x) + g.alpha * x;
}

double phi_inverse(double eps, const GammaApprox &g, double tol)
{
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("phi_inverse needs a positive covertness level");
    constexpr double start = 1e-12;
    double hi = start;
    int doublings = 0;
    while (phi(hi, g) < eps)
    {
        hi *= 2.0;
        if (++doublings > 2000)
            throw std::runtime_error("phi_inverse: failed to bracket the target");
    }
    const double lo = hi > start ? 0.5 * hi : std::numeric_limits<double>::min();
    return convex::bisect([&g](double x) { return phi(x, g); }, eps, lo, hi, tol);
}

ConstraintCheck covert_constraint_satisfied(double pa, double pj_hat, double g_uw, double ell_aw, double eps,
                                            const GammaApprox &g)
{
    ConstraintCheck out;
    const double signal_scale = pa * ell_aw;
    const double jam = pj_hat * g_uw;
    double lhs = 0.0;
    if (signal_scale > 0.0)
        lhs = jam > 0.0 ? phi(g.theta * signal_scale / jam, g) : std::numeric_limits<double>::infinity();
    out.slack = eps - lhs;
    out.satisfied = out.slack >= 0.0;
    return out;
}

} // namespace uavcovert::analysis
