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

#include "uavcovert/channel_model.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <iostream>
#include <string>

namespace uavcovert::channel
{

void SRParams::validate() const
{
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::domain_error("SR parameter b must be positive, got " + std::to_string(b));
    if (!(m >= 1.0) || !std::isfinite(m))
        throw std::domain_error("SR parameter m must be >= 1, got " + std::to_string(m));
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::domain_error("SR parameter Omega must be positive, got " + std::to_string(omega));
}

GammaApprox gamma_from_sr(const SRParams &p)
{
    p.validate();
    const double s = 2.0 * p.b + p.omega;
    const double q = 4.0 * p.m * p.b * p.b + 4.0 * p.m * p.b * p.omega + p.omega * p.omega;

    GammaApprox g;
    g.alpha = p.m * s * s / q;
    // theta = q / (m s), written as s / alpha so that alpha * theta == 2b + Omega to rounding.
    g.theta = s / g.alpha;
    g.mu = std::pow(std::tgamma(g.alpha + 1.0), -1.0 / g.alpha);

    if (!g.bound_premise_holds())
        std::clog << "warning: Gamma shape alpha = " << g.alpha
                  << " <= 1; the covert lower bound is evaluated outside its proven range\n";
    return g;
}

namespace
{

// Sums w_n * term(n) over the negative-binomial weights
// w_n = (1 - delta)^m (m)_n delta^n / n!, delta = Omega / (2bm + Omega).
template <typename Term>
double sum_mixture(const SRParams &p, double tol, Term &&term)
{
    const double delta = p.omega / (2.0 * p.b * p.m + p.omega);
    double weight = std::pow(2.0 * p.b * p.m / (2.0 * p.b * p.m + p.omega), p.m);

    double sum = 0.0;
    double last = 0.0;
    for (int n = 0; n < kSeriesMaxTerms; ++n)
    {
        last = weight * term(n);
        sum += last;
        if (n + 1 >= kSeriesMinTerms && std::abs(last) <= tol * std::abs(sum))
            return sum;
        weight *= (p.m + n) / (n + 1.0) * delta;
    }
    if (std::abs(last) > 1e-6 * std::abs(sum))
        throw SeriesError("shadowed-Rician series did not converge within " + std::to_string(kSeriesMaxTerms) + " terms");
    return sum;
}

void check_series_args(double x, const SRParams &p, double tol)
{
    p.validate();
    if (!(x >= 0.0))
        throw std::domain_error("SR distribution evaluated at negative argument");
    if (!(tol > 0.0 && tol <= 1e-8))
        throw std::domain_error("series tolerance must lie in (0, 1e-8]");
}

} // namespace

double sr_cdf(double x, const SRParams &p, double tol)
{
    check_series_args(x, p, tol);
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const double y = x / (2.0 * p.b);
    const double f = sum_mixture(p, tol, [y](int n) { return boost::math::gamma_p(n + 1.0, y); });
    return std::clamp(f, 0.0, 1.0);
}

double sr_pdf(double x, const SRParams &p, double tol)
{
    check_series_args(x, p, tol);
    if (std::isinf(x))
        return 0.0;
    const double y = x / (2.0 * p.b);
    const double f = sum_mixture(p, tol, [y](int n) { return boost::math::gamma_p_derivative(n + 1.0, y); });
    return std::max(0.0, f / (2.0 * p.b));
}

double satellite_large_scale(double fc, double d, double gain)
{
    if (!(fc > 0.0) || !(d > 0.0) || !(gain > 0.0))
        throw std::domain_error("satellite link parameters must be positive");
    const double r = kSpeedOfLight / (4.0 * std::numbers::pi * fc * d);
    return r * r * gain;
}

double uav_gain(const UavPlacement &pl, GroundPos target, double beta0)
{
    return beta0 / squared_distance(pl, target);
}

ElevationCheck elevation_feasible(const UavPlacement &pl, std::span<const GroundPos> nodes, double phi_min)
{
    ElevationCheck out;
    out.slack.reserve(nodes.size());
    const double reach = pl.h / std::tan(phi_min);
    for (const auto &n : nodes)
    {
        const double s = reach - horizontal_distance(pl.q, n);
        out.slack.push_back(s);
        if (s < -kElevationTol)
            out.feasible = false;
    }
    return out;
}

double covert_rate(double pa, double g_ab, double varpi, double pj, double g_ub, double sigma_b2)
{
    return std::log2(1.0 + pa * g_ab / (varpi * pj * g_ub + sigma_b2));
}

double ue_rate(double pk, double g_uk, double sigma_kappa2) { return std::log2(1.0 + pk * g_uk / sigma_kappa2); }

} // namespace uavcovert::channel
