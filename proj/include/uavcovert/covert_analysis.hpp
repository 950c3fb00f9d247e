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

#ifndef UAVCOVERT_COVERT_ANALYSIS_HPP
#define UAVCOVERT_COVERT_ANALYSIS_HPP

#include "uavcovert/channel_model.hpp"

#include <functional>

namespace uavcovert::analysis
{

using channel::GammaApprox;
using channel::SRParams;

/// Energy-detector view of the warden with worst-case knowledge of every gain and power.
/// Thresholds: rho1 = sigma_w2, rho2 = Pj_hat g_uw + sigma_w2,
/// rho3 = Pa g_aw + sigma_w2, rho4 = Pj_hat g_uw + Pa g_aw + sigma_w2.
struct DetectionModel
{
    double pa = 0.0;     // W
    double g_aw = 0.0;   // realized Alice -> Willie gain
    double pj_hat = 0.0; // W
    double g_uw = 0.0;   // UAV -> Willie gain
    double sigma_w2 = 0.0;

    double jam() const { return pj_hat * g_uw; }
    double signal() const { return pa * g_aw; }
    double rho1() const { return sigma_w2; }
    double rho2() const { return jam() + sigma_w2; }
    double rho3() const { return signal() + sigma_w2; }
    double rho4() const { return jam() + signal() + sigma_w2; }
};

double fa_probability(double tau, const DetectionModel &dm);
double md_probability(double tau, const DetectionModel &dm);

/// Detection error probability P_FA + P_MD at threshold tau.
double dep(double tau, const DetectionModel &dm);

struct MinDep
{
    double xi = 1.0;  // minimum DEP
    double tau = 0.0; // minimizing threshold (always rho2)
};

MinDep min_dep(const DetectionModel &dm);

/// Average of the minimum DEP over |h_aw|^2, by adaptive Simpson quadrature of
///   F(r) - (1 / r) * int_0^r x f(x) dx,   r = Pj_hat g_uw / (Pa ell_aw).
double avg_min_dep_quadrature(double pa, double ell_aw, double pj_hat, double g_uw, const SRParams &p,
                              double tol = 1e-8);

struct CovertBound
{
    double value_lb = 1.0;
    double ratio = 0.0; // Pj_hat g_uw / (Pa ell_aw)
    GammaApprox gamma;
};

/// Closed-form lower bound 1 - alpha exp(-mu r / theta) - alpha theta / r.
CovertBound avg_min_dep_lower_bound(double pa, double ell_aw, double pj_hat, double g_uw, const GammaApprox &g);

/// phi(x) = alpha exp(-mu / x) + alpha x, strictly increasing on x > 0.
double phi(double x, const GammaApprox &g);

inline constexpr double kPhiInverseTol = 1e-10;

/// Inverse of phi by doubling from 1e-12 to a bracket, then bisection.
double phi_inverse(double eps, const GammaApprox &g, double tol = kPhiInverseTol);

struct ConstraintCheck
{
    bool satisfied = true;
    double slack = 0.0; // eps - lhs
};

/// Covert constraint alpha exp(-mu r / theta) + alpha theta / r <= eps.
ConstraintCheck covert_constraint_satisfied(double pa, double pj_hat, double g_uw, double ell_aw, double eps,
                                            const GammaApprox &g);

/// Adaptive Simpson on [a, b] with absolute tolerance; the range is pre-split into panels.
double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol, int panels = 16);

} // namespace uavcovert::analysis

#endif
