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

#ifndef UAVCOVERT_CHANNEL_MODEL_HPP
#define UAVCOVERT_CHANNEL_MODEL_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace uavcovert::channel
{

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s

/// Shadowed-Rician (SR) fading parameters of the squared envelope |h|^2.
///   b     - half the average power of the scatter component
///   m     - Nakagami-m severity of the LOS shadowing (m >= 1)
///   omega - average power of the LOS component
struct SRParams
{
    double b = 0.0;
    double m = 0.0;
    double omega = 0.0;

    /// Throws std::domain_error when any invariant is violated.
    void validate() const;

    double mean_power() const { return 2.0 * b + omega; }

    // Measured rows used throughout the literature on LEO downlinks.
    static SRParams light() { return {0.158, 19.4, 1.29}; }
    static SRParams average() { return {0.126, 10.1, 0.835}; }
    static SRParams heavy() { return {0.063, 1.0, 8.97e-4}; }
};

/// Gamma(alpha, theta) surrogate of the squared SR law, plus the constant
/// mu = Gamma(alpha + 1)^(-1/alpha) of the Gamma-CDF lower bound.
struct GammaApprox
{
    double alpha = 1.0;
    double theta = 1.0;
    double mu = 1.0;

    // The Gamma-CDF bound used for the covert constraint is only proven for alpha > 1.
    bool bound_premise_holds() const { return alpha > 1.0; }
};

/// Moment-matched Gamma surrogate. Emits a warning on std::clog when
/// alpha == 1 (heavy shadowing), but still returns the parameters.
GammaApprox gamma_from_sr(const SRParams &p);

/// Raised when the SR series does not settle within its term cap.
class SeriesError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kSeriesTol = 1e-12;
inline constexpr int kSeriesMinTerms = 20;
inline constexpr int kSeriesMaxTerms = 500;

/// CDF of |h|^2 from the negative-binomial mixture of Gamma(1 + n, 2b) laws.
/// Truncation: stop once a term is below tol * partial sum and at least
/// kSeriesMinTerms terms were added; at most kSeriesMaxTerms terms.
double sr_cdf(double x, const SRParams &p, double tol = kSeriesTol);

/// Density of |h|^2, the term-wise derivative of sr_cdf.
double sr_pdf(double x, const SRParams &p, double tol = kSeriesTol);

/// One draw of |h|^2 from a Loo-type construction:
///   h = sqrt(b) (g1 + j g2) + sqrt(zeta) exp(j phi),
///   g1, g2 ~ N(0, 1), zeta ~ Gamma(m, omega / m), phi ~ U[0, 2 pi).
/// The caller owns the random stream.
template <std::uniform_random_bit_generator Rng>
double sample_sr_power(const SRParams &p, Rng &rng)
{
    std::normal_distribution<double> scatter(0.0, 1.0);
    std::gamma_distribution<double> los_power(p.m, p.omega / p.m);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    const double s = std::sqrt(p.b);
    const double re_scatter = s * scatter(rng);
    const double im_scatter = s * scatter(rng);
    const double amplitude = std::sqrt(los_power(rng));
    const double phi = phase(rng);

    const double re = re_scatter + amplitude * std::cos(phi);
    const double im = im_scatter + amplitude * std::sin(phi);
    return re * re + im * im;
}

/// Free-space large-scale gain (c / (4 pi fc d))^2 * G.
double satellite_large_scale(double fc, double d, double gain);

/// Satellite-to-ground link budget. Construct through make() so that ell is consistent.
struct SatelliteLink
{
    double fc = 0.0;   // Hz
    double d = 0.0;    // m
    double gain = 0.0; // linear product of transmit and receive antenna gains
    double ell = 0.0;  // linear large-scale gain

    static SatelliteLink make(double fc, double d, double gain)
    {
        return {fc, d, gain, satellite_large_scale(fc, d, gain)};
    }
};

struct GroundPos
{
    double x = 0.0;
    double y = 0.0;
};

struct UavPlacement
{
    GroundPos q;
    double h = 0.0; // altitude, m
};

struct UavLinkBudget
{
    double beta0_chi = 0.0;   // reference gain (1 m) in the satellite band (Bob, Willie)
    double beta0_kappa = 0.0; // reference gain (1 m) in the UE band
    double phi_min = 0.0;     // minimum elevation angle, rad
};

inline double horizontal_distance(GroundPos a, GroundPos b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Squared 3D distance between the UAV and a ground node.
inline double squared_distance(const UavPlacement &pl, GroundPos target)
{
    const double dx = pl.q.x - target.x;
    const double dy = pl.q.y - target.y;
    return dx * dx + dy * dy + pl.h * pl.h;
}

/// LoS gain beta0 / (|q - target|^2 + H^2).
double uav_gain(const UavPlacement &pl, GroundPos target, double beta0);

struct ElevationCheck
{
    bool feasible = true;
    std::vector<double> slack; // H / tan(phi_min) - |q - n| per node, meters
};

inline constexpr double kElevationTol = 1e-9; // m

ElevationCheck elevation_feasible(const UavPlacement &pl, std::span<const GroundPos> nodes, double phi_min);

/// log2(1 + Pa g_ab / (varpi Pj g_ub + sigma_b2)), bit/s/Hz.
double covert_rate(double pa, double g_ab, double varpi, double pj, double g_ub, double sigma_b2);

/// log2(1 + Pk g_uk / sigma_kappa2), bit/s/Hz.
double ue_rate(double pk, double g_uk, double sigma_kappa2);

} // namespace uavcovert::channel

#endif
