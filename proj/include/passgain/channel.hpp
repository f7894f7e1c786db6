#pragma once

#include <complex>
#include <span>
#include <vector>

#include "passgain/geometry.hpp"

namespace passgain {

using cplx = std::complex<double>;

/// Per-antenna channel quantities for one layout.
struct ChannelState {
  std::vector<cplx> h;      // free-space LoS coefficient, sqrt(eta) e^{-j k0 r} / r
  std::vector<double> phi;  // in-waveguide phase from the feed, rad
  std::vector<double> att;  // waveguide amplitude attenuation in (0, 1]
};

cplx los_coefficient(double x_n, const SystemConfig& cfg, const DerivedConstants& consts);

// 2 pi (x_n - x_0) / lambda_g. Rejects antennas left of the feed.
double inwaveguide_phase(double x_n, double x_0, const DerivedConstants& consts);

// Amplitude factor 10^(-alpha (x_n - x_0) / 20); loss does not touch the phase.
double waveguide_attenuation(double x_n, double x_0, double alpha_db_per_m);

ChannelState compute_channel(const AntennaLayout& layout, const SystemConfig& cfg,
                             const DerivedConstants& consts);

// (1/N) |sum_n att_n h_n e^{-j phi_n}|^2 with power split equally over N.
double array_gain_exact(const AntennaLayout& layout, const SystemConfig& cfg,
                        const DerivedConstants& consts);

// (1/N) (sum_n att_n |h_n|)^2, the fully phase-aligned value for the same
// amplitudes. Reduces to (eta/N)(sum 1/r_n)^2 on a lossless guide.
double coherent_gain_bound(const AntennaLayout& layout, const SystemConfig& cfg,
                           const DerivedConstants& consts);

/// Exact gains of nested layouts grown outward from the user.
///
/// Antenna pair k sits at x_u + right[k] and x_u - left[k]; entry k of the
/// result is the exact gain of the first k + 1 pairs (N = 2k + 2). Offsets
/// must be positive and strictly increasing on each side. With an explicit
/// feed point the profile stops at the first prefix whose leftmost antenna
/// would sit left of the feed; with `auto` the feed tracks the leftmost
/// antenna of each prefix. Runs in O(size) total.
std::vector<double> nested_gain_profile(std::span<const double> right,
                                        std::span<const double> left, const SystemConfig& cfg,
                                        const DerivedConstants& consts);

// coherent_gain_bound for the same nested prefixes and feed rules.
std::vector<double> nested_bound_profile(std::span<const double> right,
                                         std::span<const double> left, const SystemConfig& cfg,
                                         const DerivedConstants& consts);

}  // namespace passgain
