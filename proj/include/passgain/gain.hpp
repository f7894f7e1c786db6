#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "passgain/channel.hpp"
#include "passgain/geometry.hpp"

namespace passgain {

// Positive-side offsets (n - 1/2) * delta_p * lambda for n = 1..N/2.
std::vector<double> uniform_offsets(std::size_t n_antennas, const SystemConfig& cfg,
                                    const DerivedConstants& consts);

/// Gain of a layout mirrored about the user on a lossless guide.
///
/// `deltas` holds the positive half of the offsets (n = 1..N/2), strictly
/// increasing. Each mirrored pair contributes
/// 2 e^{-j k0 r_n} cos(k0 delta_n n_eff) / r_n to the coherent sum.
double gain_symmetric(std::span<const double> deltas, const SystemConfig& cfg,
                      const DerivedConstants& consts);

double gain_uniform(std::size_t n_antennas, const SystemConfig& cfg,
                    const DerivedConstants& consts);

// Continuous integrand behind the uniform gain, with x = delta / d.
cplx uniform_gain_integrand(double x, const SystemConfig& cfg, const DerivedConstants& consts);

// Integral approximation of gain_uniform. Real and imaginary parts are
// integrated separately to 1e-10 absolute; NumericError on non-convergence.
double gain_uniform_integral(std::size_t n_antennas, const SystemConfig& cfg,
                             const DerivedConstants& consts);

// (eta/N) (sum_n 2 / r_n)^2 over the positive-half offsets.
double upper_bound_sum(std::span<const double> deltas, const SystemConfig& cfg,
                       const DerivedConstants& consts);
double upper_bound_sum_uniform(std::size_t n_antennas, const SystemConfig& cfg,
                               const DerivedConstants& consts);

// f_ub(x) = asinh(x)^2 / x, with f_ub(0) = 0.
double f_ub(double x);
double f_ub_derivative(double x);

struct BoundReport {
  double a_uni = 0.0;         // exact uniform-spacing gain
  double a_hat_sum = 0.0;     // discrete phase-free bound
  double a_hat_closed = 0.0;  // closed-form bound via f_ub
  double l_eps = 0.0;         // N delta_p eps / 2
  double eps = 0.0;           // lambda / d
};

// Only the closed-form bound, O(1) in N.
double upper_bound_closed_value(std::size_t n_antennas, const SystemConfig& cfg,
                                const DerivedConstants& consts);

BoundReport upper_bound_closed(std::size_t n_antennas, const SystemConfig& cfg,
                               const DerivedConstants& consts);

struct XStar {
  double x = 0.0;
  double f = 0.0;
};

// Maximiser of f_ub: bisection on the analytic derivative over [1, 10]
// down to an interval of 1e-8.
XStar find_xstar();

// Real-valued optimum 2 x* d / (delta_p lambda) rounded to the nearest even
// integer, ties upward, never below 2.
std::size_t optimal_antenna_number(const SystemConfig& cfg, const DerivedConstants& consts);

// (N* - 1) delta_p lambda.
double optimal_aperture(const SystemConfig& cfg, const DerivedConstants& consts);

// 2 eta f_ub(x*) / (d delta_p lambda).
double max_gain_estimate(const SystemConfig& cfg, const DerivedConstants& consts);

// max_gain_estimate at delta_p = 1/2, the smallest spacing free of coupling.
double gain_limit(const SystemConfig& cfg, const DerivedConstants& consts);

}  // namespace passgain
