#pragma once

#include <cstddef>
#include <vector>

#include "passgain/geometry.hpp"
#include "passgain/linalg.hpp"

namespace passgain {

// sin(x)/x, using 1 - x^2/6 + x^4/120 for |x| < 1e-4.
double sinc_j0(double x);

/// Mutual-coupling matrix of N equally spaced antennas.
///
/// Symmetric Toeplitz with first row J(1..N), J(n) = j0(k0 delta (n - 1)).
struct CouplingMatrix {
  std::size_t n = 0;
  double delta = 0.0;
  std::vector<double> first_row;

  Matrix dense() const;
  SymmetricEigen spectrum() const { return jacobi_eigen(dense()); }
};

CouplingMatrix coupling_matrix(std::size_t n_antennas, double delta,
                               const DerivedConstants& consts);

struct InvSqrtResult {
  Matrix value;
  std::size_t floored = 0;  // eigenvalues raised to the floor before inversion
};

// V diag(max(lambda_k, floor)^{-1/2}) V^T from a Jacobi decomposition.
InvSqrtResult inv_sqrt(const Matrix& c, double eig_floor = 1e-10);

struct McGain {
  double gain = 0.0;
  std::size_t floored = 0;
};

// |h^T C^{-1/2} phi|^2 / N for a symmetric uniform layout at spacing delta
// about x_u. Waveguide phases are referenced to the array centre; the guide
// is treated as lossless.
McGain gain_mc(std::size_t n_antennas, double delta, const SystemConfig& cfg,
               const DerivedConstants& consts);

// Two-antenna closed form 2 eta cos^2(n_eff k0 delta / 2) /
// ((d^2 + delta^2/4)(1 + j0(k0 delta))).
double gain_mc_two_closed(double delta, const SystemConfig& cfg, const DerivedConstants& consts);

// Same with delta^2/4 dropped from the denominator: (2 eta / d^2) f_mc(delta / lambda).
double gain_mc_two_approx(double delta, const SystemConfig& cfg, const DerivedConstants& consts);

// cos^2(pi n_eff x) / (1 + j0(2 pi x)), x = delta / lambda.
double f_mc(double x, double n_eff);

}  // namespace passgain
