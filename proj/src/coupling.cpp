#include "passgain/coupling.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "passgain/channel.hpp"

namespace passgain {

double sinc_j0(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

Matrix CouplingMatrix::dense() const {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[i > j ? i - j : j - i];
  return m;
}

CouplingMatrix coupling_matrix(std::size_t n_antennas, double delta,
                               const DerivedConstants& consts) {
  if (n_antennas < 2 || n_antennas % 2 != 0) {
    throw std::invalid_argument("antenna count must be even and >= 2");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("coupling spacing must be positive");
  CouplingMatrix c;
  c.n = n_antennas;
  c.delta = delta;
  c.first_row.resize(n_antennas);
  for (std::size_t k = 0; k < n_antennas; ++k) {
    c.first_row[k] = sinc_j0(consts.k0 * delta * static_cast<double>(k));
  }
  return c;
}

InvSqrtResult inv_sqrt(const Matrix& c, double eig_floor) {
  const SymmetricEigen eig = jacobi_eigen(c);
  const std::size_t n = c.size();
  InvSqrtResult out;
  out.value = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lam = eig.values[k];
    if (lam < eig_floor) {
      lam = eig_floor;
      ++out.floored;
    }
    const double w = 1.0 / std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = eig.vectors(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) out.value(i, j) += vi * eig.vectors(j, k);
    }
  }
  return out;
}

McGain gain_mc(std::size_t n_antennas, double delta, const SystemConfig& cfg,
               const DerivedConstants& consts) {
  const CouplingMatrix c = coupling_matrix(n_antennas, delta, consts);
  const InvSqrtResult root = inv_sqrt(c.dense());
  const AntennaLayout layout = symmetric_uniform_layout(cfg, n_antennas, delta);
  const auto xs = layout.positions();

  std::vector<cplx> h(n_antennas);
  std::vector<cplx> phase(n_antennas);
  for (std::size_t n = 0; n < n_antennas; ++n) {
    h[n] = los_coefficient(xs[n], cfg, consts);
    phase[n] = std::polar(1.0, -2.0 * kPi * (xs[n] - cfg.x_u) / consts.lambda_g);
  }
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < n_antennas; ++i) {
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < n_antennas; ++j) row += root.value(i, j) * phase[j];
    sum += h[i] * row;
  }
  return {std::norm(sum) / static_cast<double>(n_antennas), root.floored};
}

double gain_mc_two_closed(double delta, const SystemConfig& cfg, const DerivedConstants& consts) {
  if (delta < 0.0) throw std::invalid_argument("spacing must be non-negative");
  const double c = std::cos(cfg.n_eff * consts.k0 * delta / 2.0);
  return 2.0 * consts.eta * c * c /
         ((cfg.d * cfg.d + delta * delta / 4.0) * (1.0 + sinc_j0(consts.k0 * delta)));
}

double gain_mc_two_approx(double delta, const SystemConfig& cfg, const DerivedConstants& consts) {
  if (delta < 0.0) throw std::invalid_argument("spacing must be non-negative");
  return 2.0 * consts.eta / (cfg.d * cfg.d) * f_mc(delta / consts.lambda, cfg.n_eff);
}

double f_mc(double x, double n_eff) {
  if (x < 0.0) throw std::invalid_argument("f_mc is defined for x >= 0");
  const double c = std::cos(kPi * n_eff * x);
  return c * c / (1.0 + sinc_j0(2.0 * kPi * x));
}

}  // namespace passgain
