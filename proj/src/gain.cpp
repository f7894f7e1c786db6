#include "passgain/gain.hpp"

#include <cmath>
#include <stdexcept>

#include "passgain/error.hpp"
#include "passgain/numerics.hpp"

namespace passgain {
namespace {

void require_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("antenna count must be even and >= 2");
}

void require_increasing(std::span<const double> deltas) {
  if (deltas.empty()) throw std::invalid_argument("offset list is empty");
  double prev = 0.0;
  for (const double v : deltas) {
    if (!(v > prev)) {
      throw std::invalid_argument("offsets must be positive and strictly increasing");
    }
    prev = v;
  }
}

}  // namespace

std::vector<double> uniform_offsets(std::size_t n_antennas, const SystemConfig& cfg,
                                    const DerivedConstants& consts) {
  require_even(n_antennas);
  const double step = cfg.delta_p * consts.lambda;
  std::vector<double> out(n_antennas / 2);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = (static_cast<double>(n) + 0.5) * step;
  return out;
}

double gain_symmetric(std::span<const double> deltas, const SystemConfig& cfg,
                      const DerivedConstants& consts) {
  require_increasing(deltas);
  cplx sum{0.0, 0.0};
  for (const double delta : deltas) {
    const double r = cfg.d * std::sqrt(1.0 + (delta / cfg.d) * (delta / cfg.d));
    sum += 2.0 * std::polar(1.0, -consts.k0 * r) * std::cos(consts.k0 * delta * cfg.n_eff) / r;
  }
  const double n = 2.0 * static_cast<double>(deltas.size());
  return consts.eta / n * std::norm(sum);
}

double gain_uniform(std::size_t n_antennas, const SystemConfig& cfg,
                    const DerivedConstants& consts) {
  return gain_symmetric(uniform_offsets(n_antennas, cfg, consts), cfg, consts);
}

cplx uniform_gain_integrand(double x, const SystemConfig& cfg, const DerivedConstants& consts) {
  const double q = std::sqrt(1.0 + cfg.delta_p * cfg.delta_p * x * x);
  const double kd = consts.k0 * cfg.d;
  return 2.0 * std::polar(1.0, -kd * q) * std::cos(kd * cfg.delta_p * cfg.n_eff * x) / q;
}

double gain_uniform_integral(std::size_t n_antennas, const SystemConfig& cfg,
                             const DerivedConstants& consts) {
  require_even(n_antennas);
  const double eps = consts.lambda / cfg.d;
  const double upper = static_cast<double>(n_antennas) * eps / 2.0;

  // Fastest local angular frequency in x: k0 d delta_p (n_eff + 1).
  const double omega = consts.k0 * cfg.d * cfg.delta_p * (cfg.n_eff + 1.0);
  QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  opts.max_evals = 1'000'000;
  opts.initial_width = 2.0 * kPi / omega;

  const auto re = integrate_adaptive(
      [&](double x) { return uniform_gain_integrand(x, cfg, consts).real(); }, 0.0, upper, opts);
  const auto im = integrate_adaptive(
      [&](double x) { return uniform_gain_integrand(x, cfg, consts).imag(); }, 0.0, upper, opts);

  const double mag2 = re.value * re.value + im.value * im.value;
  return consts.eta * mag2 /
         (static_cast<double>(n_antennas) * cfg.d * cfg.d * eps * eps);
}

double upper_bound_sum(std::span<const double> deltas, const SystemConfig& cfg,
                       const DerivedConstants& consts) {
  require_increasing(deltas);
  double sum = 0.0;
  for (const double delta : deltas) {
    sum += 2.0 / (cfg.d * std::sqrt(1.0 + (delta / cfg.d) * (delta / cfg.d)));
  }
  const double n = 2.0 * static_cast<double>(deltas.size());
  return consts.eta / n * sum * sum;
}

double upper_bound_sum_uniform(std::size_t n_antennas, const SystemConfig& cfg,
                               const DerivedConstants& consts) {
  return upper_bound_sum(uniform_offsets(n_antennas, cfg, consts), cfg, consts);
}

double f_ub(double x) {
  if (x < 0.0) throw std::invalid_argument("f_ub is defined for x >= 0");
  if (x == 0.0) return 0.0;
  const double s = std::asinh(x);
  return s * s / x;
}

double f_ub_derivative(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("f_ub derivative needs x > 0");
  const double s = std::asinh(x);
  return (2.0 * s * x / std::sqrt(1.0 + x * x) - s * s) / (x * x);
}

double upper_bound_closed_value(std::size_t n_antennas, const SystemConfig& cfg,
                                const DerivedConstants& consts) {
  require_even(n_antennas);
  const double eps = consts.lambda / cfg.d;
  const double l_eps = static_cast<double>(n_antennas) * cfg.delta_p * eps / 2.0;
  return 2.0 * consts.eta * f_ub(l_eps) / (cfg.delta_p * cfg.d * cfg.d * eps);
}

BoundReport upper_bound_closed(std::size_t n_antennas, const SystemConfig& cfg,
                               const DerivedConstants& consts) {
  BoundReport rep;
  rep.eps = consts.lambda / cfg.d;
  rep.l_eps = static_cast<double>(n_antennas) * cfg.delta_p * rep.eps / 2.0;
  rep.a_hat_closed = upper_bound_closed_value(n_antennas, cfg, consts);
  const auto deltas = uniform_offsets(n_antennas, cfg, consts);
  rep.a_uni = gain_symmetric(deltas, cfg, consts);
  rep.a_hat_sum = upper_bound_sum(deltas, cfg, consts);
  return rep;
}

XStar find_xstar() {
  const double x = bisect_root(f_ub_derivative, 1.0, 10.0, 1e-8);
  return {x, f_ub(x)};
}

std::size_t optimal_antenna_number(const SystemConfig& cfg, const DerivedConstants& consts) {
  const double n_real = 2.0 * find_xstar().x * cfg.d / (cfg.delta_p * consts.lambda);
  const double pairs = std::floor(n_real / 2.0 + 0.5);
  return pairs < 1.0 ? 2 : 2 * static_cast<std::size_t>(pairs);
}

double optimal_aperture(const SystemConfig& cfg, const DerivedConstants& consts) {
  const auto n = static_cast<double>(optimal_antenna_number(cfg, consts));
  return (n - 1.0) * cfg.delta_p * consts.lambda;
}

double max_gain_estimate(const SystemConfig& cfg, const DerivedConstants& consts) {
  return 2.0 * consts.eta * find_xstar().f / (cfg.d * cfg.delta_p * consts.lambda);
}

double gain_limit(const SystemConfig& cfg, const DerivedConstants& consts) {
  return 2.0 * consts.eta * find_xstar().f / (cfg.d * consts.lambda / 2.0);
}

}  // namespace passgain
