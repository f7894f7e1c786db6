#include "passgain/refine.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "passgain/error.hpp"

namespace passgain {

double combined_path(double delta, Side side, const SystemConfig& cfg) {
  const double r = std::hypot(cfg.d, delta);
  return side == Side::right ? r + cfg.n_eff * delta : r - cfg.n_eff * delta;
}

double target_path(double delta, Side side, const SystemConfig& cfg,
                   const DerivedConstants& consts) {
  if (delta < 0.0) throw std::invalid_argument("offset must be non-negative");
  const double path = combined_path(delta, side, cfg);
  const double cycles = path / consts.lambda;
  // A path already on a multiple (to 1e-12 m) needs no shift; without the
  // snap, rounding could push it a full wavelength further.
  const double nearest = consts.lambda * std::round(cycles);
  if (std::abs(path - nearest) <= 1e-12) return nearest;
  return consts.lambda * (side == Side::right ? std::ceil(cycles) : std::floor(cycles));
}

double refine_shift(double delta, Side side, const SystemConfig& cfg,
                    const DerivedConstants& consts) {
  const double t = target_path(delta, side, cfg, consts);
  const double d2 = cfg.d * cfg.d;
  const double n = cfg.n_eff;
  const bool unit_index = std::abs(n - 1.0) <= 1e-9;

  // Solve sqrt(d^2 + D^2) +- n D = t for the new offset D. The conjugate
  // forms avoid cancellation when n_eff is close to one.
  double solved = 0.0;
  if (side == Side::right) {
    if (unit_index) {
      solved = (t * t - d2) / (2.0 * t);
    } else {
      // (t n - sqrt(t^2 + d^2 (n^2 - 1))) / (n^2 - 1), rationalised.
      solved = (t * t - d2) / (t * n + std::sqrt(t * t + d2 * (n * n - 1.0)));
    }
  } else {
    if (unit_index) {
      if (!(t > 0.0)) {
        throw NumericError("left-side refinement cannot reach a positive path multiple");
      }
      solved = (d2 - t * t) / (2.0 * t);
    } else {
      const double root = std::sqrt(t * t + d2 * (n * n - 1.0));
      solved = t >= 0.0 ? (d2 - t * t) / (root + t * n) : (root - t * n) / (n * n - 1.0);
    }
  }

  const double shift = solved > delta ? solved - delta : 0.0;
  const double residual = combined_path(delta + shift, side, cfg) - t;
  if (!(std::abs(residual) <= 1e-9)) {
    std::ostringstream os;
    os << "refinement residual " << residual << " m exceeds 1e-9 m at offset " << delta;
    throw NumericError(os.str());
  }
  return shift;
}

RefinedOffsets refine_side(std::size_t count, Side side, const SystemConfig& cfg,
                           const DerivedConstants& consts) {
  const double step = cfg.delta_p * consts.lambda;
  RefinedOffsets out;
  out.offsets.reserve(count);
  out.shifts.reserve(count);
  out.targets.reserve(count);
  double nominal = step / 2.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = refine_shift(nominal, side, cfg, consts);
    out.targets.push_back(target_path(nominal, side, cfg, consts));
    out.shifts.push_back(v);
    out.offsets.push_back(nominal + v);
    nominal = out.offsets.back() + step;
  }
  return out;
}

RefinedLayout build_refined_layout(std::size_t n_antennas, const SystemConfig& cfg,
                                   const DerivedConstants& consts) {
  if (n_antennas < 2 || n_antennas % 2 != 0) {
    throw std::invalid_argument("antenna count must be even and >= 2");
  }
  const std::size_t half = n_antennas / 2;
  RefinedOffsets right = refine_side(half, Side::right, cfg, consts);
  RefinedOffsets left = refine_side(half, Side::left, cfg, consts);

  std::vector<double> xs(n_antennas);
  for (std::size_t i = 0; i < half; ++i) {
    xs[half - 1 - i] = cfg.x_u - left.offsets[i];
    xs[half + i] = cfg.x_u + right.offsets[i];
  }
  auto layout = AntennaLayout::from_positions(std::move(xs), cfg.x_u,
                                              cfg.delta_p * consts.lambda);
  return {std::move(layout), std::move(right), std::move(left)};
}

}  // namespace passgain
