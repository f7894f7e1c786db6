#include "passgain/geometry.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "passgain/error.hpp"

namespace passgain {

void SystemConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("invalid config: " + what); };
  if (!(f_c > 0.0) || !std::isfinite(f_c)) fail("f_c must be positive");
  if (!(d > 0.0) || !std::isfinite(d)) fail("d must be positive");
  if (!(n_eff >= 1.0) || !std::isfinite(n_eff)) fail("n_eff must be >= 1");
  if (!std::isfinite(x_u)) fail("x_u must be finite");
  if (x_0 && !std::isfinite(*x_0)) fail("x_0 must be finite or auto");
  if (!(alpha_wg >= 0.0) || !std::isfinite(alpha_wg)) fail("alpha_wg must be >= 0");
  if (!(delta_p > 0.0) || !std::isfinite(delta_p)) fail("delta_p must be positive");
}

DerivedConstants derive_constants(const SystemConfig& cfg) {
  cfg.validate();
  DerivedConstants c;
  c.lambda = kSpeedOfLight / cfg.f_c;
  c.k0 = 2.0 * kPi / c.lambda;
  c.lambda_g = c.lambda / cfg.n_eff;
  const double r = c.lambda / (4.0 * kPi);
  c.eta = r * r;
  return c;
}

AntennaLayout AntennaLayout::from_positions(std::vector<double> positions, double center,
                                            double min_spacing) {
  if (positions.empty() || positions.size() % 2 != 0) {
    throw std::invalid_argument("antenna layout needs a positive even count");
  }
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const double gap = positions[i] - positions[i - 1];
    if (!(gap > 0.0)) throw std::invalid_argument("antenna positions must be strictly increasing");
    if (gap < min_spacing - 1e-12) {
      std::ostringstream os;
      os << "antenna gap " << gap << " m below minimum spacing " << min_spacing << " m";
      throw std::invalid_argument(os.str());
    }
  }
  return AntennaLayout(std::move(positions), center, min_spacing);
}

AntennaLayout symmetric_uniform_layout(const SystemConfig& cfg, std::size_t n_antennas,
                                       double spacing) {
  if (n_antennas < 2 || n_antennas % 2 != 0) {
    throw std::invalid_argument("symmetric layouts need an even antenna count >= 2");
  }
  if (!(spacing > 0.0)) throw std::invalid_argument("antenna spacing must be positive");
  const std::size_t half = n_antennas / 2;
  std::vector<double> xs(n_antennas);
  for (std::size_t n = 1; n <= half; ++n) {
    const double offset = (static_cast<double>(n) - 0.5) * spacing;
    xs[half - n] = cfg.x_u - offset;
    xs[half + n - 1] = cfg.x_u + offset;
  }
  return AntennaLayout::from_positions(std::move(xs), cfg.x_u, spacing);
}

double resolve_feed(const SystemConfig& cfg, const AntennaLayout& layout) {
  if (!cfg.x_0) return layout.leftmost();
  if (*cfg.x_0 > layout.leftmost()) {
    std::ostringstream os;
    os << "feed point x_0 = " << *cfg.x_0 << " m lies right of the leftmost antenna at "
       << layout.leftmost() << " m";
    throw std::invalid_argument(os.str());
  }
  return *cfg.x_0;
}

}  // namespace passgain
