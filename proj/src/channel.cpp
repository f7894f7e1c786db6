#include "passgain/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace passgain {

cplx los_coefficient(double x_n, const SystemConfig& cfg, const DerivedConstants& consts) {
  const double r = std::hypot(cfg.x_u - x_n, cfg.d);
  return std::sqrt(consts.eta) * std::polar(1.0, -consts.k0 * r) / r;
}

double inwaveguide_phase(double x_n, double x_0, const DerivedConstants& consts) {
  if (x_n < x_0) throw std::invalid_argument("antenna lies left of the feed point");
  return 2.0 * kPi * (x_n - x_0) / consts.lambda_g;
}

double waveguide_attenuation(double x_n, double x_0, double alpha_db_per_m) {
  return std::pow(10.0, -alpha_db_per_m * (x_n - x_0) / 20.0);
}

ChannelState compute_channel(const AntennaLayout& layout, const SystemConfig& cfg,
                             const DerivedConstants& consts) {
  const double x_0 = resolve_feed(cfg, layout);
  ChannelState st;
  st.h.reserve(layout.size());
  st.phi.reserve(layout.size());
  st.att.reserve(layout.size());
  for (const double x : layout.positions()) {
    st.h.push_back(los_coefficient(x, cfg, consts));
    st.phi.push_back(inwaveguide_phase(x, x_0, consts));
    st.att.push_back(waveguide_attenuation(x, x_0, cfg.alpha_wg));
  }
  return st;
}

double array_gain_exact(const AntennaLayout& layout, const SystemConfig& cfg,
                        const DerivedConstants& consts) {
  const ChannelState st = compute_channel(layout, cfg, consts);
  cplx sum{0.0, 0.0};
  for (std::size_t n = 0; n < st.h.size(); ++n) {
    sum += st.att[n] * st.h[n] * std::polar(1.0, -st.phi[n]);
  }
  return std::norm(sum) / static_cast<double>(layout.size());
}

double coherent_gain_bound(const AntennaLayout& layout, const SystemConfig& cfg,
                           const DerivedConstants& consts) {
  const ChannelState st = compute_channel(layout, cfg, consts);
  double sum = 0.0;
  for (std::size_t n = 0; n < st.h.size(); ++n) sum += st.att[n] * std::abs(st.h[n]);
  return sum * sum / static_cast<double>(layout.size());
}

namespace {

// Shared prefix walk. Phase and attenuation are taken relative to x_u; the
// feed enters only as a per-prefix scalar factor, which keeps the auto-feed
// case O(size). `Acc` is cplx for the exact gain and double for the bound.
template <typename Acc, typename Term, typename Finish>
std::vector<double> nested_profile(std::span<const double> right, std::span<const double> left,
                                   const SystemConfig& cfg, Term term, Finish finish) {
  if (right.size() != left.size()) {
    throw std::invalid_argument("nested profile needs equally many left and right offsets");
  }
  std::vector<double> out;
  out.reserve(right.size());
  Acc sum{};
  double prev_r = 0.0;
  double prev_l = 0.0;
  for (std::size_t k = 0; k < right.size(); ++k) {
    if (!(right[k] > prev_r) || !(left[k] > prev_l)) {
      throw std::invalid_argument("nested offsets must be positive and strictly increasing");
    }
    prev_r = right[k];
    prev_l = left[k];
    const double leftmost = cfg.x_u - left[k];
    const double x_0 = cfg.x_0.value_or(leftmost);
    if (x_0 > leftmost) break;

    sum += term(cfg.x_u + right[k]) + term(leftmost);
    // 10^{-alpha (x - x_0)/20} = 10^{-alpha (x - x_u)/20} * 10^{-alpha (x_u - x_0)/20}
    const double feed_scale = std::pow(10.0, -cfg.alpha_wg * (cfg.x_u - x_0) / 20.0);
    const double n = 2.0 * static_cast<double>(k + 1);
    out.push_back(feed_scale * feed_scale * finish(sum) / n);
  }
  return out;
}

}  // namespace

std::vector<double> nested_gain_profile(std::span<const double> right,
                                        std::span<const double> left, const SystemConfig& cfg,
                                        const DerivedConstants& consts) {
  const double kg = 2.0 * kPi / consts.lambda_g;
  auto term = [&](double x) {
    const double rel = x - cfg.x_u;
    return std::pow(10.0, -cfg.alpha_wg * rel / 20.0) * los_coefficient(x, cfg, consts) *
           std::polar(1.0, -kg * rel);
  };
  return nested_profile<cplx>(right, left, cfg, term, [](cplx s) { return std::norm(s); });
}

std::vector<double> nested_bound_profile(std::span<const double> right,
                                         std::span<const double> left, const SystemConfig& cfg,
                                         const DerivedConstants& consts) {
  const double amp = std::sqrt(consts.eta);
  auto term = [&](double x) {
    const double rel = x - cfg.x_u;
    return std::pow(10.0, -cfg.alpha_wg * rel / 20.0) * amp / std::hypot(rel, cfg.d);
  };
  return nested_profile<double>(right, left, cfg, term, [](double s) { return s * s; });
}

}  // namespace passgain
