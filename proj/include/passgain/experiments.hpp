#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "passgain/geometry.hpp"

namespace passgain {

enum class SweepKind { fub_curve, fmc_curve, gain_vs_n, maxgain_vs_spacing, gain_vs_delta_mc };

/// Parameters shared by the sweeps. Unused fields are ignored by
/// kinds that do not need them; `grid_step` falls back to a per-kind default
/// when empty.
struct SweepSpec {
  SweepKind kind = SweepKind::gain_vs_n;
  std::vector<double> delta_p = {0.5, 1.0};
  std::vector<std::size_t> n_list = {2, 4};
  std::vector<double> n_eff = {1.44};
  std::size_t n_max = 10000;
  double x_max = 10.0;
  std::optional<double> grid_step;
  std::vector<double> cases = {0.0, 0.08};  // waveguide loss per case, dB/m
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  bool exhaustive = false;

  void validate() const;
};

struct CurvePoint {
  std::string series;
  double x = 0.0;
  double y = 0.0;
  double std_error = 0.0;  // Monte Carlo standard error, 0 when deterministic
};

using Curve = std::vector<CurvePoint>;

// f_ub on (0, x_max] plus a one-point "f_ub:max" series at (x*, f_ub(x*)).
Curve run_fub_curve(const SweepSpec& spec);

// f_mc over delta/lambda in [0, 1] for each n_eff, with ":max" markers.
Curve run_fmc_curve(const SweepSpec& spec);

// Gain against even N for each delta_p and loss case: phase-free bound,
// refined layout, uniform layout, and a fixed antenna at x = 0.
Curve run_gain_vs_n(const SweepSpec& spec, const SystemConfig& cfg);

// Monte Carlo over x_u ~ U[-15, 15] m with the feed at -30 m unless the
// config pins one: best gain over N for each delta_p, next to the closed
// estimate and fluid/fixed single-antenna baselines.
Curve run_maxgain_vs_spacing(const SweepSpec& spec, const SystemConfig& cfg);

// Gain against delta/lambda with and without coupling for each N in n_list.
Curve run_gain_vs_delta_mc(const SweepSpec& spec, const SystemConfig& cfg);

Curve run_sweep(const SweepSpec& spec, const SystemConfig& cfg);

// `series,x,y,stderr` rows sorted by (series, x), 12 significant digits.
// A non-empty comment is emitted first as a `# ...` line.
std::string format_csv(std::span<const CurvePoint> points, const std::string& comment = {});
void write_csv(std::span<const CurvePoint> points, const std::filesystem::path& path,
               const std::string& comment = {});

}  // namespace passgain
