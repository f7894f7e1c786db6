#pragma once

#include <cstddef>
#include <vector>

#include "passgain/geometry.hpp"

namespace passgain {

/// Which side of the user an antenna sits on. The feed is to the left, so
/// in-waveguide path grows with the offset on the right side and shrinks
/// with it on the left side.
enum class Side { right, left };

// Free-space plus in-waveguide path relative to the user, up to a common
// feed-dependent constant: sqrt(d^2 + delta^2) +- n_eff * delta.
double combined_path(double delta, Side side, const SystemConfig& cfg);

// Nearest multiple of lambda reachable by moving the antenna outward:
// ceil for the right side (path increases), floor for the left side.
double target_path(double delta, Side side, const SystemConfig& cfg,
                   const DerivedConstants& consts);

// Outward shift v >= 0 with combined_path(delta + v) == target_path(delta).
// Closed form; the n_eff == 1 branch applies when |n_eff - 1| <= 1e-9.
double refine_shift(double delta, Side side, const SystemConfig& cfg,
                    const DerivedConstants& consts);

struct RefinedOffsets {
  std::vector<double> offsets;  // refined |x_n - x_u|, pair order outward
  std::vector<double> shifts;   // v_n per antenna
  std::vector<double> targets;  // multiple of lambda reached by each antenna
};

// Sequential construction on one side: the first antenna starts at
// delta_p lambda / 2, each later one at the previous refined offset plus
// delta_p lambda, and every antenna is pushed outward by refine_shift.
RefinedOffsets refine_side(std::size_t count, Side side, const SystemConfig& cfg,
                           const DerivedConstants& consts);

struct RefinedLayout {
  AntennaLayout layout;
  RefinedOffsets right;
  RefinedOffsets left;
};

// Both sides refined independently, so every antenna's combined path is a
// multiple of lambda and all N contributions add in phase.
RefinedLayout build_refined_layout(std::size_t n_antennas, const SystemConfig& cfg,
                                   const DerivedConstants& consts);

}  // namespace passgain
