#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace passgain {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// Physical scenario for a single waveguide serving one user.
///
/// The waveguide runs parallel to the x-axis at height `d`; the user sits at
/// (x_u, 0, 0). `x_0` is the feed point; an empty value means "auto", which
/// resolves to the leftmost antenna of whatever layout is evaluated.
struct SystemConfig {
  double f_c = 28e9;              // carrier frequency, Hz
  double d = 3.0;                 // waveguide height, m
  double n_eff = 1.44;            // effective refractive index
  double x_u = 0.0;               // user x-coordinate, m
  std::optional<double> x_0;      // feed x-coordinate, m (nullopt = auto)
  double alpha_wg = 0.0;          // waveguide loss, dB/m
  double delta_p = 0.5;           // minimum spacing, wavelengths

  // Throws ConfigError naming the first violated invariant.
  void validate() const;
};

struct DerivedConstants {
  double lambda = 0.0;    // free-space wavelength, m
  double k0 = 0.0;        // wavenumber, rad/m
  double lambda_g = 0.0;  // guided wavelength, m
  double eta = 0.0;       // path-loss constant (lambda / 4 pi)^2, m^2
};

DerivedConstants derive_constants(const SystemConfig& cfg);

/// Ordered antenna x-coordinates along the waveguide.
///
/// Positions are strictly increasing, the count is even, and no two
/// neighbours are closer than `min_spacing` (up to 1e-12 m).
class AntennaLayout {
public:
  static AntennaLayout from_positions(std::vector<double> positions, double center,
                                      double min_spacing);

  std::span<const double> positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  double center() const { return center_; }
  double min_spacing() const { return min_spacing_; }
  double leftmost() const { return positions_.front(); }
  double rightmost() const { return positions_.back(); }

private:
  AntennaLayout(std::vector<double> positions, double center, double min_spacing)
      : positions_(std::move(positions)), center_(center), min_spacing_(min_spacing) {}

  std::vector<double> positions_;
  double center_ = 0.0;
  double min_spacing_ = 0.0;
};

// x_{+-n} = x_u +- (n - 1/2) * spacing for n = 1..N/2.
AntennaLayout symmetric_uniform_layout(const SystemConfig& cfg, std::size_t n_antennas,
                                       double spacing);

// Resolves the feed point for a layout and checks x_0 <= leftmost antenna.
double resolve_feed(const SystemConfig& cfg, const AntennaLayout& layout);

}  // namespace passgain
