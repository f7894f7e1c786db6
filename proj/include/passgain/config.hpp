#pragma once

#include <filesystem>
#include <string_view>

#include "passgain/geometry.hpp"

namespace passgain {

// Flat `key = value` scenario files. Recognised keys:
//   f_c_hz, d_m, n_eff, x_u_m, x_0_m (number or `auto`), alpha_wg_db_per_m, delta_p
// Blank lines and `#` comments are ignored. Keys that are absent keep the
// SystemConfig defaults; unknown or repeated keys are a ConfigError.
SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);

}  // namespace passgain
