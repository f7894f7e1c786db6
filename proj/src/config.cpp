#include "passgain/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "passgain/error.hpp"

namespace passgain {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view value, std::size_t line_no) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    std::ostringstream os;
    os << "line " << line_no << ": value for '" << key << "' is not a number: '" << value << "'";
    throw ConfigError(os.str());
  }
  return out;
}

}  // namespace

SystemConfig parse_config(std::string_view text) {
  SystemConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }

    if (key == "f_c_hz") {
      cfg.f_c = parse_number(key, value, line_no);
    } else if (key == "d_m") {
      cfg.d = parse_number(key, value, line_no);
    } else if (key == "n_eff") {
      cfg.n_eff = parse_number(key, value, line_no);
    } else if (key == "x_u_m") {
      cfg.x_u = parse_number(key, value, line_no);
    } else if (key == "x_0_m") {
      if (value == "auto") {
        cfg.x_0.reset();
      } else {
        cfg.x_0 = parse_number(key, value, line_no);
      }
    } else if (key == "alpha_wg_db_per_m") {
      cfg.alpha_wg = parse_number(key, value, line_no);
    } else if (key == "delta_p") {
      cfg.delta_p = parse_number(key, value, line_no);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace passgain
