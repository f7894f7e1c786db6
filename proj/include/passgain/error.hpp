#pragma once

#include <stdexcept>
#include <string>

namespace passgain {

// Raised for invalid scenario configuration or malformed config files.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a numerical routine fails to converge or bracket a root.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace passgain
