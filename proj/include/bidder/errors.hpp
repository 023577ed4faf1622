#pragma once

#include <stdexcept>

namespace bidder {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleTransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bidder
