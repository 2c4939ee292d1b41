#pragma once

#include <stdexcept>

namespace nimsa {

/// Unsupported profile, malformed scenario or bad CLI value.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value that cannot be put on the wire (oversized field, reserved bits).
struct EncodingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation's precondition (seed 0, unknown interface, ...).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nimsa
