#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nimsa {

using Ipv4 = std::array<std::uint8_t, 4>;

/// Dotted-quad parsing; throws ConfigError on malformed input.
Ipv4 parse_ipv4(std::string_view text);
std::string to_string(const Ipv4& ip);

}  // namespace nimsa
