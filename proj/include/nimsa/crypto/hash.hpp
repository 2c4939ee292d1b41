#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace nimsa::crypto {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data);

/// HKDF (RFC 5869) over SHA-256.
Digest hkdf_extract(std::span<const std::uint8_t> salt, std::span<const std::uint8_t> ikm);
Bytes hkdf_expand(std::span<const std::uint8_t> prk, std::span<const std::uint8_t> info, std::size_t length);

/// expand_message_xmd with SHA-256 (RFC 9380 section 5.3.1).
Bytes expand_message_xmd(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst,
                         std::size_t length);

/// Equality in time independent of where the inputs differ.
bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace nimsa::crypto
