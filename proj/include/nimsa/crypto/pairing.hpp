#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "nimsa/crypto/curve.hpp"

namespace nimsa::crypto {

/// Element of the order-r target group GT inside Fp12*.
using Gt = Fp12;

inline constexpr std::size_t kGtSize = 576;

/// Optimal ate pairing e: G1 x G2 -> GT.
///
/// The hard part of the final exponentiation uses the (x-1)^2 (x+p) (x^2+p^2-1) + 3
/// decomposition of 3 * (p^4 - p^2 + 1) / r, so the result is the cube of
/// the textbook reduced pairing. That map is still bilinear and
/// non-degenerate since gcd(3, r) = 1.
Gt pairing(const G1& p, const G2& q);

Fp12 miller_loop(const G1& p, const G2& q);
Gt final_exponentiation(const Fp12& f);

/// True when f^r == 1.
bool gt_in_subgroup(const Gt& f);

/// Canonical GT encoding: 12 big-endian 48-byte Fp words, highest tower
/// coefficient first (c1 before c0 at every level). The identity encodes as
/// 575 zero bytes followed by 0x01.
std::array<std::uint8_t, kGtSize> serialize(const Gt& f);
std::optional<Gt> deserialize_gt(std::span<const std::uint8_t> in);

}  // namespace nimsa::crypto
