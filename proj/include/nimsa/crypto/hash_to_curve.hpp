#pragma once

#include <cstdint>
#include <span>

#include "nimsa/crypto/curve.hpp"

namespace nimsa::crypto {

// Random-oracle encodings following the BLS12381G1_XMD:SHA-256_SSWU_RO_ and
// BLS12381G2_XMD:SHA-256_SSWU_RO_ suites: hash_to_field, simplified SWU on an
// isogenous curve, isogeny map, cofactor clearing.
G1 hash_to_g1(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst);
G2 hash_to_g2(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst);

// Exposed for tests.
G1 map_to_curve_g1(const Fp& u);
G2 map_to_curve_g2(const Fp2& u);
G1 clear_cofactor_g1(const G1& p);
G2 clear_cofactor_g2(const G2& p);

// Try-and-increment encodings: hash (msg || counter) to an x coordinate until
// it lands on the curve, then clear the cofactor. Fast but not constant-time;
// only the `test` suite profile uses them.
G1 hash_to_g1_try_increment(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst);
G2 hash_to_g2_try_increment(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> dst);

}  // namespace nimsa::crypto
