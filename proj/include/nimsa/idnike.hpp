#pragma once

// Identity-based non-interactive key derivation on BLS12-381.
//
// MR labels (those carrying an adapter number) hash into G1 and HA labels
// into G2, so both sides of a pair land on opposite pairing inputs:
//
//   MR:  K = e(s * H1(mr_label), H2(ha_label))
//   HA:  K = e(H1(mr_label), s * H2(ha_label))

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <variant>

#include "nimsa/crypto/hash.hpp"
#include "nimsa/crypto/pairing.hpp"
#include "nimsa/errors.hpp"

namespace nimsa {

using crypto::Bytes;

enum class SecurityLevel { test, standard };

/// "test" or "standard"; anything else is a ConfigError.
SecurityLevel parse_security_level(std::string_view name);
std::string_view to_string(SecurityLevel level);

/// Public parameters. Every profile runs on BLS12-381; `test` swaps the
/// hash-to-curve maps for try-and-increment, which is several times faster.
class PairingSuite {
 public:
  SecurityLevel level() const { return level_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  const Bytes& dst_g1() const { return dst_g1_; }
  const Bytes& dst_g2() const { return dst_g2_; }

  crypto::G1 hash_to_g1(std::span<const std::uint8_t> msg) const;
  crypto::G2 hash_to_g2(std::span<const std::uint8_t> msg) const;
  crypto::Gt pair(const crypto::G1& p, const crypto::G2& q) const { return crypto::pairing(p, q); }

  friend bool operator==(const PairingSuite&, const PairingSuite&) = default;

 private:
  friend PairingSuite setup(SecurityLevel, std::optional<std::uint64_t>);
  SecurityLevel level_ = SecurityLevel::standard;
  std::optional<std::uint64_t> seed_;
  Bytes dst_g1_, dst_g2_;
};

/// A deterministic seed is folded into the hash domain tags, so suites built
/// with different seeds hash identities to unrelated points.
PairingSuite setup(SecurityLevel level, std::optional<std::uint64_t> deterministic_seed = std::nullopt);
PairingSuite setup(std::string_view level, std::optional<std::uint64_t> deterministic_seed = std::nullopt);

struct MasterSecret {
  crypto::Fr s;
};

/// Candidate scalars are four rng words (least significant first) with the
/// top bit cleared; zero and values >= r are rejected and redrawn.
template <class Rng>
  requires std::uniform_random_bit_generator<Rng> && (sizeof(typename Rng::result_type) == 8)
MasterSecret gen_master(const PairingSuite&, Rng& rng) {
  for (;;) {
    crypto::Limbs<4> w;
    for (auto& x : w) x = static_cast<std::uint64_t>(rng() - Rng::min());
    w[3] &= ~std::uint64_t{0} >> 1;
    if (crypto::limbs::is_zero(w) || !crypto::limbs::less(w, crypto::bls12_381::kOrderR)) continue;
    return {crypto::Fr::from_canonical(w)};
  }
}

MasterSecret master_from_u64(std::uint64_t s);

struct IdentityLabel {
  Bytes device_id;
  Bytes ip;
  std::optional<unsigned> if_num;  // absent for HA labels

  bool is_mr() const { return if_num.has_value(); }
  friend bool operator==(const IdentityLabel&, const IdentityLabel&) = default;
};

/// len16(device_id) || device_id || len16(ip) || ip [|| 0x01 || if_num]
/// Lengths are big-endian. Throws EncodingError on an empty device id, a
/// field over 65535 bytes or an adapter number over 255.
Bytes encode_label(std::span<const std::uint8_t> device_id, std::span<const std::uint8_t> ip,
                   std::optional<unsigned> if_num);
Bytes encode_label(const IdentityLabel& label);

/// s * H(label): a G1 point for MR labels, a G2 point for HA labels.
struct PrivatePoint {
  std::variant<crypto::G1, crypto::G2> point;
  friend bool operator==(const PrivatePoint&, const PrivatePoint&) = default;
};

PrivatePoint derive_private_point(const PairingSuite& suite, const MasterSecret& master,
                                  const IdentityLabel& label);

/// Hash of a label into the group matching its side.
PrivatePoint hash_label(const PairingSuite& suite, const IdentityLabel& label);

struct SharedMaterial {
  crypto::Gt k;
  std::array<std::uint8_t, crypto::kGtSize> bytes() const { return crypto::serialize(k); }
  friend bool operator==(const SharedMaterial&, const SharedMaterial&) = default;
};

/// Pairs the private point with the peer's hashed label. The peer label must
/// belong to the opposite side; otherwise ContractError.
SharedMaterial shared_from_private(const PairingSuite& suite, const PrivatePoint& own,
                                   const IdentityLabel& peer_label);

/// Same, with the peer's label already hashed (the HA label never changes).
SharedMaterial shared_from_private(const PairingSuite& suite, const PrivatePoint& own,
                                   const PrivatePoint& peer_hash);

inline constexpr std::string_view kDomainTag = "NIMSA-v1";

struct SessionKey {
  std::array<std::uint8_t, 32> key_bytes{};
  std::uint32_t seed_used = 0;
  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

/// HKDF-SHA256 with salt "NIMSA-v1", IKM the 576-byte GT encoding and info
/// "NIMSA-v1" || seed (4 bytes, big-endian). Seed 0 is a ContractError.
SessionKey derive_session_key(const SharedMaterial& material, std::uint32_t seed);

}  // namespace nimsa
