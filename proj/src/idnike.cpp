#include "nimsa/idnike.hpp"

#include <string>

#include "nimsa/crypto/hash_to_curve.hpp"

namespace nimsa {

using namespace crypto;

SecurityLevel parse_security_level(std::string_view name) {
  if (name == "test") return SecurityLevel::test;
  if (name == "standard") return SecurityLevel::standard;
  throw ConfigError("unsupported security level: " + std::string(name));
}

std::string_view to_string(SecurityLevel level) {
  return level == SecurityLevel::test ? "test" : "standard";
}

PairingSuite setup(SecurityLevel level, std::optional<std::uint64_t> deterministic_seed) {
  if (level != SecurityLevel::test && level != SecurityLevel::standard)
    throw ConfigError("unsupported security level");
  std::string suffix = level == SecurityLevel::test ? "XMD:SHA-256_TAI_" : "XMD:SHA-256_SSWU_RO_";
  if (deterministic_seed) suffix += "SEED" + std::to_string(*deterministic_seed) + "_";
  auto tag = [&](std::string_view group) {
    std::string s = std::string(kDomainTag) + "-BLS12381" + std::string(group) + "_" + suffix;
    return Bytes(s.begin(), s.end());
  };
  PairingSuite suite;
  suite.level_ = level;
  suite.seed_ = deterministic_seed;
  suite.dst_g1_ = tag("G1");
  suite.dst_g2_ = tag("G2");
  return suite;
}

PairingSuite setup(std::string_view level, std::optional<std::uint64_t> deterministic_seed) {
  return setup(parse_security_level(level), deterministic_seed);
}

G1 PairingSuite::hash_to_g1(std::span<const std::uint8_t> msg) const {
  return level_ == SecurityLevel::test ? hash_to_g1_try_increment(msg, dst_g1_) : crypto::hash_to_g1(msg, dst_g1_);
}

G2 PairingSuite::hash_to_g2(std::span<const std::uint8_t> msg) const {
  return level_ == SecurityLevel::test ? hash_to_g2_try_increment(msg, dst_g2_) : crypto::hash_to_g2(msg, dst_g2_);
}

MasterSecret master_from_u64(std::uint64_t s) {
  if (s == 0) throw ContractError("master secret must be nonzero");
  return {Fr::from_u64(s)};
}

Bytes encode_label(std::span<const std::uint8_t> device_id, std::span<const std::uint8_t> ip,
                   std::optional<unsigned> if_num) {
  if (device_id.empty()) throw EncodingError("device id must be nonempty");
  if (device_id.size() > 0xffff || ip.size() > 0xffff) throw EncodingError("label field exceeds 65535 bytes");
  if (if_num && *if_num > 0xff) throw EncodingError("adapter number exceeds one byte");
  Bytes out;
  out.reserve(4 + device_id.size() + ip.size() + 2);
  auto put = [&](std::span<const std::uint8_t> field) {
    out.push_back(static_cast<std::uint8_t>(field.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(field.size()));
    out.insert(out.end(), field.begin(), field.end());
  };
  put(device_id);
  put(ip);
  if (if_num) {
    out.push_back(0x01);
    out.push_back(static_cast<std::uint8_t>(*if_num));
  }
  return out;
}

Bytes encode_label(const IdentityLabel& label) { return encode_label(label.device_id, label.ip, label.if_num); }

PrivatePoint hash_label(const PairingSuite& suite, const IdentityLabel& label) {
  Bytes msg = encode_label(label);
  if (label.is_mr()) return {suite.hash_to_g1(msg)};
  return {suite.hash_to_g2(msg)};
}

PrivatePoint derive_private_point(const PairingSuite& suite, const MasterSecret& master,
                                  const IdentityLabel& label) {
  PrivatePoint h = hash_label(suite, label);
  return std::visit([&](const auto& p) { return PrivatePoint{p.mul(master.s)}; }, h.point);
}

SharedMaterial shared_from_private(const PairingSuite& suite, const PrivatePoint& own,
                                   const PrivatePoint& peer_hash) {
  if (own.point.index() == peer_hash.point.index())
    throw ContractError("own and peer labels are on the same side");
  if (const auto* g1 = std::get_if<G1>(&own.point)) return {suite.pair(*g1, std::get<G2>(peer_hash.point))};
  return {suite.pair(std::get<G1>(peer_hash.point), std::get<G2>(own.point))};
}

SharedMaterial shared_from_private(const PairingSuite& suite, const PrivatePoint& own,
                                   const IdentityLabel& peer_label) {
  bool own_is_mr = std::holds_alternative<G1>(own.point);
  if (own_is_mr == peer_label.is_mr()) throw ContractError("own and peer labels are on the same side");
  return shared_from_private(suite, own, hash_label(suite, peer_label));
}

SessionKey derive_session_key(const SharedMaterial& material, std::uint32_t seed) {
  if (seed == 0) throw ContractError("seed counter starts at 1");
  auto ikm = material.bytes();
  Digest prk = hkdf_extract(as_bytes(kDomainTag), ikm);
  Bytes info(kDomainTag.begin(), kDomainTag.end());
  for (int shift = 24; shift >= 0; shift -= 8) info.push_back(static_cast<std::uint8_t>(seed >> shift));
  Bytes okm = hkdf_expand(prk, info, 32);
  SessionKey key;
  std::copy(okm.begin(), okm.end(), key.key_bytes.begin());
  key.seed_used = seed;
  return key;
}

}  // namespace nimsa
