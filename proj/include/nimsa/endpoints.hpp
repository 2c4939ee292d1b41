#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nimsa/idnike.hpp"
#include "nimsa/ip.hpp"
#include "nimsa/wire.hpp"

namespace nimsa {

struct InterfaceState {
  unsigned if_num = 0;
  Ipv4 current_ip{};
  std::uint32_t seed = 0;
  PrivatePoint private_point;
  SharedMaterial shared_material;
  SessionKey session_key;
};

/// Mobile router: acts as PKG for its own domain and signs every outbound
/// packet with the key of the adapter it leaves on.
class MrEndpoint {
 public:
  MrEndpoint(PairingSuite suite, std::string device_id, MasterSecret master, std::string ha_id, Ipv4 ha_ip,
             std::uint32_t seed_initial = 1);

  std::uint64_t mr_id() const { return mr_id_; }
  const std::string& device_id() const { return device_id_; }
  Ipv4 ha_ip() const { return ha_ip_; }

  /// S_HA^MR = s * H2(ha_id || ha_ip), handed to the HA at registration.
  PrivatePoint registration_voucher() const;

  /// Throws ContractError when the adapter is already tracked.
  void on_adapter_up(unsigned if_num, Ipv4 ip);

  /// Rekeys the adapter for its new address under seed + 1. With data queued
  /// the next data packet carries the change and nothing is returned;
  /// otherwise a notification packet is returned.
  std::optional<NimsaPacket> on_adapter_change(unsigned if_num, Ipv4 new_ip);

  NimsaPacket send(Bytes payload, unsigned if_num) const;
  NimsaPacket make_notification(unsigned if_num) const;

  bool has_interface(unsigned if_num) const { return interfaces_.contains(if_num); }
  const InterfaceState& interface(unsigned if_num) const;
  const std::map<unsigned, InterfaceState>& interfaces() const { return interfaces_; }

  std::deque<Bytes>& pending_data() { return pending_; }
  const std::deque<Bytes>& pending_data() const { return pending_; }

  /// Pairings evaluated so far (one per adapter init or address change).
  std::uint64_t pairing_count() const { return pairings_; }

 private:
  void rekey(InterfaceState& st);
  NimsaPacket build(unsigned if_num, Bytes payload, std::uint8_t flags) const;

  PairingSuite suite_;
  std::string device_id_;
  std::uint64_t mr_id_;
  MasterSecret master_;
  IdentityLabel ha_label_;
  PrivatePoint ha_hash_;
  Ipv4 ha_ip_;
  std::uint32_t seed_initial_;
  std::map<unsigned, InterfaceState> interfaces_;
  std::deque<Bytes> pending_;
  std::uint64_t pairings_ = 0;
};

enum class VerdictReason {
  Accepted,
  AcceptedNewInterface,
  AcceptedAfterHandover,
  DropUnknownDevice,
  DropRevoked,
  DropSeedRollback,
  DropAuthFail,
  DropMalformed,
};

inline constexpr std::size_t kVerdictCount = 8;

std::string_view to_string(VerdictReason v);
inline bool accepted(VerdictReason v) {
  return v == VerdictReason::Accepted || v == VerdictReason::AcceptedNewInterface ||
         v == VerdictReason::AcceptedAfterHandover;
}

struct InterfaceRecord {
  Ipv4 known_ip{};
  std::uint32_t seed = 0;
  SharedMaterial shared_material;
  SessionKey session_key;
};

struct RegistrationRecord {
  std::uint64_t mr_id = 0;
  std::string device_id;
  PrivatePoint ha_private_point;
  std::map<unsigned, InterfaceRecord> per_interface;
  bool revoked = false;
};

class HaEndpoint {
 public:
  HaEndpoint(PairingSuite suite, std::string ha_id, Ipv4 ip);

  const std::string& ha_id() const { return ha_id_; }
  Ipv4 ip() const { return ip_; }

  /// Throws ContractError if an unrevoked record already exists; a revoked
  /// record is replaced.
  void register_mr(std::string device_id, PrivatePoint ha_private_point);

  /// Marks the record revoked; repeated calls are no-ops. Unknown ids throw
  /// ContractError.
  void revoke_mr(std::uint64_t mr_id);

  /// Receive path. Branches, in order:
  ///   malformed                               -> DropMalformed
  ///   no record / revoked record              -> DropUnknownDevice / DropRevoked
  ///   adapter never seen                      -> derive at (src_ip, seed), verify
  ///   seed below the stored one               -> DropSeedRollback
  ///   new address or larger seed              -> derive at (src_ip, seed), verify
  ///   otherwise                               -> verify under the cached key
  /// Stored state only changes after a tag verifies.
  VerdictReason on_packet(const NimsaPacket& pkt);

  const RegistrationRecord* record(std::uint64_t mr_id) const;
  const std::map<std::uint64_t, RegistrationRecord>& registry() const { return registry_; }

  std::uint64_t pairing_count() const { return pairings_; }

 private:
  std::optional<InterfaceRecord> derive_and_verify(const RegistrationRecord& rec, const NimsaPacket& pkt);

  PairingSuite suite_;
  std::string ha_id_;
  Ipv4 ip_;
  std::map<std::uint64_t, RegistrationRecord> registry_;
  std::uint64_t pairings_ = 0;
};

/// Registration records as JSON:
///   {"registrations": [{"device_id": "MR1", "ha_private_point": "<192 hex>",
///                       "revoked": false}, ...]}
/// The point is the compressed G2 encoding. Throws ConfigError on bad input.
void load_registrations(HaEndpoint& ha, std::string_view json_text);
std::string dump_registrations(const HaEndpoint& ha);

}  // namespace nimsa
