#include "nimsa/endpoints.hpp"

#include <cstdio>

#include "json.hpp"

namespace nimsa {

namespace {

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

IdentityLabel mr_label(std::string_view device_id, const Ipv4& ip, unsigned if_num) {
  return {to_bytes(device_id), Bytes(ip.begin(), ip.end()), if_num};
}

}  // namespace

MrEndpoint::MrEndpoint(PairingSuite suite, std::string device_id, MasterSecret master, std::string ha_id, Ipv4 ha_ip,
                       std::uint32_t seed_initial)
    : suite_(std::move(suite)),
      device_id_(std::move(device_id)),
      mr_id_(mr_id_from_text(device_id_)),
      master_(master),
      ha_label_{to_bytes(ha_id), Bytes(ha_ip.begin(), ha_ip.end()), std::nullopt},
      ha_hash_(hash_label(suite_, ha_label_)),
      ha_ip_(ha_ip),
      seed_initial_(seed_initial) {
  if (device_id_.empty()) throw ContractError("device id must be nonempty");
  if (seed_initial_ == 0) throw ContractError("seed_initial must be at least 1");
}

PrivatePoint MrEndpoint::registration_voucher() const { return derive_private_point(suite_, master_, ha_label_); }

void MrEndpoint::rekey(InterfaceState& st) {
  st.private_point = derive_private_point(suite_, master_, mr_label(device_id_, st.current_ip, st.if_num));
  st.shared_material = shared_from_private(suite_, st.private_point, ha_hash_);
  st.session_key = derive_session_key(st.shared_material, st.seed);
  ++pairings_;
}

void MrEndpoint::on_adapter_up(unsigned if_num, Ipv4 ip) {
  if (if_num > 0xff) throw ContractError("adapter number exceeds one byte");
  if (interfaces_.contains(if_num)) throw ContractError("adapter already up");
  InterfaceState st;
  st.if_num = if_num;
  st.current_ip = ip;
  st.seed = seed_initial_;
  rekey(st);
  interfaces_.emplace(if_num, std::move(st));
}

std::optional<NimsaPacket> MrEndpoint::on_adapter_change(unsigned if_num, Ipv4 new_ip) {
  auto it = interfaces_.find(if_num);
  if (it == interfaces_.end()) throw ContractError("unknown adapter");
  InterfaceState& st = it->second;
  if (st.current_ip == new_ip) throw ContractError("address unchanged");
  if (st.seed == UINT32_MAX) throw ContractError("seed counter exhausted");
  st.current_ip = new_ip;
  ++st.seed;
  rekey(st);
  if (!pending_.empty()) return std::nullopt;
  return make_notification(if_num);
}

const InterfaceState& MrEndpoint::interface(unsigned if_num) const {
  auto it = interfaces_.find(if_num);
  if (it == interfaces_.end()) throw ContractError("unknown adapter");
  return it->second;
}

NimsaPacket MrEndpoint::build(unsigned if_num, Bytes payload, std::uint8_t flags) const {
  const InterfaceState& st = interface(if_num);
  NimsaPacket pkt;
  pkt.ip.src_ip = st.current_ip;
  pkt.ip.dst_ip = ha_ip_;
  pkt.header.mr_id = mr_id_;
  pkt.header.if_num = static_cast<std::uint8_t>(if_num);
  pkt.header.seed = st.seed;
  pkt.header.flags = flags;
  pkt.payload = std::move(payload);
  seal_packet(st.session_key, pkt);
  return pkt;
}

NimsaPacket MrEndpoint::send(Bytes payload, unsigned if_num) const { return build(if_num, std::move(payload), 0); }

NimsaPacket MrEndpoint::make_notification(unsigned if_num) const { return build(if_num, {}, kFlagNotification); }

std::string_view to_string(VerdictReason v) {
  switch (v) {
    case VerdictReason::Accepted: return "Accepted";
    case VerdictReason::AcceptedNewInterface: return "AcceptedNewInterface";
    case VerdictReason::AcceptedAfterHandover: return "AcceptedAfterHandover";
    case VerdictReason::DropUnknownDevice: return "DropUnknownDevice";
    case VerdictReason::DropRevoked: return "DropRevoked";
    case VerdictReason::DropSeedRollback: return "DropSeedRollback";
    case VerdictReason::DropAuthFail: return "DropAuthFail";
    case VerdictReason::DropMalformed: return "DropMalformed";
  }
  return "?";
}

HaEndpoint::HaEndpoint(PairingSuite suite, std::string ha_id, Ipv4 ip)
    : suite_(std::move(suite)), ha_id_(std::move(ha_id)), ip_(ip) {}

void HaEndpoint::register_mr(std::string device_id, PrivatePoint ha_private_point) {
  if (device_id.empty()) throw ContractError("device id must be nonempty");
  if (!std::holds_alternative<crypto::G2>(ha_private_point.point))
    throw ContractError("registration voucher must be a G2 point");
  std::uint64_t id = mr_id_from_text(device_id);
  auto it = registry_.find(id);
  if (it != registry_.end() && !it->second.revoked) throw ContractError("device already registered");
  RegistrationRecord rec;
  rec.mr_id = id;
  rec.device_id = std::move(device_id);
  rec.ha_private_point = std::move(ha_private_point);
  registry_.insert_or_assign(id, std::move(rec));
}

void HaEndpoint::revoke_mr(std::uint64_t mr_id) {
  auto it = registry_.find(mr_id);
  if (it == registry_.end()) throw ContractError("unknown device");
  it->second.revoked = true;
}

const RegistrationRecord* HaEndpoint::record(std::uint64_t mr_id) const {
  auto it = registry_.find(mr_id);
  return it == registry_.end() ? nullptr : &it->second;
}

std::optional<InterfaceRecord> HaEndpoint::derive_and_verify(const RegistrationRecord& rec, const NimsaPacket& pkt) {
  if (pkt.header.seed == 0) return std::nullopt;
  InterfaceRecord ir;
  ir.known_ip = pkt.ip.src_ip;
  ir.seed = pkt.header.seed;
  ir.shared_material = shared_from_private(suite_, rec.ha_private_point,
                                           mr_label(rec.device_id, pkt.ip.src_ip, pkt.header.if_num));
  ++pairings_;
  ir.session_key = derive_session_key(ir.shared_material, ir.seed);
  if (!verify_packet(ir.session_key, pkt)) return std::nullopt;
  return ir;
}

VerdictReason HaEndpoint::on_packet(const NimsaPacket& pkt) {
  if (!well_formed(pkt)) return VerdictReason::DropMalformed;
  auto it = registry_.find(pkt.header.mr_id);
  if (it == registry_.end()) return VerdictReason::DropUnknownDevice;
  RegistrationRecord& rec = it->second;
  if (rec.revoked) return VerdictReason::DropRevoked;

  auto known = rec.per_interface.find(pkt.header.if_num);
  if (known == rec.per_interface.end()) {
    auto ir = derive_and_verify(rec, pkt);
    if (!ir) return VerdictReason::DropAuthFail;
    rec.per_interface.emplace(pkt.header.if_num, std::move(*ir));
    return VerdictReason::AcceptedNewInterface;
  }

  InterfaceRecord& cur = known->second;
  if (pkt.header.seed < cur.seed) return VerdictReason::DropSeedRollback;
  if (pkt.ip.src_ip != cur.known_ip || pkt.header.seed > cur.seed) {
    auto ir = derive_and_verify(rec, pkt);
    if (!ir) return VerdictReason::DropAuthFail;
    cur = std::move(*ir);
    return VerdictReason::AcceptedAfterHandover;
  }
  return verify_packet(cur.session_key, pkt) ? VerdictReason::Accepted : VerdictReason::DropAuthFail;
}

void load_registrations(HaEndpoint& ha, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("registrations: ") + e.what());
  }
  if (!doc.contains("registrations") || !doc["registrations"].is_array())
    throw ConfigError("registrations: missing array");
  for (const auto& r : doc["registrations"]) {
    if (!r.is_object() || !r.contains("device_id") || !r.contains("ha_private_point") ||
        !r["device_id"].is_string() || !r["ha_private_point"].is_string())
      throw ConfigError("registrations: entry needs device_id and ha_private_point strings");
    std::string hex = r["ha_private_point"];
    if (hex.size() != 2 * crypto::kG2CompressedSize) throw ConfigError("registrations: bad point length");
    Bytes raw;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      unsigned v = 0;
      if (std::sscanf(hex.c_str() + i, "%2x", &v) != 1) throw ConfigError("registrations: bad hex");
      raw.push_back(static_cast<std::uint8_t>(v));
    }
    auto point = crypto::deserialize_g2(raw);
    if (!point) throw ConfigError("registrations: point not in G2");
    std::string id = r["device_id"];
    try {
      ha.register_mr(id, PrivatePoint{*point});
      if (r.value("revoked", false)) ha.revoke_mr(mr_id_from_text(id));
    } catch (const ContractError& e) {
      throw ConfigError(std::string("registrations: ") + e.what());
    }
  }
}

std::string dump_registrations(const HaEndpoint& ha) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [id, rec] : ha.registry()) {
    auto enc = crypto::serialize(std::get<crypto::G2>(rec.ha_private_point.point));
    std::string hex;
    char buf[3];
    for (auto b : enc) {
      std::snprintf(buf, sizeof buf, "%02x", b);
      hex += buf;
    }
    arr.push_back({{"device_id", rec.device_id}, {"ha_private_point", hex}, {"revoked", rec.revoked}});
  }
  return nlohmann::json{{"registrations", arr}}.dump(2);
}

}  // namespace nimsa
