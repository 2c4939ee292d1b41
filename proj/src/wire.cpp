#include "nimsa/wire.hpp"

#include <algorithm>

namespace nimsa {

namespace {

template <class T>
void put_be(std::uint8_t* out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * (sizeof(T) - 1 - i)));
}

template <class T>
T get_be(const std::uint8_t* in) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v = static_cast<T>(v << 8) | in[i];
  return v;
}

}  // namespace

std::array<std::uint8_t, kHeaderSansTagSize> encode_header_sans_tag(const NimsaHeader& h) {
  if (h.flags & kReservedFlags) throw EncodingError("reserved flag bits set");
  std::array<std::uint8_t, kHeaderSansTagSize> out{};
  out[0] = h.version;
  put_be(out.data() + 1, h.mr_id);
  out[9] = h.if_num;
  put_be(out.data() + 10, h.seed);
  out[14] = h.flags;
  return out;
}

std::array<std::uint8_t, kHeaderSize> encode_header(const NimsaHeader& h) {
  std::array<std::uint8_t, kHeaderSize> out{};
  auto prefix = encode_header_sans_tag(h);
  std::copy(prefix.begin(), prefix.end(), out.begin());
  std::copy(h.auth_tag.begin(), h.auth_tag.end(), out.begin() + kHeaderSansTagSize);
  return out;
}

std::optional<NimsaHeader> decode_header(std::span<const std::uint8_t> in) {
  if (in.size() != kHeaderSize) return std::nullopt;
  NimsaHeader h;
  h.version = in[0];
  h.mr_id = get_be<std::uint64_t>(in.data() + 1);
  h.if_num = in[9];
  h.seed = get_be<std::uint32_t>(in.data() + 10);
  h.flags = in[14];
  if (h.version != kVersion || (h.flags & kReservedFlags)) return std::nullopt;
  std::copy(in.begin() + kHeaderSansTagSize, in.end(), h.auth_tag.begin());
  return h;
}

bool well_formed(const NimsaPacket& pkt) {
  return pkt.header.version == kVersion && !(pkt.header.flags & kReservedFlags) &&
         pkt.ip.payload_length == pkt.payload.size();
}

AuthTag compute_auth_tag(const SessionKey& key, const ImmutableIpFields& ip,
                         std::span<const std::uint8_t> header_sans_tag, std::span<const std::uint8_t> payload) {
  if (header_sans_tag.size() != kHeaderSansTagSize) throw ContractError("header prefix must be 15 bytes");
  Bytes msg;
  msg.reserve(2 * ip.src_ip.size() + 2 + kHeaderSansTagSize + payload.size());
  msg.insert(msg.end(), ip.src_ip.begin(), ip.src_ip.end());
  msg.insert(msg.end(), ip.dst_ip.begin(), ip.dst_ip.end());
  msg.push_back(static_cast<std::uint8_t>(ip.payload_length >> 8));
  msg.push_back(static_cast<std::uint8_t>(ip.payload_length));
  msg.insert(msg.end(), header_sans_tag.begin(), header_sans_tag.end());
  msg.insert(msg.end(), payload.begin(), payload.end());
  return crypto::hmac_sha256(key.key_bytes, msg);
}

bool verify_packet(const SessionKey& key, const NimsaPacket& pkt) noexcept {
  try {
    if (!well_formed(pkt)) return false;
    AuthTag expect = compute_auth_tag(key, pkt.ip, encode_header_sans_tag(pkt.header), pkt.payload);
    return crypto::constant_time_equal(expect, pkt.header.auth_tag);
  } catch (...) {
    return false;
  }
}

void seal_packet(const SessionKey& key, NimsaPacket& pkt) {
  if (pkt.payload.size() > 0xffff) throw EncodingError("payload exceeds 65535 bytes");
  pkt.ip.payload_length = static_cast<std::uint16_t>(pkt.payload.size());
  pkt.header.auth_tag = compute_auth_tag(key, pkt.ip, encode_header_sans_tag(pkt.header), pkt.payload);
}

std::uint64_t mr_id_from_text(std::string_view id) {
  auto d = crypto::sha256(crypto::as_bytes(id));
  return get_be<std::uint64_t>(d.data());
}

}  // namespace nimsa
