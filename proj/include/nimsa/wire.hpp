#pragma once

// NIMSA header, 47 bytes, all integers big-endian:
//
//   off  len  field
//     0    1  version (0x01)
//     1    8  mr_id
//     9    1  if_num
//    10    4  seed
//    14    1  flags (bit 0: notification; bits 1-7 reserved, zero)
//    15   32  auth_tag = HMAC-SHA-256 over the immutable packet parts
//
// The tag input is src_ip || dst_ip || payload_length (2) || header[0..15)
// || payload. The TTL is mutable in transit and stays out of it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "nimsa/crypto/hash.hpp"
#include "nimsa/idnike.hpp"
#include "nimsa/ip.hpp"

namespace nimsa {

inline constexpr std::size_t kHeaderSize = 47;
inline constexpr std::size_t kHeaderSansTagSize = 15;
inline constexpr std::size_t kIpHeaderSize = 20;
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::uint8_t kFlagNotification = 0x01;
inline constexpr std::uint8_t kReservedFlags = 0xfe;

using AuthTag = std::array<std::uint8_t, 32>;

struct NimsaHeader {
  std::uint8_t version = kVersion;
  std::uint64_t mr_id = 0;
  std::uint8_t if_num = 0;
  std::uint32_t seed = 0;
  std::uint8_t flags = 0;
  AuthTag auth_tag{};

  bool is_notification() const { return flags & kFlagNotification; }
  friend bool operator==(const NimsaHeader&, const NimsaHeader&) = default;
};

/// Throws EncodingError when a reserved flag bit is set.
std::array<std::uint8_t, kHeaderSize> encode_header(const NimsaHeader& h);
std::array<std::uint8_t, kHeaderSansTagSize> encode_header_sans_tag(const NimsaHeader& h);

/// Rejects a wrong length, an unknown version or reserved flag bits.
std::optional<NimsaHeader> decode_header(std::span<const std::uint8_t> in);

struct ImmutableIpFields {
  Ipv4 src_ip{};
  Ipv4 dst_ip{};
  std::uint16_t payload_length = 0;
  friend bool operator==(const ImmutableIpFields&, const ImmutableIpFields&) = default;
};

struct NimsaPacket {
  ImmutableIpFields ip;
  std::uint8_t ttl = 64;
  NimsaHeader header;
  Bytes payload;

  /// IP header + NIMSA header + payload.
  std::size_t wire_size() const { return kIpHeaderSize + kHeaderSize + payload.size(); }
  friend bool operator==(const NimsaPacket&, const NimsaPacket&) = default;
};

/// Header fields valid and payload_length consistent with the payload.
bool well_formed(const NimsaPacket& pkt);

AuthTag compute_auth_tag(const SessionKey& key, const ImmutableIpFields& ip,
                         std::span<const std::uint8_t> header_sans_tag, std::span<const std::uint8_t> payload);

/// Recomputes the tag and compares in constant time. Malformed packets
/// verify false; never throws.
bool verify_packet(const SessionKey& key, const NimsaPacket& pkt) noexcept;

/// Fills in payload_length and the tag for an otherwise complete packet.
void seal_packet(const SessionKey& key, NimsaPacket& pkt);

/// Textual device ids map into the 8-byte header field through the first
/// eight bytes of their SHA-256 digest.
std::uint64_t mr_id_from_text(std::string_view id);

}  // namespace nimsa
