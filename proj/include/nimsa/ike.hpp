#pragma once

// Message-level IKEv2 model: the two initial exchanges (IKE_SA_INIT,
// IKE_AUTH), MOBIKE address update followed by a CHILD_SA rekey, and AH
// protection for data. No wire format and no real Diffie-Hellman; the
// simulator charges computation as constant delays.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "nimsa/ip.hpp"
#include "nimsa/sim/time.hpp"
#include "nimsa/wire.hpp"

namespace nimsa::ike {

using sim::Micros;

struct IkeConfig {
  std::size_t init_req_bytes = 500;
  std::size_t init_resp_bytes = 500;
  std::size_t auth_req_bytes = 1100;
  std::size_t auth_resp_bytes = 1100;
  double rto_initial_ms = 500;
  double rto_backoff = 2;
  int max_retries = 5;
  std::size_t update_req_bytes = 200;
  std::size_t update_resp_bytes = 200;
  std::size_t rekey_req_bytes = 600;
  std::size_t rekey_resp_bytes = 600;
  std::size_t per_packet_overhead_bytes = 40;
  double processing_ms = 2;  // per IKE message handled
  double ah_ms = 0.02;       // per AH protect or verify

  /// Throws ConfigError unless sizes and timers are positive and
  /// max_retries >= 1.
  void validate() const;
};

enum class MsgType : std::uint8_t { InitReq, InitResp, AuthReq, AuthResp, UpdateReq, UpdateResp, RekeyReq, RekeyResp };
inline constexpr std::size_t kMsgTypeCount = 8;

std::string_view to_string(MsgType t);
bool is_request(MsgType t);
MsgType response_to(MsgType request);
std::size_t message_bytes(const IkeConfig& cfg, MsgType t);

struct IkeMessage {
  MsgType type = MsgType::InitReq;
  std::uint32_t message_id = 0;
  std::size_t bytes = 0;
  std::uint32_t spi = 0;  // proposed SA on AuthReq and RekeyReq
};

enum class IkeState { Idle, InitSent, AuthSent, Established, UpdateSent, RekeySent };
std::string_view to_string(IkeState s);

/// What the caller must do after feeding the session an input.
struct IkeAction {
  std::optional<IkeMessage> send;
  std::optional<Micros> timer_at;  // arm the retransmission timer
  std::uint64_t timer_generation = 0;
  bool failed = false;             // retries exhausted; back to Idle
  bool established = false;        // initial exchanges completed
  bool handover_complete = false;  // MOBIKE update and rekey completed
};

/// Initiator side (the mobile router).
class IkeSession {
 public:
  IkeSession(IkeConfig cfg, Ipv4 ip);

  /// Idle -> InitSent. ContractError in any other state.
  IkeAction initiate(Micros now);

  /// Advances the ladder on the matching response; anything else (late
  /// duplicates, requests, responses for another state) is ignored.
  IkeAction on_message(const IkeMessage& msg, Micros now);

  /// Retransmits the outstanding request with a backed-off timeout, or fails
  /// the session after max_retries retransmissions. Stale generations are
  /// ignored.
  IkeAction on_timeout(Micros now, std::uint64_t generation);

  /// Starts UPDATE_SA_ADDRESSES then rekey. Outside Established the request
  /// is queued and starts once the session gets there.
  IkeAction mobike_handover(Ipv4 new_ip, Micros now);

  /// Jumps straight to Established (pre-provisioned sessions).
  void force_established(Micros now);

  IkeState state() const { return state_; }
  bool data_allowed() const { return state_ == IkeState::Established; }
  Ipv4 current_ip() const { return ip_; }
  int retry_count() const { return retry_count_; }
  double current_rto_ms() const { return rto_ms_; }
  std::optional<Micros> established_at() const { return established_at_; }
  bool handover_pending() const { return queued_handover_.has_value(); }
  std::uint64_t timer_generation() const { return timer_generation_; }
  /// SA used for AH while Established.
  std::uint32_t spi() const { return spi_; }

 private:
  IkeAction send_request(MsgType t, IkeState next, Micros now);
  IkeAction arrive_established(Micros now, IkeAction act);

  IkeConfig cfg_;
  IkeState state_ = IkeState::Idle;
  Ipv4 ip_;
  std::optional<Ipv4> queued_handover_;
  int retry_count_ = 0;
  double rto_ms_;
  std::uint32_t next_message_id_ = 0;
  std::optional<IkeMessage> outstanding_;
  std::optional<Micros> established_at_;
  std::uint64_t timer_generation_ = 0;
  std::uint32_t spi_ = 0;
  std::uint32_t spi_counter_ = 0;
};

/// Responder side (the home agent). Answers each new request, replays the
/// cached answer for a retransmitted one, and tracks the installed SA.
class IkeResponder {
 public:
  explicit IkeResponder(IkeConfig cfg);

  std::optional<IkeMessage> on_message(const IkeMessage& msg);
  void force_established(std::uint32_t spi);

  bool sa_installed() const { return sa_installed_; }
  std::uint32_t spi() const { return spi_; }
  /// The current SA, or the one it replaced (packets already in flight).
  bool accepts_spi(std::uint32_t spi) const { return sa_installed_ && (spi == spi_ || spi == previous_spi_); }

 private:
  IkeConfig cfg_;
  std::optional<IkeMessage> last_request_;
  std::optional<IkeMessage> last_response_;
  bool init_done_ = false;
  bool sa_installed_ = false;
  std::uint32_t spi_ = 0;
  std::uint32_t previous_spi_ = 0;
};

/// Stand-in for the keying material an SA would carry.
using SaKey = std::array<std::uint8_t, 32>;
SaKey sa_key(std::uint32_t spi);

struct AhPacket {
  ImmutableIpFields ip;
  std::uint8_t ttl = 64;
  std::uint32_t spi = 0;
  std::uint32_t seq = 0;
  AuthTag icv{};
  Bytes payload;
  std::size_t overhead_bytes = 40;

  std::size_t wire_size() const { return kIpHeaderSize + overhead_bytes + payload.size(); }
};

/// ICV = HMAC-SHA-256(key, src || dst || payload_len || spi || seq || payload).
AhPacket ah_protect(const SaKey& key, std::uint32_t spi, std::uint32_t seq, ImmutableIpFields ip, Bytes payload,
                    const IkeConfig& cfg);
bool ah_verify(const SaKey& key, const AhPacket& pkt) noexcept;

}  // namespace nimsa::ike
