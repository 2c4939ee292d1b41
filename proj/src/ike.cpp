#include "nimsa/ike.hpp"

#include "nimsa/crypto/hash.hpp"
#include "nimsa/errors.hpp"

namespace nimsa::ike {

void IkeConfig::validate() const {
  for (std::size_t b : {init_req_bytes, init_resp_bytes, auth_req_bytes, auth_resp_bytes, update_req_bytes,
                        update_resp_bytes, rekey_req_bytes, rekey_resp_bytes, per_packet_overhead_bytes})
    if (b == 0) throw ConfigError("ike: message sizes must be positive");
  if (!(rto_initial_ms > 0) || !(rto_backoff > 0)) throw ConfigError("ike: timers must be positive");
  if (max_retries < 1) throw ConfigError("ike: max_retries must be at least 1");
  if (processing_ms < 0 || ah_ms < 0) throw ConfigError("ike: processing delays must be non-negative");
}

std::string_view to_string(MsgType t) {
  switch (t) {
    case MsgType::InitReq: return "ike_init_req";
    case MsgType::InitResp: return "ike_init_resp";
    case MsgType::AuthReq: return "ike_auth_req";
    case MsgType::AuthResp: return "ike_auth_resp";
    case MsgType::UpdateReq: return "mobike_update_req";
    case MsgType::UpdateResp: return "mobike_update_resp";
    case MsgType::RekeyReq: return "mobike_rekey_req";
    case MsgType::RekeyResp: return "mobike_rekey_resp";
  }
  return "?";
}

std::string_view to_string(IkeState s) {
  switch (s) {
    case IkeState::Idle: return "Idle";
    case IkeState::InitSent: return "InitSent";
    case IkeState::AuthSent: return "AuthSent";
    case IkeState::Established: return "Established";
    case IkeState::UpdateSent: return "UpdateSent";
    case IkeState::RekeySent: return "RekeySent";
  }
  return "?";
}

bool is_request(MsgType t) { return static_cast<int>(t) % 2 == 0; }

MsgType response_to(MsgType request) { return static_cast<MsgType>(static_cast<int>(request) | 1); }

std::size_t message_bytes(const IkeConfig& cfg, MsgType t) {
  switch (t) {
    case MsgType::InitReq: return cfg.init_req_bytes;
    case MsgType::InitResp: return cfg.init_resp_bytes;
    case MsgType::AuthReq: return cfg.auth_req_bytes;
    case MsgType::AuthResp: return cfg.auth_resp_bytes;
    case MsgType::UpdateReq: return cfg.update_req_bytes;
    case MsgType::UpdateResp: return cfg.update_resp_bytes;
    case MsgType::RekeyReq: return cfg.rekey_req_bytes;
    case MsgType::RekeyResp: return cfg.rekey_resp_bytes;
  }
  return 0;
}

IkeSession::IkeSession(IkeConfig cfg, Ipv4 ip) : cfg_(cfg), ip_(ip), rto_ms_(cfg.rto_initial_ms) { cfg_.validate(); }

IkeAction IkeSession::send_request(MsgType t, IkeState next, Micros now) {
  IkeMessage msg{t, next_message_id_++, message_bytes(cfg_, t), 0};
  if (t == MsgType::AuthReq || t == MsgType::RekeyReq) msg.spi = ++spi_counter_;
  outstanding_ = msg;
  state_ = next;
  retry_count_ = 0;
  rto_ms_ = cfg_.rto_initial_ms;
  IkeAction act;
  act.send = msg;
  act.timer_at = now + sim::from_ms(rto_ms_);
  act.timer_generation = ++timer_generation_;
  return act;
}

IkeAction IkeSession::initiate(Micros now) {
  if (state_ != IkeState::Idle) throw ContractError("ike: initiate outside Idle");
  next_message_id_ = 0;
  return send_request(MsgType::InitReq, IkeState::InitSent, now);
}

IkeAction IkeSession::arrive_established(Micros now, IkeAction act) {
  state_ = IkeState::Established;
  if (queued_handover_) {
    ip_ = *queued_handover_;
    queued_handover_.reset();
    IkeAction next = send_request(MsgType::UpdateReq, IkeState::UpdateSent, now);
    next.established = act.established;
    next.handover_complete = false;
    return next;
  }
  return act;
}

IkeAction IkeSession::on_message(const IkeMessage& msg, Micros now) {
  if (!outstanding_ || is_request(msg.type) || msg.type != response_to(outstanding_->type) ||
      msg.message_id != outstanding_->message_id)
    return {};
  const IkeMessage req = *outstanding_;
  outstanding_.reset();
  ++timer_generation_;
  retry_count_ = 0;
  rto_ms_ = cfg_.rto_initial_ms;
  IkeAction act;
  switch (msg.type) {
    case MsgType::InitResp:
      return send_request(MsgType::AuthReq, IkeState::AuthSent, now);
    case MsgType::AuthResp:
      spi_ = req.spi;
      established_at_ = now;
      act.established = true;
      return arrive_established(now, act);
    case MsgType::UpdateResp:
      return send_request(MsgType::RekeyReq, IkeState::RekeySent, now);
    case MsgType::RekeyResp:
      spi_ = req.spi;
      act.handover_complete = true;
      return arrive_established(now, act);
    default:
      return {};
  }
}

IkeAction IkeSession::on_timeout(Micros now, std::uint64_t generation) {
  if (generation != timer_generation_ || !outstanding_) return {};
  IkeAction act;
  if (retry_count_ >= cfg_.max_retries) {
    state_ = IkeState::Idle;
    outstanding_.reset();
    retry_count_ = 0;
    rto_ms_ = cfg_.rto_initial_ms;
    ++timer_generation_;
    act.failed = true;
    return act;
  }
  ++retry_count_;
  rto_ms_ *= cfg_.rto_backoff;
  act.send = outstanding_;
  act.timer_at = now + sim::from_ms(rto_ms_);
  act.timer_generation = ++timer_generation_;
  return act;
}

IkeAction IkeSession::mobike_handover(Ipv4 new_ip, Micros now) {
  if (state_ != IkeState::Established) {
    queued_handover_ = new_ip;
    return {};
  }
  ip_ = new_ip;
  return send_request(MsgType::UpdateReq, IkeState::UpdateSent, now);
}

void IkeSession::force_established(Micros now) {
  state_ = IkeState::Established;
  outstanding_.reset();
  ++timer_generation_;
  spi_ = ++spi_counter_;
  established_at_ = now;
}

IkeResponder::IkeResponder(IkeConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void IkeResponder::force_established(std::uint32_t spi) {
  init_done_ = true;
  sa_installed_ = true;
  previous_spi_ = spi_;
  spi_ = spi;
}

std::optional<IkeMessage> IkeResponder::on_message(const IkeMessage& msg) {
  if (!is_request(msg.type)) return std::nullopt;
  if (last_request_ && last_request_->type == msg.type && last_request_->message_id == msg.message_id)
    return last_response_;
  switch (msg.type) {
    case MsgType::InitReq:
      init_done_ = true;
      sa_installed_ = false;
      break;
    case MsgType::AuthReq:
      if (!init_done_) return std::nullopt;
      sa_installed_ = true;
      previous_spi_ = spi_;
      spi_ = msg.spi;
      break;
    case MsgType::UpdateReq:
      if (!sa_installed_) return std::nullopt;
      break;
    case MsgType::RekeyReq:
      if (!sa_installed_) return std::nullopt;
      previous_spi_ = spi_;
      spi_ = msg.spi;
      break;
    default:
      return std::nullopt;
  }
  MsgType rt = response_to(msg.type);
  last_request_ = msg;
  last_response_ = IkeMessage{rt, msg.message_id, message_bytes(cfg_, rt), msg.spi};
  return last_response_;
}

SaKey sa_key(std::uint32_t spi) {
  Bytes seed{'i', 'k', 'e', 'v', '2', '-', 's', 'a'};
  for (int shift = 24; shift >= 0; shift -= 8) seed.push_back(static_cast<std::uint8_t>(spi >> shift));
  return crypto::sha256(seed);
}

namespace {

AuthTag ah_icv(const SaKey& key, const AhPacket& pkt) {
  Bytes msg;
  msg.reserve(18 + pkt.payload.size());
  msg.insert(msg.end(), pkt.ip.src_ip.begin(), pkt.ip.src_ip.end());
  msg.insert(msg.end(), pkt.ip.dst_ip.begin(), pkt.ip.dst_ip.end());
  msg.push_back(static_cast<std::uint8_t>(pkt.ip.payload_length >> 8));
  msg.push_back(static_cast<std::uint8_t>(pkt.ip.payload_length));
  for (std::uint32_t v : {pkt.spi, pkt.seq})
    for (int shift = 24; shift >= 0; shift -= 8) msg.push_back(static_cast<std::uint8_t>(v >> shift));
  msg.insert(msg.end(), pkt.payload.begin(), pkt.payload.end());
  return crypto::hmac_sha256(key, msg);
}

}  // namespace

AhPacket ah_protect(const SaKey& key, std::uint32_t spi, std::uint32_t seq, ImmutableIpFields ip, Bytes payload,
                    const IkeConfig& cfg) {
  if (payload.size() > 0xffff) throw EncodingError("payload exceeds 65535 bytes");
  AhPacket pkt;
  pkt.ip = ip;
  pkt.ip.payload_length = static_cast<std::uint16_t>(payload.size());
  pkt.spi = spi;
  pkt.seq = seq;
  pkt.payload = std::move(payload);
  pkt.overhead_bytes = cfg.per_packet_overhead_bytes;
  pkt.icv = ah_icv(key, pkt);
  return pkt;
}

bool ah_verify(const SaKey& key, const AhPacket& pkt) noexcept {
  try {
    if (pkt.ip.payload_length != pkt.payload.size()) return false;
    return crypto::constant_time_equal(ah_icv(key, pkt), pkt.icv);
  } catch (...) {
    return false;
  }
}

}  // namespace nimsa::ike
