#include "nimsa/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <variant>

#include "json.hpp"
#include "nimsa/errors.hpp"
#include "nimsa/sim/events.hpp"
#include "nimsa/sim/reorder.hpp"
#include "nimsa/sim/traffic.hpp"

namespace nimsa::sim {

std::uint64_t MetricsReport::control_msg_total() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : control_msg_counts) n += v;
  return n;
}

bool MetricsReport::conserves() const {
  return sent == delivered + lost + dropped + in_flight && generated == sent + blocked + unsent;
}

std::string MetricsReport::to_json() const {
  nlohmann::json j;
  j["auth_latency_ms"] = auth_latency_ms;
  j["handover_latency_ms"] = handover_latency_ms;
  j["probe_seq"] = probe_seq;
  j["owd_ms"] = owd_ms;
  j["goodput_mbps"] = goodput_mbps;
  j["control_msg_counts"] = control_msg_counts;
  nlohmann::json verdicts = nlohmann::json::object();
  for (std::size_t i = 0; i < kVerdictCount; ++i)
    verdicts[std::string(to_string(static_cast<VerdictReason>(i)))] = verdict_counts[i];
  j["verdict_counts"] = verdicts;
  j["packets"] = {{"generated", generated}, {"blocked", blocked}, {"unsent", unsent},   {"sent", sent},
                  {"delivered", delivered}, {"lost", lost},       {"dropped", dropped}, {"in_flight", in_flight}};
  return j.dump();
}

Ipv4 mr_address(unsigned if_num, unsigned moves) {
  return {10, static_cast<std::uint8_t>(if_num), static_cast<std::uint8_t>(moves), 2};
}

namespace {

constexpr std::uint64_t kTimerIke = 0;
constexpr std::uint64_t kTimerReorder = 1;
constexpr std::uint64_t kLinkDown = 0;
constexpr std::uint64_t kNewAddress = 1;
const char* const kDeviceId = "MR1";
const char* const kHaId = "HA";

Micros charge(Micros& cpu, Micros now, double ms) {
  cpu = std::max(now, cpu) + from_ms(ms);
  return cpu;
}

Bytes make_payload(std::size_t size, std::uint64_t tick) {
  Bytes p(size, 0);
  for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(tick >> (56 - 8 * i));
  return p;
}

std::uint64_t payload_tick(const Bytes& p) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < 8; ++i) t = t << 8 | p[i];
  return t;
}

struct RawPacket {
  Bytes payload;
  std::size_t wire_size() const { return kIpHeaderSize + payload.size(); }
};

struct Packet {
  bool uplink = true;
  std::size_t link = 0;
  bool data = false;
  std::uint64_t data_seq = 0;
  VerdictReason verdict = VerdictReason::Accepted;
  std::variant<std::monostate, RawPacket, NimsaPacket, ike::AhPacket, ike::IkeMessage> body;

  std::size_t wire_size() const {
    if (auto* r = std::get_if<RawPacket>(&body)) return r->wire_size();
    if (auto* n = std::get_if<NimsaPacket>(&body)) return n->wire_size();
    if (auto* a = std::get_if<ike::AhPacket>(&body)) return a->wire_size();
    if (auto* m = std::get_if<ike::IkeMessage>(&body)) return m->bytes;
    return 0;
  }
  const Bytes& payload() const {
    if (auto* n = std::get_if<NimsaPacket>(&body)) return n->payload;
    if (auto* a = std::get_if<ike::AhPacket>(&body)) return a->payload;
    return std::get<RawPacket>(body).payload;
  }
};

class Run {
 public:
  Run(const Scenario& sc, const std::vector<LinkProfile>& links, const std::optional<MrEndpoint>& mr,
      const std::optional<HaEndpoint>& ha, std::uint64_t seed)
      : sc_(sc), mr_(mr), ha_(ha), session_(sc.ike, mr_address(0, 0)), responder_(sc.ike),
        reorder_(from_ms(sc.reorder_window_ms)) {
    for (std::size_t i = 0; i < links.size(); ++i) {
      up_.push_back({links[i], 0});
      down_.push_back({links[i], 0});
      std::seed_seq su{seed, static_cast<std::uint64_t>(i), std::uint64_t{0}};
      std::seed_seq sd{seed, static_cast<std::uint64_t>(i), std::uint64_t{1}};
      rng_up_.emplace_back(su);
      rng_down_.emplace_back(sd);
    }
    std::seed_seq sc_seed{seed, std::uint64_t{0xffff}};
    rng_ctl_.seed(sc_seed);
    usable_.assign(links.size(), true);
    moves_.assign(links.size(), 0);
    ike_link_ = sc.handover ? sc.handover->interface : 0;
    const Traffic& t = sc.traffic;
    horizon_ = t.type == TrafficType::none ? from_ms(60000) : from_ms(t.duration_s * 1000);
    if (t.type == TrafficType::cbr) tick_count_ = cbr_count(t.rate_bps, t.packet_bytes, t.duration_s);
    if (t.type == TrafficType::probe)
      tick_count_ = static_cast<std::size_t>(std::ceil(t.duration_s * 1000 / t.probe_interval_ms - 1e-9));
    bins_.assign(static_cast<std::size_t>(std::ceil(t.duration_s - 1e-9)), 0.0);
  }

  MetricsReport go() {
    if (sc_.scheme == Scheme::nimsa && !sc_.preestablish)
      mr_cpu_ = from_ms(sc_.crypto_costs.pairing_ms * static_cast<double>(up_.size()));
    if (sc_.scheme == Scheme::ikev2 && sc_.preestablish) {
      session_.force_established(0);
      responder_.force_established(session_.spi());
    }
    if (tick_count_ > 0) q_.push(0, EventKind::TrafficTick, 0);
    if (sc_.handover) {
      const HandoverPlan& h = *sc_.handover;
      Micros at = from_ms(h.at_ms + h.jitter_ms * uniform01(rng_ctl_));
      double outage = h.effective_outage_ms(sc_.handover_mode);
      if (outage > 0) q_.push(at, EventKind::AdapterChange, 0, kLinkDown);
      else q_.push(at, EventKind::AdapterChange, 0, kNewAddress);
    }
    while (!q_.empty() && !stop_) {
      SimEvent e = q_.pop();
      switch (e.kind) {
        case EventKind::TrafficTick: on_tick(e.a, e.time); break;
        case EventKind::PacketArrival: on_arrival(e.a, e.time); break;
        case EventKind::Processed: on_processed(e.a, e.time); break;
        case EventKind::TimerFire: on_timer(e); break;
        case EventKind::AdapterChange: on_adapter_change(e.b, e.time); break;
      }
    }
    m_.in_flight = outstanding_;
    m_.unsent = pending().size();
    if (sc_.traffic.type == TrafficType::cbr && sc_.stop_after == StopAfter::none)
      for (double bits : bins_) m_.goodput_mbps.push_back(bits / 1e6);
    return std::move(m_);
  }

 private:
  std::deque<Bytes>& pending() { return sc_.scheme == Scheme::nimsa ? mr_->pending_data() : pending_; }

  bool any_usable() const { return std::find(usable_.begin(), usable_.end(), true) != usable_.end(); }

  Micros tick_time(std::uint64_t k) const {
    const Traffic& t = sc_.traffic;
    return t.type == TrafficType::cbr ? cbr_tick(t.rate_bps, t.packet_bytes, k) : probe_tick(t.probe_interval_ms, k);
  }

  std::size_t new_slot(Packet p) {
    slots_.push_back(std::move(p));
    return slots_.size() - 1;
  }

  void transmit(std::size_t slot, Micros now) {
    Packet& p = slots_[slot];
    if (!usable_[p.link]) {
      // Adapter without a link: the frame never leaves.
      if (p.data) ++m_.lost;
      p.body = std::monostate{};
      return;
    }
    LinkState& link = p.uplink ? up_[p.link] : down_[p.link];
    auto& rng = p.uplink ? rng_up_[p.link] : rng_down_[p.link];
    auto arrival = link_transmit(link, p.wire_size(), now, rng);
    if (!arrival) {
      if (p.data) ++m_.lost;
      p.body = std::monostate{};
      return;
    }
    if (p.data) ++outstanding_;
    q_.push(*arrival, EventKind::PacketArrival, slot);
  }

  void enqueue(Bytes payload) {
    if (pending().size() >= sc_.pending_limit) {
      ++m_.blocked;
      return;
    }
    pending().push_back(std::move(payload));
  }

  void send_data(Bytes payload, Micros now) {
    const std::size_t size = payload.size();
    Packet p;
    p.data = true;
    p.data_seq = next_data_seq_++;
    if (sc_.scheme == Scheme::none) {
      auto link = edpf_pick(up_, usable_, kIpHeaderSize + size, now);
      p.link = *link;
      p.body = RawPacket{std::move(payload)};
    } else if (sc_.scheme == Scheme::nimsa) {
      Micros ready = charge(mr_cpu_, now, sc_.crypto_costs.hmac_ms);
      auto link = edpf_pick(up_, usable_, kIpHeaderSize + kHeaderSize + size, ready);
      p.link = *link;
      p.body = mr_->send(std::move(payload), static_cast<unsigned>(p.link));
      now = ready;
    } else {
      Micros ready = charge(mr_cpu_, now, sc_.ike.ah_ms);
      auto link = edpf_pick(up_, usable_, kIpHeaderSize + sc_.ike.per_packet_overhead_bytes + size, ready);
      p.link = *link;
      std::uint32_t spi = session_.spi();
      ImmutableIpFields ip{mr_address(static_cast<unsigned>(p.link), moves_[p.link]), kHaAddress, 0};
      p.body = ike::ah_protect(ike::sa_key(spi), spi, ++ah_seq_, ip, std::move(payload), sc_.ike);
      now = ready;
    }
    ++m_.sent;
    transmit(new_slot(std::move(p)), now);
  }

  bool path_open() const {
    if (!any_usable()) return false;
    return sc_.scheme != Scheme::ikev2 || session_.data_allowed();
  }

  void flush(Micros now) {
    while (!pending().empty() && path_open()) {
      Bytes payload = std::move(pending().front());
      pending().pop_front();
      send_data(std::move(payload), now);
    }
  }

  void on_tick(std::uint64_t k, Micros now) {
    if (k + 1 < tick_count_) q_.push(tick_time(k + 1), EventKind::TrafficTick, k + 1);
    ++m_.generated;
    if (!sc_.preestablish && !auth_trigger_ && sc_.scheme != Scheme::none) {
      auth_trigger_ = now;
      if (sc_.scheme == Scheme::ikev2) apply(session_.initiate(now), now);
    }
    Bytes payload = make_payload(sc_.traffic.packet_bytes, k);
    if (path_open() && pending().empty()) send_data(std::move(payload), now);
    else enqueue(std::move(payload));
  }

  void send_ike(const ike::IkeMessage& msg, bool uplink, Micros now) {
    ++m_.control_msg_counts[std::string(ike::to_string(msg.type))];
    Packet p;
    p.uplink = uplink;
    p.link = ike_link_;
    p.body = msg;
    transmit(new_slot(std::move(p)), now);
  }

  void record_auth(Micros now) {
    if (!auth_trigger_ || auth_done_) return;
    auth_done_ = true;
    m_.auth_latency_ms.push_back(to_ms(now - *auth_trigger_));
    if (sc_.stop_after == StopAfter::auth) stop_ = true;
  }

  void record_handover(Micros now) {
    if (!handover_start_ || handover_done_) return;
    handover_done_ = true;
    m_.handover_latency_ms.push_back(to_ms(now - *handover_start_));
    if (sc_.stop_after == StopAfter::handover) stop_ = true;
  }

  void apply(const ike::IkeAction& a, Micros now) {
    if (a.send) send_ike(*a.send, true, now);
    if (a.timer_at) q_.push(*a.timer_at, EventKind::TimerFire, a.timer_generation, kTimerIke);
    if (a.failed && now < horizon_) {
      // Start over with a fresh IKE SA from the current address.
      apply(session_.initiate(now), now);
      return;
    }
    if (a.established) {
      record_auth(now);
      record_handover(now);
    }
    if (a.handover_complete) record_handover(now);
    flush(now);
  }

  void on_timer(const SimEvent& e) {
    if (e.b == kTimerIke) {
      apply(session_.on_timeout(e.time, e.a), e.time);
    } else {
      count_release(reorder_.expire(e.a), e.time);
    }
  }

  void on_arrival(std::size_t slot, Micros now) {
    Packet& p = slots_[slot];
    Micros done = now;
    if (std::holds_alternative<ike::IkeMessage>(p.body)) {
      done = charge(p.uplink ? ha_cpu_ : mr_cpu_, now, sc_.ike.processing_ms);
    } else if (auto* n = std::get_if<NimsaPacket>(&p.body)) {
      std::uint64_t before = ha_->pairing_count();
      p.verdict = ha_->on_packet(*n);
      double cost = sc_.crypto_costs.hmac_ms +
                    sc_.crypto_costs.pairing_ms * static_cast<double>(ha_->pairing_count() - before);
      done = charge(ha_cpu_, now, cost);
    } else if (auto* a = std::get_if<ike::AhPacket>(&p.body)) {
      bool ok = responder_.accepts_spi(a->spi) && ike::ah_verify(ike::sa_key(a->spi), *a);
      p.verdict = ok ? VerdictReason::Accepted : VerdictReason::DropAuthFail;
      done = charge(ha_cpu_, now, sc_.ike.ah_ms);
    }
    q_.push(done, EventKind::Processed, slot);
  }

  void count_release(const std::vector<ReorderItem>& items, Micros now) {
    auto bin = static_cast<std::size_t>(now / 1'000'000);
    for (const auto& it : items)
      if (bin < bins_.size()) bins_[bin] += static_cast<double>(it.bytes) * 8.0;
  }

  void on_processed(std::size_t slot, Micros now) {
    Packet& p = slots_[slot];
    if (auto* msg = std::get_if<ike::IkeMessage>(&p.body)) {
      ike::IkeMessage m = *msg;
      p.body = std::monostate{};
      if (p.uplink) {
        if (auto resp = responder_.on_message(m)) send_ike(*resp, false, now);
      } else {
        apply(session_.on_message(m, now), now);
      }
      return;
    }
    ++m_.verdict_counts[static_cast<std::size_t>(p.verdict)];
    if (p.data) --outstanding_;
    if (!accepted(p.verdict)) {
      if (p.data) ++m_.dropped;
      p.body = std::monostate{};
      return;
    }
    if (auto* n = std::get_if<NimsaPacket>(&p.body)) {
      record_auth(now);
      if (handover_start_ && n->header.if_num == sc_.handover->interface && n->header.seed >= handover_seed_)
        record_handover(now);
    }
    if (p.data) {
      ++m_.delivered;
      const Bytes& payload = p.payload();
      std::uint64_t tick = payload_tick(payload);
      if (sc_.traffic.type == TrafficType::probe) {
        m_.probe_seq.push_back(tick);
        m_.owd_ms.push_back(to_ms(now - tick_time(tick)));
      }
      auto res = reorder_.release({p.data_seq, payload.size(), tick}, now);
      count_release(res.released, now);
      if (res.hold_until) q_.push(*res.hold_until, EventKind::TimerFire, p.data_seq, kTimerReorder);
    }
    p.body = std::monostate{};
  }

  void on_adapter_change(std::uint64_t phase, Micros now) {
    const HandoverPlan& h = *sc_.handover;
    const unsigned i = h.interface;
    if (phase == kLinkDown) {
      usable_[i] = false;
      q_.push(now + from_ms(h.effective_outage_ms(sc_.handover_mode)), EventKind::AdapterChange, 0, kNewAddress);
      return;
    }
    usable_[i] = true;
    ++moves_[i];
    Ipv4 ip = mr_address(i, moves_[i]);
    handover_start_ = now;
    if (sc_.scheme == Scheme::nimsa) {
      std::uint64_t before = mr_->pairing_count();
      auto note = mr_->on_adapter_change(i, ip);
      Micros ready = charge(mr_cpu_, now,
                            sc_.crypto_costs.pairing_ms * static_cast<double>(mr_->pairing_count() - before));
      handover_seed_ = mr_->interface(i).seed;
      if (note) {
        ready = charge(mr_cpu_, ready, sc_.crypto_costs.hmac_ms);
        ++m_.control_msg_counts["nimsa_notification"];
        Packet p;
        p.link = i;
        p.body = std::move(*note);
        transmit(new_slot(std::move(p)), ready);
      } else {
        flush(ready);
      }
    } else if (sc_.scheme == Scheme::ikev2) {
      apply(session_.mobike_handover(ip, now), now);
    } else {
      record_handover(now);
      flush(now);
    }
  }

  const Scenario& sc_;
  std::optional<MrEndpoint> mr_;
  std::optional<HaEndpoint> ha_;
  ike::IkeSession session_;
  ike::IkeResponder responder_;
  ReorderBuffer reorder_;
  std::vector<LinkState> up_, down_;
  std::vector<std::mt19937_64> rng_up_, rng_down_;
  std::mt19937_64 rng_ctl_;
  std::vector<bool> usable_;
  std::vector<unsigned> moves_;
  std::size_t ike_link_ = 0;
  Micros horizon_ = 0;
  std::size_t tick_count_ = 0;
  std::vector<double> bins_;

  EventQueue q_;
  std::deque<Packet> slots_;
  std::deque<Bytes> pending_;
  Micros mr_cpu_ = 0, ha_cpu_ = 0;
  std::uint64_t next_data_seq_ = 0;
  std::uint32_t ah_seq_ = 0;
  std::uint64_t outstanding_ = 0;
  std::optional<Micros> auth_trigger_;
  bool auth_done_ = false;
  std::optional<Micros> handover_start_;
  std::uint32_t handover_seed_ = 0;
  bool handover_done_ = false;
  bool stop_ = false;
  MetricsReport m_;
};

}  // namespace

Simulator::Simulator(Scenario sc) : sc_(std::move(sc)) {
  sc_.validate();
  links_ = sc_.effective_links();
  if (sc_.scheme != Scheme::nimsa) return;
  PairingSuite suite = setup(sc_.security);
  std::mt19937_64 rng(sc_.seed);
  mr_.emplace(suite, kDeviceId, gen_master(suite, rng), kHaId, kHaAddress);
  ha_.emplace(suite, kHaId, kHaAddress);
  ha_->register_mr(mr_->device_id(), mr_->registration_voucher());
  for (unsigned i = 0; i < links_.size(); ++i) {
    mr_->on_adapter_up(i, mr_address(i, 0));
    if (sc_.preestablish && !accepted(ha_->on_packet(mr_->send(Bytes(8, 0), i))))
      throw ContractError("simulator: preestablished interface rejected");
  }
}

MetricsReport Simulator::run(std::uint64_t seed) const { return Run(sc_, links_, mr_, ha_, seed).go(); }

MetricsReport run_scenario(const Scenario& scenario, std::uint64_t seed) { return Simulator(scenario).run(seed); }

}  // namespace nimsa::sim
