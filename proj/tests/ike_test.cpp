#include <functional>
#include <map>
#include <queue>
#include <random>

#include "doctest.h"
#include "nimsa/ike.hpp"

using namespace nimsa;
using namespace nimsa::ike;
using sim::from_ms;
using sim::Micros;

namespace {

const Ipv4 kIp{10, 0, 0, 2};

IkeConfig zero_cost() {
  IkeConfig cfg;
  cfg.processing_ms = 0;
  return cfg;
}

// Fixed one-way delay d, no processing. `drop` sees each transmission in send
// order (initiator and responder) and returns true to lose it.
struct Ladder {
  IkeSession session;
  IkeResponder responder;
  Micros d;
  std::function<bool(const IkeMessage&, int)> drop = [](const IkeMessage&, int) { return false; };
  int transmissions = 0;
  std::map<MsgType, int> sent_by_type;
  std::optional<Micros> established_at, handover_done_at;
  bool failed = false;

  struct Ev {
    Micros at;
    int seq;
    int kind;  // 0 to responder, 1 to initiator, 2 timer
    IkeMessage msg;
    std::uint64_t gen;
    bool operator>(const Ev& o) const { return at != o.at ? at > o.at : seq > o.seq; }
  };
  std::priority_queue<Ev, std::vector<Ev>, std::greater<>> q;
  int seq = 0;

  Ladder(IkeConfig cfg, double d_ms) : session(cfg, kIp), responder(cfg), d(from_ms(d_ms)) {}

  void transmit(const IkeMessage& m, Micros now, int kind) {
    int n = transmissions++;
    ++sent_by_type[m.type];
    if (!drop(m, n)) q.push({now + d, seq++, kind, m, 0});
  }

  void apply(const IkeAction& a, Micros now) {
    if (a.send) transmit(*a.send, now, 0);
    if (a.timer_at) q.push({*a.timer_at, seq++, 2, {}, a.timer_generation});
    if (a.established) established_at = now;
    if (a.handover_complete) handover_done_at = now;
    failed = failed || a.failed;
  }

  void run() {
    while (!q.empty()) {
      Ev e = q.top();
      q.pop();
      if (e.kind == 0) {
        if (auto r = responder.on_message(e.msg)) transmit(*r, e.at, 1);
      } else if (e.kind == 1) {
        apply(session.on_message(e.msg, e.at), e.at);
      } else {
        apply(session.on_timeout(e.at, e.gen), e.at);
      }
    }
  }
};

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(IkeConfig{}.validate());
  IkeConfig bad;
  bad.max_retries = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = {};
  bad.auth_req_bytes = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = {};
  bad.rto_initial_ms = 0;
  CHECK_THROWS_AS(IkeSession(bad, kIp), ConfigError);
}

TEST_CASE("message helpers") {
  IkeConfig cfg;
  CHECK(is_request(MsgType::InitReq));
  CHECK_FALSE(is_request(MsgType::RekeyResp));
  CHECK(response_to(MsgType::UpdateReq) == MsgType::UpdateResp);
  CHECK(message_bytes(cfg, MsgType::AuthResp) == 1100);
  CHECK(message_bytes(cfg, MsgType::InitReq) == 500);
  CHECK(message_bytes(cfg, MsgType::UpdateReq) == 200);
  CHECK(message_bytes(cfg, MsgType::RekeyResp) == 600);
  CHECK(to_string(MsgType::UpdateReq) == "mobike_update_req");
}

TEST_CASE("initial exchanges take two round trips") {
  for (double d : {10.0, 50.0, 100.0}) {
    Ladder l(zero_cost(), d);
    l.apply(l.session.initiate(0), 0);
    CHECK(l.session.state() == IkeState::InitSent);
    CHECK_THROWS_AS(l.session.initiate(0), ContractError);
    l.run();
    REQUIRE(l.established_at.has_value());
    CHECK(*l.established_at == from_ms(4 * d));
    CHECK(l.session.established_at() == l.established_at);
    CHECK(l.session.state() == IkeState::Established);
    CHECK(l.session.data_allowed());
    CHECK(l.transmissions == 4);
    CHECK(l.responder.sa_installed());
    CHECK(l.responder.accepts_spi(l.session.spi()));
  }
}

TEST_CASE("lost first INIT costs one timeout") {
  Ladder l(zero_cost(), 50);
  l.drop = [](const IkeMessage&, int n) { return n == 0; };
  l.apply(l.session.initiate(0), 0);
  l.run();
  REQUIRE(l.established_at.has_value());
  CHECK(*l.established_at == from_ms(500 + 4 * 50));
  CHECK(l.session.retry_count() == 0);
  CHECK(l.session.current_rto_ms() == 500);
}

TEST_CASE("backoff schedule and failure") {
  Ladder l(zero_cost(), 50);
  l.drop = [](const IkeMessage&, int) { return true; };
  l.apply(l.session.initiate(0), 0);
  // Drive timers by hand to read the send times.
  std::vector<Micros> timer_times;
  while (!l.q.empty()) {
    auto e = l.q.top();
    l.q.pop();
    timer_times.push_back(e.at);
    l.apply(l.session.on_timeout(e.at, e.gen), e.at);
  }
  // Sends at 0, 500, 1500, 3500, 7500, 15500; failure at 31500.
  REQUIRE(timer_times.size() == 6);
  CHECK(timer_times[0] == from_ms(500));
  CHECK(timer_times[1] == from_ms(1500));
  CHECK(timer_times[4] == from_ms(15500));
  CHECK(timer_times[5] == from_ms(31500));
  CHECK(l.sent_by_type[MsgType::InitReq] == 6);
  CHECK(l.failed);
  CHECK(l.session.state() == IkeState::Idle);
  CHECK_NOTHROW(l.session.initiate(from_ms(40000)));
}

TEST_CASE("retry count resets on success") {
  Ladder l(zero_cost(), 20);
  l.drop = [](const IkeMessage&, int n) { return n < 2; };
  l.apply(l.session.initiate(0), 0);
  l.run();
  REQUIRE(l.established_at.has_value());
  CHECK(*l.established_at == from_ms(1500 + 80));
  CHECK(l.session.retry_count() == 0);
}

TEST_CASE("duplicates and stray messages are ignored") {
  IkeSession s(zero_cost(), kIp);
  IkeResponder r(zero_cost());
  auto a = s.initiate(0);
  auto init_resp = r.on_message(*a.send);
  REQUIRE(init_resp.has_value());
  auto b = s.on_message(*init_resp, 10);
  REQUIRE(b.send.has_value());
  CHECK(b.send->type == MsgType::AuthReq);
  CHECK(s.state() == IkeState::AuthSent);
  auto dup = s.on_message(*init_resp, 20);
  CHECK_FALSE(dup.send.has_value());
  CHECK(s.state() == IkeState::AuthSent);
  // A retransmitted request gets the cached answer.
  CHECK(r.on_message(*a.send)->message_id == init_resp->message_id);
  CHECK_FALSE(s.on_message(IkeMessage{MsgType::UpdateResp, 1, 200, 0}, 30).send.has_value());
  // The old timer generation no longer fires.
  CHECK_FALSE(s.on_timeout(500, a.timer_generation).send.has_value());
  auto auth_resp = r.on_message(*b.send);
  auto c = s.on_message(*auth_resp, 40);
  CHECK(c.established);
  CHECK(*s.established_at() == 40);
}

TEST_CASE("MOBIKE handover takes two exchanges") {
  for (double d : {10.0, 50.0}) {
    Ladder l(zero_cost(), d);
    l.session.force_established(0);
    l.responder.force_established(l.session.spi());
    auto old_spi = l.session.spi();
    Micros t0 = from_ms(1000);
    Ipv4 next{10, 0, 1, 2};
    l.apply(l.session.mobike_handover(next, t0), t0);
    CHECK(l.session.state() == IkeState::UpdateSent);
    CHECK_FALSE(l.session.data_allowed());
    CHECK(l.session.current_ip() == next);
    l.run();
    REQUIRE(l.handover_done_at.has_value());
    CHECK(*l.handover_done_at - t0 == from_ms(4 * d));
    CHECK(l.transmissions == 4);
    CHECK(l.sent_by_type[MsgType::UpdateReq] == 1);
    CHECK(l.sent_by_type[MsgType::RekeyResp] == 1);
    CHECK(l.session.data_allowed());
    CHECK(l.session.spi() != old_spi);
    CHECK(l.responder.accepts_spi(l.session.spi()));
    CHECK(l.responder.accepts_spi(old_spi));
  }
}

TEST_CASE("lost UPDATE costs one timeout") {
  Ladder l(zero_cost(), 30);
  l.session.force_established(0);
  l.responder.force_established(l.session.spi());
  l.drop = [](const IkeMessage&, int n) { return n == 0; };
  l.apply(l.session.mobike_handover({10, 0, 1, 2}, 0), 0);
  l.run();
  REQUIRE(l.handover_done_at.has_value());
  CHECK(*l.handover_done_at == from_ms(500 + 120));
}

TEST_CASE("handover before establishment is queued") {
  Ladder l(zero_cost(), 10);
  l.apply(l.session.initiate(0), 0);
  l.apply(l.session.mobike_handover({10, 0, 1, 2}, 5), 5);
  CHECK(l.session.handover_pending());
  l.run();
  CHECK(*l.established_at == from_ms(40));
  REQUIRE(l.handover_done_at.has_value());
  CHECK(*l.handover_done_at == from_ms(80));
  CHECK_FALSE(l.session.handover_pending());
}

TEST_CASE("establishment latency does not improve with loss") {
  std::mt19937_64 rng(42);
  double prev = 0;
  for (double p : {0.0, 0.05, 0.10, 0.15}) {
    double total = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
      Ladder l(zero_cost(), 50);
      l.drop = [&](const IkeMessage&, int) { return std::uniform_real_distribution<>(0, 1)(rng) < p; };
      l.apply(l.session.initiate(0), 0);
      l.run();
      total += l.established_at ? sim::to_ms(*l.established_at) : 31500;
    }
    double mean = total / trials;
    CHECK(mean >= prev);
    prev = mean;
  }
}

TEST_CASE("AH protect and verify") {
  IkeConfig cfg;
  auto key = sa_key(7);
  CHECK(key != sa_key(8));
  ImmutableIpFields ip{{10, 0, 0, 2}, {192, 0, 2, 1}, 0};
  auto pkt = ah_protect(key, 7, 1, ip, Bytes(100, 0x5a), cfg);
  CHECK(pkt.ip.payload_length == 100);
  CHECK(ah_verify(key, pkt));
  CHECK(pkt.wire_size() == 20 + 40 + 100);
  CHECK_FALSE(ah_verify(sa_key(8), pkt));
  auto bad = pkt;
  bad.icv[3] ^= 1;
  CHECK_FALSE(ah_verify(key, bad));
  bad = pkt;
  bad.payload[0] ^= 1;
  CHECK_FALSE(ah_verify(key, bad));
  bad = pkt;
  bad.seq = 2;
  CHECK_FALSE(ah_verify(key, bad));
  bad = pkt;
  bad.ttl = 3;
  CHECK(ah_verify(key, bad));
}
