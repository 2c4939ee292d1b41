// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "nimsa/bench.hpp"
#include "nimsa/endpoints.hpp"

using namespace nimsa;
using namespace nimsa::bench;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances.
constexpr double kCryptoBudgetS = 30;
constexpr double kAuthBudgetS = 120;
constexpr double kNimsaSlackMs = 10;     // latency <= d + slack
constexpr double kQueueNoiseMs = 1;      // data-path excess allowance
constexpr double kGoodputFloorMbps = 9.0;
constexpr double kGoodputCeilMbps = 12.0;
constexpr int kTuples = 100;
constexpr int kAdversarialTrials = 1000;
constexpr std::uint64_t kSeed = 1;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string f(double v, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d %s: %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Cached so criterion 8 can compare against a second run.
std::string auth_csv_first, handover_csv_first, latency_csv_first, throughput_csv_first;

void crypto_correctness() {
  auto t0 = Clock::now();
  PairingSuite suite = setup(SecurityLevel::standard);
  std::mt19937_64 rng(kSeed);
  int agree = 0;
  for (int i = 0; i < kTuples; ++i) {
    MasterSecret s = gen_master(suite, rng);
    std::string id = "mr-" + std::to_string(rng());
    IdentityLabel mr{Bytes(id.begin(), id.end()),
                     {10, static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())},
                     static_cast<unsigned>(rng() % 256)};
    IdentityLabel ha{Bytes{'H', 'A'}, {192, 0, 2, 1}, std::nullopt};
    auto k_mr = shared_from_private(suite, derive_private_point(suite, s, mr), ha);
    auto k_ha = shared_from_private(suite, derive_private_point(suite, s, ha), mr);
    agree += k_mr.bytes() == k_ha.bytes();
  }
  const auto p = crypto::g1_generator();
  const auto q = crypto::g2_generator();
  const auto base = crypto::pairing(p, q);
  int bilinear = 0;
  for (int i = 0; i < kTuples; ++i) {
    crypto::Fr a = gen_master(suite, rng).s;
    crypto::Fr b = gen_master(suite, rng).s;
    bilinear += crypto::pairing(p.mul(a), q.mul(b)) == base.pow((a * b).to_canonical());
  }
  double secs = seconds_since(t0);
  report(1, agree == kTuples && bilinear == kTuples && !base.is_one() && secs < kCryptoBudgetS,
         "key agreement " + std::to_string(agree) + "/" + std::to_string(kTuples) + ", bilinearity " +
             std::to_string(bilinear) + "/" + std::to_string(kTuples) + ", " + f(secs, 1) + " s (limit " +
             f(kCryptoBudgetS, 0) + " s)");
}

void control_messages() {
  AuthBenchConfig a;
  HandoverBenchConfig h;
  auto count = [](const sim::Scenario& sc) { return sim::run_scenario(sc, kSeed).control_msg_total(); };
  auto nimsa_auth = count(auth_scenario(a, Scheme::nimsa, 0, 50));
  auto ike_auth = count(auth_scenario(a, Scheme::ikev2, 0, 50));
  auto tx = count(handover_scenario(h, HandoverKind::transmission, 0));
  auto note = count(handover_scenario(h, HandoverKind::notification, 0));
  auto mobike = count(handover_scenario(h, HandoverKind::mobike, 0));
  report(2, nimsa_auth == 0 && ike_auth == 4 && tx == 0 && note == 1 && mobike == 4,
         "auth nimsa " + std::to_string(nimsa_auth) + " ikev2 " + std::to_string(ike_auth) + "; handover transmission " +
             std::to_string(tx) + " notification " + std::to_string(note) + " mobike " + std::to_string(mobike));
}

void auth_latency() {
  auto t0 = Clock::now();
  AuthBenchConfig cfg;
  cfg.seed = kSeed;
  auto rows = run_auth_bench(cfg);
  double secs = seconds_since(t0);
  auth_csv_first = auth_csv(rows);

  std::map<std::tuple<double, double, Scheme>, std::vector<double>> cell;
  bool bounds = true;
  for (const auto& r : rows) {
    cell[{r.loss_pct, r.delay_ms, r.scheme}].push_back(r.latency_ms);
    if (r.loss_pct == 0) {
      if (r.scheme == Scheme::nimsa) bounds &= r.latency_ms >= r.delay_ms && r.latency_ms <= r.delay_ms + kNimsaSlackMs;
      else bounds &= r.latency_ms >= 4 * r.delay_ms;
    }
  }
  int points = 0, ordered = 0;
  double worst_ratio = 0;
  for (double loss : cfg.loss_pct)
    for (double d : cfg.delays.values()) {
      double n = mean(cell[{loss, d, Scheme::nimsa}]);
      double k = mean(cell[{loss, d, Scheme::ikev2}]);
      ++points;
      ordered += n < k;
      worst_ratio = std::max(worst_ratio, n / k);
    }
  report(3, ordered == points && bounds && secs < kAuthBudgetS,
         "nimsa < ikev2 at " + std::to_string(ordered) + "/" + std::to_string(points) +
             " grid points (max mean ratio " + f(worst_ratio) + "), zero-loss bounds " + (bounds ? "hold" : "violated") +
             ", " + f(secs, 1) + " s (limit " + f(kAuthBudgetS, 0) + " s)");
}

void handover_latency() {
  HandoverBenchConfig cfg;
  cfg.seed = kSeed;
  auto rows = run_handover_bench(cfg);
  handover_csv_first = handover_csv(rows);
  std::map<std::pair<double, HandoverKind>, std::vector<double>> cell;
  for (const auto& r : rows) cell[{r.loss_pct, r.kind}].push_back(r.latency_ms);

  bool ok = true;
  std::string detail;
  for (double loss : cfg.loss_pct) {
    double t = mean(cell[{loss, HandoverKind::transmission}]);
    double n = mean(cell[{loss, HandoverKind::notification}]);
    double m = mean(cell[{loss, HandoverKind::mobike}]);
    bool here = t <= n && n < m;
    ok &= here;
    detail += "loss " + f(loss, 0) + "%: " + f(t) + " / " + f(n) + " / " + f(m) + (here ? "" : " [order broken]") + "; ";
  }
  const double d = cfg.delay_ms;
  bool bounds = true;
  for (const auto& r : rows) {
    if (r.loss_pct != 0) continue;
    if (r.kind == HandoverKind::mobike) bounds &= r.latency_ms >= 4 * d;
    else bounds &= r.latency_ms <= d + kNimsaSlackMs;
  }
  ok &= bounds;
  report(4, ok,
         "means transmission / notification / mobike (ms) " + detail + "zero-loss bounds " + (bounds ? "hold" : "violated"));
}

void data_latency() {
  LatencyBenchConfig cfg;
  cfg.seed = kSeed;
  auto rows = run_latency_bench(cfg);
  latency_csv_first = latency_csv(rows);
  std::map<Scheme, std::vector<double>> by;
  for (const auto& r : rows) by[r.scheme].push_back(r.owd_ms);
  double none = mean(by[Scheme::none]), nimsa = mean(by[Scheme::nimsa]), ah = mean(by[Scheme::ikev2]);
  sim::Scenario base;
  double nimsa_allow = base.crypto_costs.hmac_ms + kQueueNoiseMs;
  double ah_allow = base.ike.ah_ms + kQueueNoiseMs;
  bool order = nimsa <= ah;
  bool excess = nimsa - none <= nimsa_allow && ah - none <= ah_allow;
  report(5, order && excess,
         "mean OWD none " + f(none, 4) + " nimsa " + f(nimsa, 4) + " ah " + f(ah, 4) + " ms; nimsa <= ah " +
             (order ? "holds" : "violated") + " (diff " + f(nimsa - ah, 4) + " ms); excess nimsa " + f(nimsa - none, 4) +
             " / ah " + f(ah - none, 4) + " ms within " + f(nimsa_allow, 2) + " ms " + (excess ? "holds" : "violated"));
}

void throughput() {
  ThroughputBenchConfig cfg;
  cfg.seed = kSeed;
  auto rows = run_throughput_bench(cfg);
  throughput_csv_first = throughput_csv(rows);
  std::map<Scheme, std::vector<double>> by;
  double peak = 0;
  for (const auto& r : rows) {
    by[r.scheme].push_back(r.goodput_mbps);
    peak = std::max(peak, r.goodput_mbps);
  }
  double nimsa = mean(by[Scheme::nimsa]), ah = mean(by[Scheme::ikev2]);
  report(6, nimsa >= kGoodputFloorMbps && nimsa >= ah && peak <= kGoodputCeilMbps,
         "mean goodput nimsa " + f(nimsa, 4) + " ah " + f(ah, 4) + " Mbps (floor " + f(kGoodputFloorMbps, 1) +
             "), peak bin " + f(peak, 3) + " Mbps (ceiling " + f(kGoodputCeilMbps, 0) + ")");
}

struct HaState {
  std::map<std::uint64_t, std::tuple<bool, std::map<unsigned, std::tuple<Ipv4, std::uint32_t, SessionKey>>>> recs;
  friend bool operator==(const HaState&, const HaState&) = default;
};

HaState snapshot(const HaEndpoint& ha) {
  HaState s;
  for (const auto& [id, rec] : ha.registry()) {
    std::map<unsigned, std::tuple<Ipv4, std::uint32_t, SessionKey>> ifs;
    for (const auto& [n, ir] : rec.per_interface) ifs[n] = {ir.known_ip, ir.seed, ir.session_key};
    s.recs[id] = {rec.revoked, ifs};
  }
  return s;
}

void security() {
  PairingSuite suite = setup(SecurityLevel::test);
  std::mt19937_64 rng(kSeed);
  const Ipv4 ha_ip{192, 0, 2, 1};
  HaEndpoint ha(suite, "HA", ha_ip);
  MrEndpoint mr(suite, "MR-good", gen_master(suite, rng), "HA", ha_ip);
  MrEndpoint revoked(suite, "MR-revoked", gen_master(suite, rng), "HA", ha_ip);
  ha.register_mr(mr.device_id(), mr.registration_voucher());
  ha.register_mr(revoked.device_id(), revoked.registration_voucher());
  mr.on_adapter_up(0, {10, 0, 0, 2});
  mr.on_adapter_up(1, {10, 1, 0, 2});
  revoked.on_adapter_up(0, {10, 9, 0, 2});
  std::vector<NimsaPacket> stale;
  for (int i = 0; i < 8; ++i) stale.push_back(mr.send(Bytes(16, static_cast<std::uint8_t>(i)), 0));
  bool setup_ok = accepted(ha.on_packet(stale[0])) && accepted(ha.on_packet(mr.send({1}, 1))) &&
                  accepted(ha.on_packet(revoked.send({1}, 0)));
  mr.pending_data().push_back({2});
  mr.on_adapter_change(0, {10, 0, 1, 2});
  setup_ok &= accepted(ha.on_packet(mr.send(mr.pending_data().front(), 0)));
  mr.pending_data().clear();
  ha.revoke_mr(revoked.mr_id());
  std::vector<MrEndpoint> strangers;
  for (int i = 0; i < 4; ++i) {
    strangers.emplace_back(suite, "stranger-" + std::to_string(i), gen_master(suite, rng), "HA", ha_ip);
    strangers.back().on_adapter_up(0, {10, 7, 0, static_cast<std::uint8_t>(i)});
  }

  std::array<int, 4> correct{}, total{};
  int mutated = 0;
  for (int t = 0; t < kAdversarialTrials; ++t) {
    int kind = t % 4;
    NimsaPacket pkt;
    VerdictReason want{};
    if (kind == 0) {
      Bytes payload(1 + rng() % 64);
      for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
      pkt = mr.send(payload, static_cast<unsigned>(rng() % 2));
      switch (rng() % 6) {
        case 0: pkt.header.auth_tag[rng() % 32] ^= static_cast<std::uint8_t>(1 + rng() % 255); break;
        case 1: pkt.payload[rng() % pkt.payload.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255); break;
        case 2: pkt.ip.src_ip[rng() % 4] ^= static_cast<std::uint8_t>(1 + rng() % 255); break;
        case 3: pkt.ip.dst_ip[rng() % 4] ^= static_cast<std::uint8_t>(1 + rng() % 255); break;
        case 4: pkt.header.seed += 1 + static_cast<std::uint32_t>(rng() % 5); break;
        case 5: pkt.header.if_num = static_cast<std::uint8_t>(2 + rng() % 200); break;
      }
      want = VerdictReason::DropAuthFail;
    } else if (kind == 1) {
      pkt = strangers[rng() % strangers.size()].send(Bytes(1 + rng() % 32, 7), 0);
      want = VerdictReason::DropUnknownDevice;
    } else if (kind == 2) {
      pkt = revoked.send(Bytes(1 + rng() % 32, 3), 0);
      want = VerdictReason::DropRevoked;
    } else {
      pkt = stale[rng() % stale.size()];
      want = VerdictReason::DropSeedRollback;
    }
    auto before = snapshot(ha);
    VerdictReason got = ha.on_packet(pkt);
    ++total[kind];
    correct[kind] += got == want;
    mutated += !(snapshot(ha) == before);
  }
  int ok = correct[0] + correct[1] + correct[2] + correct[3];
  report(7, setup_ok && ok == kAdversarialTrials && mutated == 0,
         "correct verdicts " + std::to_string(ok) + "/" + std::to_string(kAdversarialTrials) + " (tampered " +
             std::to_string(correct[0]) + "/" + std::to_string(total[0]) + ", unregistered " +
             std::to_string(correct[1]) + "/" + std::to_string(total[1]) + ", revoked " + std::to_string(correct[2]) +
             "/" + std::to_string(total[2]) + ", rollback " + std::to_string(correct[3]) + "/" +
             std::to_string(total[3]) + "), state mutations " + std::to_string(mutated));
}

void determinism() {
  AuthBenchConfig a;
  a.seed = kSeed;
  HandoverBenchConfig h;
  h.seed = kSeed;
  LatencyBenchConfig l;
  l.seed = kSeed;
  ThroughputBenchConfig t;
  t.seed = kSeed;
  bool same_auth = auth_csv(run_auth_bench(a)) == auth_csv_first;
  bool same_ho = handover_csv(run_handover_bench(h)) == handover_csv_first;
  bool same_lat = latency_csv(run_latency_bench(l)) == latency_csv_first;
  bool same_tp = throughput_csv(run_throughput_bench(t)) == throughput_csv_first;
  auto yn = [](bool b) { return b ? "identical" : "DIFFERENT"; };
  report(8, same_auth && same_ho && same_lat && same_tp,
         std::string("auth ") + yn(same_auth) + ", handover " + yn(same_ho) + ", latency " + yn(same_lat) +
             ", throughput " + yn(same_tp));
}

}  // namespace

int main() {
  crypto_correctness();
  control_messages();
  auth_latency();
  handover_latency();
  data_latency();
  throughput();
  security();
  determinism();
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
