#include "nimsa/bench.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "nimsa/endpoints.hpp"
#include "nimsa/errors.hpp"

namespace nimsa::bench {

using sim::LinkProfile;
using sim::TrafficType;

double mean(const std::vector<double>& v) {
  return v.empty() ? std::nan("") : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

namespace {

double parse_number(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw ConfigError("not a number: " + std::string(s));
  return v;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%g", v); }

LinkProfile single_link(const Scenario& base) { return {0, 0, base.links.front().bandwidth_bps, 0, 0}; }

}  // namespace

std::vector<double> DelaySweep::values() const {
  std::vector<double> out;
  for (int k = 0;; ++k) {
    double d = from_ms + step_ms * k;
    if (d > to_ms + 1e-9) break;
    out.push_back(d);
  }
  return out;
}

DelaySweep parse_delay_sweep(std::string_view text) {
  auto a = text.find(':');
  auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos) throw ConfigError("delay sweep must be a:b:step");
  DelaySweep s{parse_number(text.substr(0, a)), parse_number(text.substr(a + 1, b - a - 1)),
               parse_number(text.substr(b + 1))};
  if (!(s.step_ms > 0) || !(s.from_ms >= 0) || s.to_ms < s.from_ms) throw ConfigError("delay sweep is empty");
  return s;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    auto c = text.find(',');
    out.push_back(parse_number(text.substr(0, c)));
    if (c == std::string_view::npos) break;
    text.remove_prefix(c + 1);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

// --- authentication ---------------------------------------------------------

Scenario auth_scenario(const AuthBenchConfig& cfg, Scheme scheme, double loss_pct, double delay_ms) {
  Scenario sc = cfg.base;
  sc.links = {single_link(cfg.base)};
  sc.scheme = scheme;
  sc.loss_override_pct = loss_pct;
  sc.delay_override_ms = delay_ms;
  sc.traffic = {TrafficType::cbr, 1e6, 1250, 60, 1000};
  sc.handover.reset();
  sc.preestablish = false;
  sc.stop_after = sim::StopAfter::auth;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  return sc;
}

std::vector<AuthRow> run_auth_bench(const AuthBenchConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  std::vector<AuthRow> rows;
  for (Scheme scheme : cfg.schemes)
    for (double loss : cfg.loss_pct)
      for (double d : cfg.delays.values()) {
        sim::Simulator s(auth_scenario(cfg, scheme, loss, d));
        for (int t = 0; t < cfg.trials; ++t) {
          auto r = s.run(cfg.seed + static_cast<std::uint64_t>(t));
          if (r.auth_latency_ms.empty()) throw ContractError("auth bench: trial never authenticated");
          rows.push_back({scheme, loss, d, t, r.auth_latency_ms.front()});
        }
      }
  return rows;
}

std::string auth_csv(const std::vector<AuthRow>& rows) {
  std::string out = "scheme,loss_pct,one_way_delay_ms,trial,auth_latency_ms\n";
  for (const auto& r : rows)
    out += std::string(sim::to_string(r.scheme)) + "," + num(r.loss_pct) + "," + num(r.delay_ms) + "," +
           std::to_string(r.trial) + "," + fmt("%.3f", r.latency_ms) + "\n";
  return out;
}

// --- handover ---------------------------------------------------------------

std::string_view to_string(HandoverKind k) {
  switch (k) {
    case HandoverKind::transmission: return "transmission";
    case HandoverKind::notification: return "notification";
    case HandoverKind::mobike: return "mobike";
  }
  return "?";
}

HandoverKind parse_handover_kind(std::string_view s) {
  if (s == "transmission") return HandoverKind::transmission;
  if (s == "notification") return HandoverKind::notification;
  if (s == "mobike") return HandoverKind::mobike;
  throw ConfigError("unknown handover mode: " + std::string(s));
}

Scenario handover_scenario(const HandoverBenchConfig& cfg, HandoverKind kind, double loss_pct) {
  Scenario sc = cfg.base;
  sc.links = {single_link(cfg.base)};
  sc.scheme = kind == HandoverKind::mobike ? Scheme::ikev2 : Scheme::nimsa;
  sc.handover_mode = kind == HandoverKind::notification ? HandoverMode::notification : HandoverMode::transmission;
  sc.loss_override_pct = loss_pct;
  sc.delay_override_ms = cfg.delay_ms;
  if (kind == HandoverKind::notification) sc.traffic = {TrafficType::probe, 1e6, 1250, 60, 1000};
  else sc.traffic = {TrafficType::cbr, 1e6, 1250, 60, 1000};
  sc.handover = sim::HandoverPlan{1000, 1000, kind == HandoverKind::notification ? 0.0 : 50.0, 0};
  sc.preestablish = true;
  sc.stop_after = sim::StopAfter::handover;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  return sc;
}

std::vector<HandoverRow> run_handover_bench(const HandoverBenchConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  std::vector<HandoverRow> rows;
  for (HandoverKind kind : cfg.kinds)
    for (double loss : cfg.loss_pct) {
      sim::Simulator s(handover_scenario(cfg, kind, loss));
      for (int t = 0; t < cfg.trials; ++t) {
        auto r = s.run(cfg.seed + static_cast<std::uint64_t>(t));
        if (r.handover_latency_ms.empty()) throw ContractError("handover bench: handover never completed");
        rows.push_back({kind, loss, t, r.handover_latency_ms.front()});
      }
    }
  return rows;
}

std::string handover_csv(const std::vector<HandoverRow>& rows) {
  std::string out = "scheme,mode,loss_pct,trial,handover_latency_ms\n";
  for (const auto& r : rows)
    out += std::string(r.kind == HandoverKind::mobike ? "ikev2" : "nimsa") + "," + std::string(to_string(r.kind)) +
           "," + num(r.loss_pct) + "," + std::to_string(r.trial) + "," + fmt("%.3f", r.latency_ms) + "\n";
  return out;
}

// --- data-path latency ------------------------------------------------------

Scenario latency_scenario(const LatencyBenchConfig& cfg, Scheme scheme) {
  Scenario sc = cfg.base;
  sc.scheme = scheme;
  sc.traffic = {TrafficType::probe, 1e6, cfg.probe_bytes, cfg.duration_s, cfg.probe_interval_ms};
  sc.handover.reset();
  sc.preestablish = true;
  sc.stop_after = sim::StopAfter::none;
  sc.seed = cfg.seed;
  return sc;
}

std::vector<LatencyRow> run_latency_bench(const LatencyBenchConfig& cfg) {
  std::vector<LatencyRow> rows;
  for (Scheme scheme : {Scheme::none, Scheme::nimsa, Scheme::ikev2}) {
    auto r = sim::run_scenario(latency_scenario(cfg, scheme), cfg.seed);
    for (std::size_t i = 0; i < r.owd_ms.size(); ++i) rows.push_back({scheme, r.probe_seq[i], r.owd_ms[i]});
  }
  return rows;
}

std::string latency_csv(const std::vector<LatencyRow>& rows) {
  std::string out = "scheme,probe_seq,owd_ms\n";
  for (const auto& r : rows)
    out += std::string(sim::to_string(r.scheme)) + "," + std::to_string(r.probe_seq) + "," + fmt("%.3f", r.owd_ms) + "\n";
  return out;
}

// --- throughput -------------------------------------------------------------

Scenario throughput_scenario(const ThroughputBenchConfig& cfg, Scheme scheme) {
  Scenario sc = cfg.base;
  sc.scheme = scheme;
  sc.traffic = {TrafficType::cbr, cfg.offered_bps, cfg.packet_bytes, cfg.duration_s, 1000};
  sc.handover.reset();
  sc.preestablish = false;
  sc.stop_after = sim::StopAfter::none;
  sc.seed = cfg.seed;
  return sc;
}

std::vector<ThroughputRow> run_throughput_bench(const ThroughputBenchConfig& cfg) {
  std::vector<ThroughputRow> rows;
  for (Scheme scheme : cfg.schemes) {
    auto r = sim::run_scenario(throughput_scenario(cfg, scheme), cfg.seed);
    for (std::size_t i = 0; i < r.goodput_mbps.size(); ++i)
      rows.push_back({scheme, static_cast<double>(i), r.goodput_mbps[i]});
  }
  return rows;
}

std::string throughput_csv(const std::vector<ThroughputRow>& rows) {
  std::string out = "scheme,time_s,goodput_mbps\n";
  for (const auto& r : rows)
    out += std::string(sim::to_string(r.scheme)) + "," + num(r.time_s) + "," + fmt("%.6f", r.goodput_mbps) + "\n";
  return out;
}

double aggregation_efficiency(const std::vector<ThroughputRow>& rows, Scheme scheme, double offered_bps) {
  std::vector<double> g;
  for (const auto& r : rows)
    if (r.scheme == scheme) g.push_back(r.goodput_mbps);
  return mean(g) * 1e6 / offered_bps;
}

// --- self-test --------------------------------------------------------------

Fault parse_fault(std::string_view s) {
  if (s == "none") return Fault::none;
  if (s == "master-mismatch") return Fault::master_mismatch;
  if (s == "curve-param") return Fault::curve_param;
  throw ConfigError("unknown fault: " + std::string(s));
}

int run_selftest(Fault fault, std::ostream& log) {
  int failures = 0;
  auto check = [&](bool ok, std::string_view name) {
    log << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  PairingSuite suite = setup(SecurityLevel::test);
  std::mt19937_64 rng(2024);

  crypto::G1 p = crypto::g1_generator();
  if (fault == Fault::curve_param) {
    // Same x, y moved: the point sits on y^2 = x^3 + b' for some b' != 4.
    p = crypto::G1::from_affine(p.to_affine().x, p.to_affine().y + crypto::Fp::one());
  }
  const crypto::G2 q = crypto::g2_generator();
  const crypto::Gt base = crypto::pairing(p, q);
  bool bilinear = true;
  for (int i = 0; i < 5 && bilinear; ++i) {
    crypto::Fr a = gen_master(suite, rng).s;
    crypto::Fr b = gen_master(suite, rng).s;
    bilinear = crypto::pairing(p.mul(a), q.mul(b)) == base.pow((a * b).to_canonical());
  }
  check(bilinear, "bilinearity e(aP, bQ) = e(P, Q)^(ab)");
  check(!base.is_one(), "non-degeneracy e(P, Q) != 1");

  bool agree = true;
  for (int i = 0; i < 5 && agree; ++i) {
    MasterSecret m = gen_master(suite, rng);
    MasterSecret m_ha = fault == Fault::master_mismatch ? gen_master(suite, rng) : m;
    std::string id = "selftest-" + std::to_string(i);
    IdentityLabel mr{Bytes(id.begin(), id.end()), {10, 0, static_cast<std::uint8_t>(i), 2}, static_cast<unsigned>(i % 3)};
    IdentityLabel ha{Bytes{'H', 'A'}, {192, 0, 2, 1}, std::nullopt};
    auto k_mr = shared_from_private(suite, derive_private_point(suite, m, mr), ha);
    auto k_ha = shared_from_private(suite, derive_private_point(suite, m_ha, ha), mr);
    agree = k_mr.bytes() == k_ha.bytes() &&
            derive_session_key(k_mr, 1).key_bytes == derive_session_key(k_ha, 1).key_bytes;
  }
  check(agree, "key agreement MR side = HA side");

  MasterSecret m = gen_master(suite, rng);
  MrEndpoint mr(suite, "selftest-mr", m, "HA", {192, 0, 2, 1});
  HaEndpoint ha(suite, "HA", {192, 0, 2, 1});
  MrEndpoint voucher_source =
      fault == Fault::master_mismatch ? MrEndpoint(suite, "selftest-mr", gen_master(suite, rng), "HA", {192, 0, 2, 1}) : mr;
  ha.register_mr(mr.device_id(), voucher_source.registration_voucher());
  mr.on_adapter_up(0, {10, 0, 0, 2});
  auto pkt = mr.send({1, 2, 3, 4}, 0);
  check(accepted(ha.on_packet(pkt)), "endpoint genuine packet accepted");
  auto forged = pkt;
  forged.payload[0] ^= 1;
  check(ha.on_packet(forged) == VerdictReason::DropAuthFail, "endpoint tampered packet rejected");

  auto decoded = decode_header(encode_header(pkt.header));
  check(decoded && *decoded == pkt.header, "wire header round trip");
  return failures;
}

}  // namespace nimsa::bench
