#pragma once

// Benchmark drivers shared by the CLI and the acceptance checks. Every
// driver runs trial t with seed + t, and schemes at the same grid point share
// those seeds, so rows are paired across schemes.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nimsa/sim/simulator.hpp"

namespace nimsa::bench {

using sim::HandoverMode;
using sim::Scenario;
using sim::Scheme;

struct DelaySweep {
  double from_ms = 10;
  double to_ms = 100;
  double step_ms = 10;
  std::vector<double> values() const;
};
/// "a:b:step"; ConfigError when malformed, empty or step <= 0.
DelaySweep parse_delay_sweep(std::string_view text);

std::vector<double> parse_number_list(std::string_view text);  // "0,5,10"

// --- authentication ---------------------------------------------------------

struct AuthBenchConfig {
  std::vector<double> loss_pct{0, 5, 10, 15};
  DelaySweep delays;
  int trials = 100;
  std::vector<Scheme> schemes{Scheme::nimsa, Scheme::ikev2};
  std::uint64_t seed = 1;
  Scenario base;  // link bandwidth (first link), ike and crypto costs
};

struct AuthRow {
  Scheme scheme;
  double loss_pct;
  double delay_ms;
  int trial;
  double latency_ms;
};

/// One MR-HA path on a single link with the base's first-link bandwidth,
/// fixed delay and loss, and 1 Mbps of 1250 B data starting at t = 0.
Scenario auth_scenario(const AuthBenchConfig& cfg, Scheme scheme, double loss_pct, double delay_ms);
std::vector<AuthRow> run_auth_bench(const AuthBenchConfig& cfg);
std::string auth_csv(const std::vector<AuthRow>& rows);

// --- handover ---------------------------------------------------------------

enum class HandoverKind { transmission, notification, mobike };
std::string_view to_string(HandoverKind k);
HandoverKind parse_handover_kind(std::string_view s);  // ConfigError

struct HandoverBenchConfig {
  std::vector<HandoverKind> kinds{HandoverKind::transmission, HandoverKind::notification, HandoverKind::mobike};
  std::vector<double> loss_pct{0, 5, 10, 15};
  double delay_ms = 50;
  int trials = 100;
  std::uint64_t seed = 1;
  Scenario base;
};

struct HandoverRow {
  HandoverKind kind;
  double loss_pct;
  int trial;
  double latency_ms;
};

/// Preestablished single-link path; the address changes once, 1 to 2 s in.
/// Transmission mode and MOBIKE carry 1 Mbps of data and lose the link for
/// 50 ms first; notification mode is idle apart from one packet a second.
Scenario handover_scenario(const HandoverBenchConfig& cfg, HandoverKind kind, double loss_pct);
std::vector<HandoverRow> run_handover_bench(const HandoverBenchConfig& cfg);
std::string handover_csv(const std::vector<HandoverRow>& rows);

// --- data-path latency ------------------------------------------------------

struct LatencyBenchConfig {
  double duration_s = 60;
  double probe_interval_ms = 1000;
  std::size_t probe_bytes = 64;
  std::uint64_t seed = 1;
  Scenario base;  // links default to the three-link table
};

struct LatencyRow {
  Scheme scheme;
  std::uint64_t probe_seq;
  double owd_ms;
};

Scenario latency_scenario(const LatencyBenchConfig& cfg, Scheme scheme);
std::vector<LatencyRow> run_latency_bench(const LatencyBenchConfig& cfg);
std::string latency_csv(const std::vector<LatencyRow>& rows);

// --- throughput -------------------------------------------------------------

struct ThroughputBenchConfig {
  double offered_bps = 10e6;
  double duration_s = 30;
  std::size_t packet_bytes = 1250;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes{Scheme::nimsa, Scheme::ikev2};
  Scenario base;
};

struct ThroughputRow {
  Scheme scheme;
  double time_s;
  double goodput_mbps;
};

/// Sessions start cold: NIMSA authenticates in-band, IKEv2 queues data
/// until its SA is up.
Scenario throughput_scenario(const ThroughputBenchConfig& cfg, Scheme scheme);
std::vector<ThroughputRow> run_throughput_bench(const ThroughputBenchConfig& cfg);
std::string throughput_csv(const std::vector<ThroughputRow>& rows);
/// Mean goodput over offered load, per scheme.
double aggregation_efficiency(const std::vector<ThroughputRow>& rows, Scheme scheme, double offered_bps);

// --- self-test --------------------------------------------------------------

enum class Fault { none, master_mismatch, curve_param };
Fault parse_fault(std::string_view s);  // ConfigError

/// Crypto, wire and endpoint property checks; one line per check on `log`.
/// Returns the number of failed checks.
int run_selftest(Fault fault, std::ostream& log);

double mean(const std::vector<double>& v);

}  // namespace nimsa::bench
