#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimsa/endpoints.hpp"
#include "nimsa/sim/scenario.hpp"

namespace nimsa::sim {

struct MetricsReport {
  std::vector<double> auth_latency_ms;      // trigger to first usable data path
  std::vector<double> handover_latency_ms;  // address change to first packet accepted on the new address
  std::vector<std::uint64_t> probe_seq;     // delivered probes, parallel to owd_ms
  std::vector<double> owd_ms;
  std::vector<double> goodput_mbps;         // 1 s bins after resequencing
  std::map<std::string, std::uint64_t> control_msg_counts;  // transmissions per message type
  std::array<std::uint64_t, kVerdictCount> verdict_counts{};

  // Data packets only. generated = sent + blocked + unsent;
  // sent = delivered + lost + dropped + in_flight.
  std::uint64_t generated = 0;
  std::uint64_t blocked = 0;    // pending queue overflow
  std::uint64_t unsent = 0;     // still pending when the run stopped
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::uint64_t lost = 0;       // on a link
  std::uint64_t dropped = 0;    // by the receiver
  std::uint64_t in_flight = 0;  // when the run stopped early

  std::uint64_t control_msg_total() const;
  bool conserves() const;
  /// Canonical text form; equal reports serialize identically.
  std::string to_json() const;
};

/// Builds keys and registrations once; each run copies them, so only the
/// crypto that happens inside the simulated interval is recomputed per trial.
class Simulator {
 public:
  explicit Simulator(Scenario sc);

  /// One trial. Deterministic in (scenario, seed).
  MetricsReport run(std::uint64_t seed) const;

  const Scenario& scenario() const { return sc_; }

 private:
  Scenario sc_;
  std::vector<LinkProfile> links_;
  std::optional<MrEndpoint> mr_;
  std::optional<HaEndpoint> ha_;
};

/// Simulator(scenario).run(seed).
MetricsReport run_scenario(const Scenario& scenario, std::uint64_t seed);

/// Address of adapter `if_num` after `moves` handovers.
Ipv4 mr_address(unsigned if_num, unsigned moves);
inline constexpr Ipv4 kHaAddress{192, 0, 2, 1};

}  // namespace nimsa::sim
