#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nimsa/idnike.hpp"
#include "nimsa/ike.hpp"
#include "nimsa/sim/link.hpp"

namespace nimsa::sim {

enum class Scheme { none, nimsa, ikev2 };
enum class HandoverMode { transmission, notification };
enum class TrafficType { none, cbr, probe };
enum class StopAfter { none, auth, handover };

std::string_view to_string(Scheme s);
std::string_view to_string(HandoverMode m);
Scheme parse_scheme(std::string_view s);              // ConfigError
HandoverMode parse_handover_mode(std::string_view s);  // ConfigError

struct Traffic {
  TrafficType type = TrafficType::none;
  double rate_bps = 1e6;
  std::size_t packet_bytes = 1250;
  double duration_s = 10;
  double probe_interval_ms = 1000;
};

struct CryptoCosts {
  double pairing_ms = 1.5;
  double hmac_ms = 0.02;
};

/// Address change on one adapter. With a nonzero outage the adapter first
/// loses its link for `outage_ms`, and the change fires when it comes back.
struct HandoverPlan {
  double at_ms = 1000;
  double jitter_ms = 0;  // start drawn uniformly from [at, at + jitter)
  std::optional<double> outage_ms;  // default: 50 in transmission mode, 0 otherwise
  unsigned interface = 0;

  double effective_outage_ms(HandoverMode mode) const {
    return outage_ms.value_or(mode == HandoverMode::transmission ? 50.0 : 0.0);
  }
};

struct Scenario {
  std::vector<LinkProfile> links = table1_links();
  Scheme scheme = Scheme::nimsa;
  HandoverMode handover_mode = HandoverMode::transmission;
  Traffic traffic;
  std::optional<double> loss_override_pct;  // applied to every link
  std::optional<double> delay_override_ms;
  int trials = 1;
  std::uint64_t seed = 1;
  ike::IkeConfig ike;
  CryptoCosts crypto_costs;
  std::optional<HandoverPlan> handover;
  bool preestablish = false;
  double reorder_window_ms = 100;
  SecurityLevel security = SecurityLevel::test;
  StopAfter stop_after = StopAfter::none;
  std::size_t pending_limit = 100;  // data queued while the path is unusable

  /// ConfigError on any inconsistent field.
  void validate() const;
  /// Links after the loss and delay overrides.
  std::vector<LinkProfile> effective_links() const;
};

/// Parses the JSON scenario schema and validates it. Missing keys keep their
/// defaults; unknown keys are rejected.
Scenario parse_scenario(std::string_view json_text);

}  // namespace nimsa::sim
