#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "nimsa/sim/time.hpp"

namespace nimsa::sim {

struct LinkProfile {
  double loss_min = 0;  // fraction
  double loss_max = 0;
  double bandwidth_bps = 4e6;
  double delay_min_ms = 0;  // one-way propagation
  double delay_max_ms = 0;

  /// ConfigError unless 0 <= loss_min <= loss_max <= 1, bandwidth > 0 and
  /// 0 <= delay_min <= delay_max.
  void validate() const;
  double delay_mid_ms() const { return (delay_min_ms + delay_max_ms) / 2; }
};

/// One direction of a link: a FIFO serializer in front of the propagation delay.
struct LinkState {
  LinkProfile profile;
  Micros busy_until = 0;
};

/// The three access links used throughout the benchmarks (A, B, C).
std::vector<LinkProfile> table1_links();

/// Uniform in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

Micros serialization_time(const LinkProfile& p, std::size_t bytes);

/// Queues `bytes` behind the link's tail. Draws, in order, the loss
/// probability, the loss test and the delay, so every call consumes exactly
/// three values. Returns the arrival time or nothing when the packet is lost.
std::optional<Micros> link_transmit(LinkState& link, std::size_t bytes, Micros now, std::mt19937_64& rng);

/// Earliest Delivery Path First estimate using the delay midpoint.
Micros edpf_estimate(const LinkState& link, std::size_t bytes, Micros now);

/// Index of the smallest estimate, lowest index on ties. ContractError when
/// `links` is empty.
std::size_t edpf_pick(const std::vector<LinkState>& links, std::size_t bytes, Micros now);

/// Same, restricted to the links whose `usable` entry is true. Nothing when
/// no link qualifies.
std::optional<std::size_t> edpf_pick(const std::vector<LinkState>& links, const std::vector<bool>& usable,
                                     std::size_t bytes, Micros now);

}  // namespace nimsa::sim
