#pragma once

#include <cstddef>
#include <vector>

#include "nimsa/sim/time.hpp"

namespace nimsa::sim {

/// Tick k of a probe train.
Micros probe_tick(double interval_ms, std::size_t k);
/// Tick k of a constant-bit-rate source; spacing = packet_bytes*8/rate_bps.
Micros cbr_tick(double rate_bps, std::size_t packet_bytes, std::size_t k);
/// Number of CBR packets emitted in [0, duration_s).
std::size_t cbr_count(double rate_bps, std::size_t packet_bytes, double duration_s);

/// ContractError on non-positive parameters.
std::vector<Micros> probe_generator(double interval_ms, std::size_t count);
std::vector<Micros> cbr_generator(double rate_bps, std::size_t packet_bytes, double duration_s);

}  // namespace nimsa::sim
