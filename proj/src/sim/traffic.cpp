#include "nimsa/sim/traffic.hpp"

#include <cmath>

#include "nimsa/errors.hpp"

namespace nimsa::sim {

Micros probe_tick(double interval_ms, std::size_t k) { return from_ms(interval_ms * static_cast<double>(k)); }

Micros cbr_tick(double rate_bps, std::size_t packet_bytes, std::size_t k) {
  double bits = static_cast<double>(packet_bytes) * 8.0 * static_cast<double>(k);
  return static_cast<Micros>(std::llround(bits * 1e6 / rate_bps));
}

std::size_t cbr_count(double rate_bps, std::size_t packet_bytes, double duration_s) {
  double spacing_s = static_cast<double>(packet_bytes) * 8.0 / rate_bps;
  // Guard against 9999.999... from the division.
  return static_cast<std::size_t>(std::ceil(duration_s / spacing_s - 1e-9));
}

std::vector<Micros> probe_generator(double interval_ms, std::size_t count) {
  if (!(interval_ms > 0) || count == 0) throw ContractError("probe: parameters must be positive");
  std::vector<Micros> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(probe_tick(interval_ms, k));
  return out;
}

std::vector<Micros> cbr_generator(double rate_bps, std::size_t packet_bytes, double duration_s) {
  if (!(rate_bps > 0) || packet_bytes == 0 || !(duration_s > 0)) throw ContractError("cbr: parameters must be positive");
  std::size_t n = cbr_count(rate_bps, packet_bytes, duration_s);
  std::vector<Micros> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(cbr_tick(rate_bps, packet_bytes, k));
  return out;
}

}  // namespace nimsa::sim
