#include "nimsa/sim/link.hpp"

#include <cmath>

#include "nimsa/errors.hpp"

namespace nimsa::sim {

void LinkProfile::validate() const {
  if (!(loss_min >= 0 && loss_min <= loss_max && loss_max <= 1)) throw ConfigError("link: loss range outside [0, 1]");
  if (!(bandwidth_bps > 0) || !std::isfinite(bandwidth_bps)) throw ConfigError("link: bandwidth must be positive");
  if (!(delay_min_ms >= 0 && delay_min_ms <= delay_max_ms) || !std::isfinite(delay_max_ms))
    throw ConfigError("link: bad delay range");
}

std::vector<LinkProfile> table1_links() {
  return {
      {0.015, 0.020, 4e6, 40, 50},
      {0.020, 0.025, 4e6, 60, 70},
      {0.010, 0.015, 4e6, 50, 60},
  };
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Micros serialization_time(const LinkProfile& p, std::size_t bytes) {
  return static_cast<Micros>(std::llround(static_cast<double>(bytes) * 8.0 * 1e6 / p.bandwidth_bps));
}

std::optional<Micros> link_transmit(LinkState& link, std::size_t bytes, Micros now, std::mt19937_64& rng) {
  if (bytes == 0) throw ContractError("link: empty packet");
  const LinkProfile& p = link.profile;
  Micros start = std::max(now, link.busy_until);
  link.busy_until = start + serialization_time(p, bytes);
  double loss = p.loss_min + (p.loss_max - p.loss_min) * uniform01(rng);
  bool lost = uniform01(rng) < loss;
  double delay = p.delay_min_ms + (p.delay_max_ms - p.delay_min_ms) * uniform01(rng);
  if (lost) return std::nullopt;
  return link.busy_until + from_ms(delay);
}

Micros edpf_estimate(const LinkState& link, std::size_t bytes, Micros now) {
  return std::max(now, link.busy_until) + serialization_time(link.profile, bytes) + from_ms(link.profile.delay_mid_ms());
}

std::size_t edpf_pick(const std::vector<LinkState>& links, std::size_t bytes, Micros now) {
  if (links.empty()) throw ContractError("edpf: no links");
  auto pick = edpf_pick(links, std::vector<bool>(links.size(), true), bytes, now);
  return *pick;
}

std::optional<std::size_t> edpf_pick(const std::vector<LinkState>& links, const std::vector<bool>& usable,
                                     std::size_t bytes, Micros now) {
  std::optional<std::size_t> best;
  Micros best_at = 0;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i >= usable.size() || !usable[i]) continue;
    Micros at = edpf_estimate(links[i], bytes, now);
    if (!best || at < best_at) {
      best = i;
      best_at = at;
    }
  }
  return best;
}

}  // namespace nimsa::sim
