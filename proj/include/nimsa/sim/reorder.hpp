#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nimsa/sim/time.hpp"

namespace nimsa::sim {

struct ReorderItem {
  std::uint64_t seq = 0;
  std::size_t bytes = 0;
  std::uint64_t tag = 0;  // caller's handle
};

struct ReorderResult {
  std::vector<ReorderItem> released;
  std::optional<Micros> hold_until;  // set when the item was held
};

/// Receiver-side resequencer. In-order items pass straight through; an item
/// ahead of a gap waits at most `window`, after which everything up to it is
/// released and the gap is given up.
class ReorderBuffer {
 public:
  explicit ReorderBuffer(Micros window, std::uint64_t first_seq = 0) : window_(window), next_(first_seq) {}

  ReorderResult release(ReorderItem item, Micros now);

  /// Window expiry for a held item; no-op if it already left.
  std::vector<ReorderItem> expire(std::uint64_t seq);

  std::uint64_t next_expected() const { return next_; }
  std::size_t held() const { return held_.size(); }

 private:
  void drain(std::vector<ReorderItem>& out);

  Micros window_;
  std::uint64_t next_;
  std::map<std::uint64_t, ReorderItem> held_;
};

}  // namespace nimsa::sim
