#include "nimsa/sim/reorder.hpp"

namespace nimsa::sim {

void ReorderBuffer::drain(std::vector<ReorderItem>& out) {
  for (auto it = held_.begin(); it != held_.end() && it->first == next_; it = held_.erase(it)) {
    out.push_back(it->second);
    ++next_;
  }
}

ReorderResult ReorderBuffer::release(ReorderItem item, Micros now) {
  ReorderResult r;
  if (item.seq < next_) {
    // Arrived after its gap was given up.
    r.released.push_back(item);
  } else if (item.seq == next_) {
    r.released.push_back(item);
    ++next_;
    drain(r.released);
  } else if (held_.emplace(item.seq, item).second) {
    r.hold_until = now + window_;
  }
  return r;
}

std::vector<ReorderItem> ReorderBuffer::expire(std::uint64_t seq) {
  std::vector<ReorderItem> out;
  if (!held_.contains(seq)) return out;
  auto end = held_.upper_bound(seq);
  for (auto it = held_.begin(); it != end; it = held_.erase(it)) out.push_back(it->second);
  next_ = seq + 1;
  drain(out);
  return out;
}

}  // namespace nimsa::sim
