#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "nimsa/sim/time.hpp"

namespace nimsa::sim {

enum class EventKind : std::uint8_t {
  PacketArrival,  // a = packet slot
  Processed,      // receiver CPU finished; a = packet slot
  TimerFire,      // a = timer payload, b = timer class
  AdapterChange,  // b = 0 link down, 1 new address
  TrafficTick,    // a = tick index
};

struct SimEvent {
  Micros time = 0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::TrafficTick;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// Time-ordered queue; equal times pop in insertion order.
class EventQueue {
 public:
  void push(Micros time, EventKind kind, std::uint64_t a = 0, std::uint64_t b = 0) {
    q_.push({time, next_seq_++, kind, a, b});
  }
  SimEvent pop() {
    SimEvent e = q_.top();
    q_.pop();
    return e;
  }
  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }

 private:
  struct Later {
    bool operator()(const SimEvent& x, const SimEvent& y) const {
      return x.time != y.time ? x.time > y.time : x.seq > y.seq;
    }
  };
  std::priority_queue<SimEvent, std::vector<SimEvent>, Later> q_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace nimsa::sim
