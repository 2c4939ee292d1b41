#pragma once

#include <cmath>
#include <cstdint>

namespace nimsa::sim {

/// Simulated time in integer microseconds.
using Micros = std::int64_t;

inline Micros from_ms(double ms) { return static_cast<Micros>(std::llround(ms * 1000.0)); }
inline double to_ms(Micros t) { return static_cast<double>(t) / 1000.0; }

}  // namespace nimsa::sim
