#pragma once
// PrimePoint: one verification sample along the prime stream.

#include <cstdint>

#include "primebounds/interval.hpp"

namespace primebounds {

struct PrimePoint {
  std::uint64_t n = 0;   // 1-based prime index
  std::uint64_t p = 0;   // p_n
  Interval w;            // log log n   (invalid when n = 1)
  Interval y;            // log n
  Interval z;            // log p_n
  Interval theta;        // enclosure of theta(p_n); invalid if not streamed
  bool theta_valid = false;
};

}  // namespace primebounds
