#pragma once
// Chebyshev theta accumulation with a deterministic two-level fold.
//
// The canonical accumulation unit is a block of 2^22 consecutive prime
// indices (absolute: block b covers indices b*2^22+1 .. (b+1)*2^22). Each
// block's double-double partial sum is accumulated term-by-term in index
// order starting from dd zero; the prefix over completed blocks is folded
// serially in block order. Every emitted value is prefix ⊕ in-block partial.
// Because every intermediate is canonical, the emitted intervals are
// bit-identical no matter how the surrounding scan is segmented, chunked, or
// parallelized.
//
// The error budget is explicit: 2 ulp per log term (libm faithful + slack)
// plus 2^-100·|sum| per dd add, folded the same two-level way.

#include <cmath>
#include <cstdint>

#include "primebounds/double_double.hpp"
#include "primebounds/interval.hpp"

namespace primebounds {

inline constexpr std::uint64_t kThetaBlock = 1ull << 22;

struct ThetaAccumulator {
  dd prefix;                  // fold over completed blocks
  dd partial;                 // current block, from its start
  double prefix_budget = 0.0;
  double partial_budget = 0.0;
  std::uint64_t count = 0;    // number of log terms folded in

  // Adds log p for the next prime index (count+1). `log_p` must be the
  // round-to-nearest double log; its error bound (2 ulp) is charged here.
  void add_term(double log_p) {
    partial = dd_add(partial, log_p);
    partial_budget += 2.0 * std::fabs(log_p) * 0x1p-52 +
                      std::fabs(partial.hi) * 0x1p-100;
    ++count;
    if (count % kThetaBlock == 0) roll_block();
  }

  void roll_block() {
    prefix = dd_add(prefix, partial);
    prefix_budget += partial_budget + std::fabs(prefix.hi) * 0x1p-100;
    partial = dd();
    partial_budget = 0.0;
  }

  dd sum() const { return dd_add(prefix, partial); }

  Interval enclosure() const {
    const dd s = sum();
    const double budget =
        prefix_budget + partial_budget + std::fabs(s.hi) * 0x1p-100;
    const double v = s.hi + s.lo;
    return Interval(detail::next_down(v - budget), detail::next_up(v + budget));
  }
};

}  // namespace primebounds
