#pragma once
// Segmented sieve of Eratosthenes over an odd-only bitmap. A segment's bit k
// represents the odd number base + 2k + 1; segments default to 256 KiB of
// bitmap (cache-resident) and decoding is independent of the segment size.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "primebounds/config.hpp"

namespace primebounds {

struct SieveSegment {
  std::uint64_t base = 0;           // even, start of the covered range
  std::size_t length = 0;           // bytes of odd-number bitmap
  std::vector<std::uint64_t> bits;  // bit k set = composite; k -> base + 2k + 1

  std::uint64_t span() const { return 2ull * 8ull * length; }  // numbers covered

  // Calls f(p) for every unmarked odd value p in [lo, hi) ∩ segment range,
  // ascending. Word-wise scan; 2 is never produced here.
  template <class F>
  void visit(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    const std::uint64_t end = base + span();
    const std::uint64_t from = std::max(lo, base + 1);
    const std::uint64_t to = std::min(hi, end);
    if (from >= to) return;
    const std::uint64_t nbits = 8ull * length;
    const std::uint64_t k_start = from > base ? (from - base) / 2 : 0;
    std::uint64_t k_end = (to - base) / 2;
    if (k_end > nbits) k_end = nbits;
    if (k_start >= k_end) return;
    const std::uint64_t w_first = k_start >> 6, w_last = (k_end - 1) >> 6;
    for (std::uint64_t wi = w_first; wi <= w_last; ++wi) {
      std::uint64_t word = ~bits[wi];
      if (wi == w_first && (k_start & 63)) word &= ~0ull << (k_start & 63);
      const std::uint64_t base_k = wi << 6;
      while (word) {
        const std::uint64_t k = base_k + static_cast<std::uint64_t>(__builtin_ctzll(word));
        if (k >= k_end) return;
        f(base + 2 * k + 1);
        word &= word - 1;
      }
    }
  }

  // ascending primes within [base, base + span()) ∩ [lo, hi)
  void decode(std::uint64_t lo, std::uint64_t hi,
              std::vector<std::uint64_t>& out) const {
    visit(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  }
};

// Simple monolithic odd-bitmap sieve for base primes (p <= limit).
std::vector<std::uint32_t> base_primes(std::uint32_t limit);

class SegmentedSieve {
 public:
  explicit SegmentedSieve(std::uint64_t ceiling = kDefaultCeiling,
                          std::size_t segment_bytes = 256 * 1024);

  std::uint64_t ceiling() const { return ceiling_; }
  std::size_t segment_bytes() const { return segment_bytes_; }

  // Fills `seg` with the sieved bitmap for [base, base + span).
  void fill_segment(std::uint64_t base, SieveSegment& seg) const;

  // Streams every prime in [lo, hi) ascending into f(p). Throws
  // argument_error if lo > hi, capacity_error if hi > ceiling + 1.
  template <class F>
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    check_range(lo, hi);
    if (lo <= 2 && 2 < hi) f(static_cast<std::uint64_t>(2));
    SieveSegment seg;
    std::uint64_t base = (lo <= 2) ? 0 : (lo & ~1ull);
    while (base < hi) {
      fill_segment(base, seg);
      seg.visit(lo, hi, f);
      base = seg.base + seg.span();
    }
  }

  std::vector<std::uint64_t> collect(std::uint64_t lo, std::uint64_t hi) const;

 private:
  void check_range(std::uint64_t lo, std::uint64_t hi) const;

  std::uint64_t ceiling_;
  std::size_t segment_bytes_;
  std::vector<std::uint32_t> base_;  // primes up to sqrt(ceiling)
};

}  // namespace primebounds
