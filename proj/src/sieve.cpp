#include "primebounds/sieve.hpp"

#include <cmath>

namespace primebounds {

std::vector<std::uint32_t> base_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit >= 2) out.push_back(2);
  if (limit < 3) return out;
  const std::uint32_t nodd = (limit - 1) / 2;  // odds 3,5,..,<=limit
  std::vector<std::uint64_t> bits((nodd + 63) / 64, 0);
  for (std::uint32_t i = 0; i < nodd; ++i) {
    if (bits[i >> 6] & (1ull << (i & 63))) continue;
    const std::uint64_t p = 2ull * i + 3;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p - 3) / 2; j < nodd; j += p)
      bits[j >> 6] |= 1ull << (j & 63);
  }
  return out;
}

SegmentedSieve::SegmentedSieve(std::uint64_t ceiling, std::size_t segment_bytes)
    : ceiling_(ceiling), segment_bytes_(segment_bytes) {
  if (ceiling > kHardCap) throw capacity_error("ceiling exceeds hard cap 2^63");
  const auto root = static_cast<std::uint32_t>(
                        std::floor(std::sqrt(static_cast<double>(ceiling)))) + 2;
  base_ = base_primes(root);
}

void SegmentedSieve::check_range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi) throw argument_error("sieve range lo > hi");
  if (hi > ceiling_ + 1)
    throw capacity_error("sieve range exceeds configured ceiling");
}

void SegmentedSieve::fill_segment(std::uint64_t base, SieveSegment& seg) const {
  seg.base = base;
  seg.length = segment_bytes_;
  const std::uint64_t nbits = 8ull * segment_bytes_;
  seg.bits.assign((nbits + 63) / 64, 0);
  const std::uint64_t end = base + seg.span();
  if (base == 0) seg.bits[0] |= 1;  // value 1 is not prime
  for (const std::uint32_t p32 : base_) {
    if (p32 == 2) continue;
    const std::uint64_t p = p32;
    if (p * p >= end) break;
    std::uint64_t m = (base / p + 1) * p;  // smallest multiple > base
    if (m < p * p) m = p * p;
    if ((m & 1) == 0) m += p;
    for (std::uint64_t k = (m - base - 1) / 2; k < nbits; k += p)
      seg.bits[k >> 6] |= 1ull << (k & 63);
  }
}

std::vector<std::uint64_t> SegmentedSieve::collect(std::uint64_t lo,
                                                   std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace primebounds
