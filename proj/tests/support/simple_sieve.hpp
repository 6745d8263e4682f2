#pragma once
// Independent prime oracle for cross-checks: a plain monolithic odd-only
// Eratosthenes sieve plus trial division, sharing no code with the library's
// segmented sieve. Slow and memory-hungry by design simplicity; test-only.

#include <cstdint>
#include <vector>

namespace primebounds::testsupport {

// all primes <= limit, ascending
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  out.push_back(2);
  if (limit < 3) return out;
  const std::uint64_t m = (limit - 1) / 2;  // odd candidates 2i+3, i < m
  std::vector<bool> composite(m, false);
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t p = 2 * i + 3;
    if (p * p > limit) break;
    if (composite[i]) continue;
    for (std::uint64_t j = (p * p - 3) / 2; j < m; j += p) composite[j] = true;
  }
  for (std::uint64_t i = 0; i < m; ++i)
    if (!composite[i]) out.push_back(2 * i + 3);
  return out;
}

// prime count up to limit without materializing the prime list
inline std::uint64_t count_primes(std::uint64_t limit) {
  if (limit < 2) return 0;
  std::uint64_t count = 1;  // the prime 2
  if (limit < 3) return count;
  const std::uint64_t m = (limit - 1) / 2;
  std::vector<bool> composite(m, false);
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t p = 2 * i + 3;
    if (p * p > limit) break;
    if (composite[i]) continue;
    for (std::uint64_t j = (p * p - 3) / 2; j < m; j += p) composite[j] = true;
  }
  for (std::uint64_t i = 0; i < m; ++i)
    if (!composite[i]) ++count;
  return count;
}

inline bool is_prime_trial(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

}  // namespace primebounds::testsupport
