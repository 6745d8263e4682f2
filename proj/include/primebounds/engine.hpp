#pragma once
// PrimeEngine: ground-truth generator. Streams primes, prime counts, and
// PrimePoints (with running theta enclosures) up to the configured
// desk-scale ceiling; no full prime table is ever held in memory.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "primebounds/config.hpp"
#include "primebounds/point.hpp"
#include "primebounds/sieve.hpp"
#include "primebounds/theta.hpp"

namespace primebounds {

// log n as an interval, exact at n = 1.
Interval log_of_u64(std::uint64_t n);

// Builds w/y/z for index n and prime p (theta left invalid).
PrimePoint make_point(std::uint64_t n, std::uint64_t p);

struct StreamOptions {
  std::string checkpoint_path;          // empty: no checkpointing
  bool resume = false;
  std::uint64_t checkpoint_stride = 1'000'000;
};

class PrimeEngine {
 public:
  explicit PrimeEngine(std::uint64_t ceiling = kDefaultCeiling,
                       std::size_t segment_bytes = 256 * 1024);

  std::uint64_t ceiling() const { return sieve_.ceiling(); }
  const SegmentedSieve& sieve() const { return sieve_; }

  // primes in [lo, hi), ascending
  std::vector<std::uint64_t> sieve_range(std::uint64_t lo, std::uint64_t hi) const;

  std::uint64_t nth_prime(std::uint64_t n) const;
  std::uint64_t prime_count(std::uint64_t x) const;

  // One PrimePoint per index in [n_lo, n_hi], in order, theta seeded from
  // index 1. The sink may return false to stop early.
  void stream_points(std::uint64_t n_lo, std::uint64_t n_hi,
                     const std::function<bool(const PrimePoint&)>& sink,
                     const StreamOptions& opts = {}) const;

  // Deterministic seed state for starting a point stream mid-range: the
  // canonical accumulator at index n-1 plus p_{n-1}. Computed by a serial
  // prepass; used by parallel verification chunking.
  struct StreamSeed {
    std::uint64_t n_start = 2;       // first index the seeded stream emits
    std::uint64_t prev_prime = 2;    // p_{n_start-1}
    ThetaAccumulator acc;            // state after folding term n_start-1
  };

  // Seeds at the given sorted boundary indices (all >= 2) in one pass.
  std::vector<StreamSeed> make_seeds(const std::vector<std::uint64_t>& starts) const;

  // Streams [seed.n_start, n_hi] from a prepared seed.
  void stream_from_seed(const StreamSeed& seed, std::uint64_t n_hi,
                        const std::function<bool(const PrimePoint&)>& sink) const;

 private:
  SegmentedSieve sieve_;
};

}  // namespace primebounds
