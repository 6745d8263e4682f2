#include "primebounds/engine.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace primebounds {

Interval log_of_u64(std::uint64_t n) {
  if (n == 0) throw domain_error("log of zero");
  if (n == 1) return Interval(0.0);
  const double d = static_cast<double>(n);  // exact for n < 2^53
  const double l = std::log(d);
  return Interval(detail::steps_down(l, 2), detail::steps_up(l, 2));
}

PrimePoint make_point(std::uint64_t n, std::uint64_t p) {
  PrimePoint pt;
  pt.n = n;
  pt.p = p;
  pt.y = log_of_u64(n);
  pt.w = (n >= 2) ? log(pt.y) : Interval::invalid();
  pt.z = log_of_u64(p);
  return pt;
}

PrimeEngine::PrimeEngine(std::uint64_t ceiling, std::size_t segment_bytes)
    : sieve_(ceiling, segment_bytes) {}

std::vector<std::uint64_t> PrimeEngine::sieve_range(std::uint64_t lo,
                                                    std::uint64_t hi) const {
  return sieve_.collect(lo, hi);
}

std::uint64_t PrimeEngine::nth_prime(std::uint64_t n) const {
  if (n == 0) throw argument_error("prime index must be >= 1");
  std::uint64_t count = 1, result = 2;  // p_1
  if (count == n) return result;
  const std::uint64_t limit = ceiling() + 1;
  SieveSegment seg;
  std::uint64_t base = 0;
  while (base < limit) {
    sieve_.fill_segment(base, seg);
    seg.visit(3, limit, [&](std::uint64_t p) {
      if (count < n) {
        ++count;
        result = p;
      }
    });
    if (count == n) return result;
    base = seg.base + seg.span();
  }
  throw capacity_error("nth_prime: index beyond configured ceiling");
}

std::uint64_t PrimeEngine::prime_count(std::uint64_t x) const {
  if (x > ceiling()) throw capacity_error("prime_count beyond configured ceiling");
  if (x < 2) return 0;
  std::uint64_t count = 1;  // the prime 2
  SieveSegment seg;
  std::uint64_t base = 0;
  const std::uint64_t hi = x + 1;
  while (base < hi) {
    sieve_.fill_segment(base, seg);
    const std::uint64_t end = seg.base + seg.span();
    const std::uint64_t to = std::min(hi, end);
    const std::uint64_t nbits = 8ull * seg.length;
    std::uint64_t k_end = (to - seg.base) / 2;
    if (k_end > nbits) k_end = nbits;
    const std::uint64_t full_words = k_end / 64;
    for (std::uint64_t wi = 0; wi < full_words; ++wi)
      count += static_cast<std::uint64_t>(__builtin_popcountll(~seg.bits[wi]));
    if (k_end & 63) {
      const std::uint64_t mask = (1ull << (k_end & 63)) - 1;
      count += static_cast<std::uint64_t>(__builtin_popcountll(~seg.bits[full_words] & mask));
    }
    base = end;
  }
  return count;
}

namespace {

struct CheckpointWriter {
  std::FILE* csv = nullptr;
  std::string state_path;
  std::uint64_t stride = 1'000'000;

  ~CheckpointWriter() {
    if (csv) std::fclose(csv);
  }

  void row(const PrimePoint& pt, const ThetaAccumulator& acc) {
    if (!csv || pt.n % stride != 0) return;
    std::fprintf(csv, "%" PRIu64 ",%" PRIu64 ",%a,%a\n", pt.n, pt.p,
                 pt.theta.lo, pt.theta.hi);
    std::fflush(csv);
    std::FILE* st = std::fopen(state_path.c_str(), "w");
    if (st) {
      std::fprintf(st,
                   "%" PRIu64 " %" PRIu64 " %a %a %a %a %a %a %" PRIu64 "\n",
                   pt.n, pt.p, acc.prefix.hi, acc.prefix.lo, acc.partial.hi,
                   acc.partial.lo, acc.prefix_budget, acc.partial_budget,
                   acc.count);
      std::fclose(st);
    }
  }
};

bool read_state(const std::string& path, PrimeEngine::StreamSeed& seed) {
  std::FILE* st = std::fopen(path.c_str(), "r");
  if (!st) return false;
  std::uint64_t n = 0, p = 0, count = 0;
  ThetaAccumulator acc;
  const int got = std::fscanf(st, "%" SCNu64 " %" SCNu64 " %la %la %la %la %la %la %" SCNu64,
                              &n, &p, &acc.prefix.hi, &acc.prefix.lo,
                              &acc.partial.hi, &acc.partial.lo,
                              &acc.prefix_budget, &acc.partial_budget, &count);
  std::fclose(st);
  if (got != 9) return false;
  acc.count = count;
  seed.n_start = n + 1;
  seed.prev_prime = p;
  seed.acc = acc;
  return true;
}

// Continues a seeded stream: emits points for indices [seed.n_start, n_hi].
void run_stream(const SegmentedSieve& sieve, const PrimeEngine::StreamSeed& seed,
                std::uint64_t n_hi,
                const std::function<bool(const PrimePoint&)>& sink,
                CheckpointWriter* ckpt) {
  ThetaAccumulator acc = seed.acc;
  std::uint64_t count = seed.n_start - 1;
  bool stop = false;
  const std::uint64_t limit = sieve.ceiling() + 1;
  const std::uint64_t from = seed.prev_prime + 1;
  SieveSegment seg;
  std::uint64_t base = from & ~1ull;
  while (base < limit && !stop) {
    sieve.fill_segment(base, seg);
    seg.visit(from, limit, [&](std::uint64_t p) {
      if (stop) return;
      ++count;
      acc.add_term(std::log(static_cast<double>(p)));
      PrimePoint pt = make_point(count, p);
      pt.theta = acc.enclosure();
      pt.theta_valid = true;
      if (ckpt) ckpt->row(pt, acc);
      if (!sink(pt) || count >= n_hi) stop = true;
    });
    base = seg.base + seg.span();
  }
  if (!stop && count < n_hi)
    throw capacity_error("stream_points: range extends beyond configured ceiling");
}

// Folds terms up to index n_target (inclusive) into the seed, without
// emitting points. Seed ends positioned to emit n_target + 1 next.
void fast_forward(const SegmentedSieve& sieve, PrimeEngine::StreamSeed& seed,
                  std::uint64_t n_target) {
  std::uint64_t count = seed.n_start - 1;
  if (count >= n_target) return;
  const std::uint64_t limit = sieve.ceiling() + 1;
  const std::uint64_t first_from = seed.prev_prime + 1;
  SieveSegment seg;
  std::uint64_t base = first_from & ~1ull;
  while (base < limit && count < n_target) {
    sieve.fill_segment(base, seg);
    seg.visit(first_from, limit, [&](std::uint64_t p) {
      if (count >= n_target) return;
      ++count;
      seed.acc.add_term(std::log(static_cast<double>(p)));
      seed.prev_prime = p;
    });
    base = seg.base + seg.span();
  }
  if (count < n_target)
    throw capacity_error("stream_points: n_lo beyond configured ceiling");
  seed.n_start = n_target + 1;
}

PrimeEngine::StreamSeed scratch_seed() {
  PrimeEngine::StreamSeed seed;  // position: p_1 = 2 folded, next index 2
  seed.n_start = 2;
  seed.prev_prime = 2;
  seed.acc.add_term(std::log(2.0));
  return seed;
}

}  // namespace

void PrimeEngine::stream_from_seed(const StreamSeed& seed, std::uint64_t n_hi,
                                   const std::function<bool(const PrimePoint&)>& sink) const {
  if (seed.n_start < 2) throw argument_error("stream must start at index >= 2");
  run_stream(sieve_, seed, n_hi, sink, nullptr);
}

void PrimeEngine::stream_points(std::uint64_t n_lo, std::uint64_t n_hi,
                                const std::function<bool(const PrimePoint&)>& sink,
                                const StreamOptions& opts) const {
  if (n_lo < 2) throw argument_error("stream_points requires n_lo >= 2");
  if (n_lo > n_hi) throw argument_error("stream_points requires n_lo <= n_hi");

  StreamSeed seed = scratch_seed();

  CheckpointWriter ckpt;
  CheckpointWriter* ckpt_ptr = nullptr;
  if (!opts.checkpoint_path.empty()) {
    ckpt.state_path = opts.checkpoint_path + ".state";
    ckpt.stride = opts.checkpoint_stride ? opts.checkpoint_stride : 1'000'000;
    bool resumed = false;
    if (opts.resume) {
      StreamSeed s;
      if (read_state(ckpt.state_path, s) && s.n_start > n_lo) {
        if (s.n_start > n_hi) return;  // nothing left to stream
        seed = s;
        resumed = true;
      }
    }
    ckpt.csv = std::fopen(opts.checkpoint_path.c_str(), resumed ? "a" : "w");
    ckpt_ptr = &ckpt;
  }

  if (seed.n_start < n_lo) fast_forward(sieve_, seed, n_lo - 1);
  run_stream(sieve_, seed, n_hi, sink, ckpt_ptr);
}

std::vector<PrimeEngine::StreamSeed> PrimeEngine::make_seeds(
    const std::vector<std::uint64_t>& starts) const {
  std::vector<StreamSeed> seeds;
  if (starts.empty()) return seeds;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (starts[i] < 2) throw argument_error("seed index must be >= 2");
    if (i && starts[i] < starts[i - 1])
      throw argument_error("seed indices must be ascending");
  }
  StreamSeed cur = scratch_seed();
  std::size_t next = 0;
  while (next < starts.size() && starts[next] == 2) {
    seeds.push_back(cur);
    ++next;
  }
  while (next < starts.size()) {
    // fold forward to just before the next requested start
    fast_forward(sieve_, cur, starts[next] - 1);
    while (next < starts.size() && starts[next] == cur.n_start) {
      seeds.push_back(cur);
      ++next;
    }
  }
  return seeds;
}

}  // namespace primebounds
