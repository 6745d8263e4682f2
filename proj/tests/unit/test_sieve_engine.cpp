#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cinttypes>
#include <cstdio>
#include <map>
#include <vector>

#include "primebounds/engine.hpp"
#include "support/mpfr_oracle.hpp"
#include "support/simple_sieve.hpp"

using namespace primebounds;
using testsupport::Mp;

namespace {

bool mp_in(const Mp& v, const Interval& box) {
  return mpfr_cmp_d(v.get(), box.lo) >= 0 && mpfr_cmp_d(v.get(), box.hi) <= 0;
}

struct CkptRow {
  std::uint64_t n = 0, p = 0;
  double lo = 0, hi = 0;
};

std::vector<CkptRow> read_ckpt(const std::string& path) {
  std::vector<CkptRow> rows;
  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  CkptRow r;
  while (std::fscanf(f, "%" SCNu64 ",%" SCNu64 ",%la,%la\n", &r.n, &r.p, &r.lo,
                     &r.hi) == 4)
    rows.push_back(r);
  std::fclose(f);
  return rows;
}

}  // namespace

TEST_CASE("segmented sieve matches a monolithic sieve up to 10^6") {
  const std::vector<std::uint64_t> want = testsupport::sieve_primes(1000000);
  for (std::size_t segbytes : {64, 640, 256 * 1024}) {
    SegmentedSieve sieve(1000000, segbytes);
    CHECK(sieve.collect(0, 1000001) == want);
  }
}

TEST_CASE("sieve_range endpoints and small windows") {
  PrimeEngine eng(1000000);
  CHECK(eng.sieve_range(0, 10) ==
        std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(eng.sieve_range(10, 30) ==
        std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
  CHECK(eng.sieve_range(2, 3) == std::vector<std::uint64_t>{2});
  CHECK(eng.sieve_range(3, 3) == std::vector<std::uint64_t>{});
  // the window is half-open
  CHECK(eng.sieve_range(11, 13) == std::vector<std::uint64_t>{11});
  const auto top = eng.sieve_range(999900, 1000001);
  REQUIRE(!top.empty());
  CHECK(top.back() == 999983);
  for (std::uint64_t p : top) CHECK(testsupport::is_prime_trial(p));

  CHECK_THROWS_AS(eng.sieve_range(30, 10), argument_error);
  CHECK_THROWS_AS(eng.sieve_range(0, 1000002), capacity_error);
}

TEST_CASE("nth_prime and prime_count agree with known values and the oracle") {
  PrimeEngine eng(16000000);
  CHECK(eng.nth_prime(1) == 2);
  CHECK(eng.nth_prime(2) == 3);
  CHECK(eng.nth_prime(6) == 13);
  CHECK(eng.nth_prime(25) == 97);
  CHECK(eng.nth_prime(168) == 997);
  CHECK(eng.nth_prime(10000) == 104729);
  CHECK(eng.nth_prime(78498) == 999983);
  CHECK(eng.nth_prime(1000000) == 15485863);

  CHECK(eng.prime_count(0) == 0);
  CHECK(eng.prime_count(1) == 0);
  CHECK(eng.prime_count(2) == 1);
  CHECK(eng.prime_count(3) == 2);
  CHECK(eng.prime_count(4) == 2);
  for (std::uint64_t x : {10ull, 100ull, 1000ull, 65536ull, 1000000ull})
    CHECK(eng.prime_count(x) == testsupport::count_primes(x));
  CHECK(eng.prime_count(1000000) == 78498);
  CHECK(eng.prime_count(15485863) == 1000000);

  CHECK_THROWS_AS(eng.nth_prime(0), argument_error);
  PrimeEngine tiny(1000);
  CHECK(tiny.nth_prime(168) == 997);
  CHECK_THROWS_AS(tiny.nth_prime(169), capacity_error);
  CHECK_THROWS_AS(tiny.prime_count(1002), capacity_error);
}

TEST_CASE("make_point encloses exact logs; index 1 has no w") {
  for (std::uint64_t n : {2ull, 10ull, 1000000ull, 1000000000000ull}) {
    const PrimePoint pt = make_point(n, 2 * n + 1);
    const Mp y = testsupport::mp_log(Mp(n));
    CHECK(mp_in(y, pt.y));
    CHECK(mp_in(testsupport::mp_log(y), pt.w));
    CHECK(mp_in(testsupport::mp_log(Mp(2 * n + 1)), pt.z));
    CHECK(!pt.theta_valid);
  }
  CHECK(make_point(1, 2).y.is_point());
  CHECK(make_point(1, 2).y.lo == 0.0);
  CHECK(!make_point(1, 2).w.valid());
  CHECK_THROWS_AS(log_of_u64(0), domain_error);
}

TEST_CASE("stream_points emits correct primes and theta enclosures") {
  PrimeEngine eng(200000);

  std::vector<PrimePoint> pts;
  eng.stream_points(2, 4, [&](const PrimePoint& pt) {
    pts.push_back(pt);
    return true;
  });
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].n == 2);
  CHECK(pts[0].p == 3);
  CHECK(pts[1].p == 5);
  CHECK(pts[2].p == 7);
  // theta(7) = log 210
  CHECK(pts[2].theta_valid);
  CHECK(mp_in(testsupport::mp_log(Mp(std::uint64_t(210))), pts[2].theta));
  CHECK(pts[2].theta.width() < 1e-13);

  pts.clear();
  eng.stream_points(25, 25, [&](const PrimePoint& pt) {
    pts.push_back(pt);
    return true;
  });
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].p == 97);
  CHECK(pts[0].theta.contains(83.72839039906393));

  // theta containment against a 500-bit scalar sum, every index up to 10^4
  Mp exact(0.0);
  std::uint64_t idx = 1;
  const std::vector<std::uint64_t> primes = testsupport::sieve_primes(200000);
  exact = testsupport::mp_log(Mp(std::uint64_t(2)));
  bool all_ok = true;
  std::uint64_t ratio_fail = 0;
  eng.stream_points(2, 10000, [&](const PrimePoint& pt) {
    ++idx;
    if (pt.n != idx || pt.p != primes[idx - 1]) all_ok = false;
    exact = exact + testsupport::mp_log(Mp(pt.p));
    if (!mp_in(exact, pt.theta)) all_ok = false;
    // n > p_n / log p_n from index 7 on
    if (pt.n >= 7 && !((Interval(static_cast<double>(pt.p)) / pt.z).hi <
                       static_cast<double>(pt.n)))
      ++ratio_fail;
    return true;
  });
  CHECK(all_ok);
  CHECK(idx == 10000);
  CHECK(ratio_fail == 0);

  // early stop via sink
  int seen = 0;
  eng.stream_points(2, 1000, [&](const PrimePoint&) { return ++seen < 5; });
  CHECK(seen == 5);

  CHECK_THROWS_AS(eng.stream_points(1, 5, [](const PrimePoint&) { return true; }),
                  argument_error);
  CHECK_THROWS_AS(eng.stream_points(9, 5, [](const PrimePoint&) { return true; }),
                  argument_error);
  PrimeEngine tiny(100);
  CHECK_THROWS_AS(
      tiny.stream_points(2, 26, [](const PrimePoint&) { return true; }),
      capacity_error);
}

TEST_CASE("theta stream is bit-identical across segment sizes and chunking") {
  const std::uint64_t n_hi = 30000;
  std::vector<Interval> ref;
  {
    PrimeEngine eng(500000);  // default segments
    eng.stream_points(2, n_hi, [&](const PrimePoint& pt) {
      ref.push_back(pt.theta);
      return true;
    });
  }
  REQUIRE(ref.size() == n_hi - 1);

  for (std::size_t segbytes : {64, 4096}) {
    PrimeEngine eng(500000, segbytes);
    std::size_t i = 0;
    bool same = true;
    eng.stream_points(2, n_hi, [&](const PrimePoint& pt) {
      same = same && pt.theta.lo == ref[i].lo && pt.theta.hi == ref[i].hi;
      ++i;
      return true;
    });
    CHECK(same);
    CHECK(i == ref.size());
  }

  // chunked resumption through make_seeds: identical bits, chunk by chunk
  PrimeEngine eng(500000);
  const std::vector<std::uint64_t> starts{2, 10001, 20001};
  const auto seeds = eng.make_seeds(starts);
  REQUIRE(seeds.size() == 3);
  std::size_t i = 0;
  bool same = true;
  for (std::size_t c = 0; c < seeds.size(); ++c) {
    const std::uint64_t hi = (c + 1 < starts.size()) ? starts[c + 1] - 1 : n_hi;
    eng.stream_from_seed(seeds[c], hi, [&](const PrimePoint& pt) {
      same = same && i < ref.size() && pt.theta.lo == ref[i].lo &&
             pt.theta.hi == ref[i].hi;
      ++i;
      return true;
    });
  }
  CHECK(same);
  CHECK(i == ref.size());

  CHECK_THROWS_AS(eng.make_seeds({1}), argument_error);
  CHECK_THROWS_AS(eng.make_seeds({5, 3}), argument_error);
}

TEST_CASE("checkpointing writes strided rows and resume continues seamlessly") {
  const std::string path = "ckpt_test.csv";
  std::remove(path.c_str());
  std::remove((path + ".state").c_str());

  PrimeEngine eng(500000);
  StreamOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_stride = 5000;

  std::map<std::uint64_t, Interval> full;
  eng.stream_points(2, 20000, [&](const PrimePoint& pt) {
    if (pt.n % 5000 == 0) full[pt.n] = pt.theta;
    return true;
  });

  // first leg: up to 12000, checkpoint rows at 5000 and 10000
  eng.stream_points(2, 12000, [](const PrimePoint&) { return true; }, opts);
  auto rows = read_ckpt(path);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 5000);
  CHECK(rows[1].n == 10000);

  // resumed leg: picks up after the saved state, appends 15000 and 20000
  opts.resume = true;
  std::uint64_t first_emitted = 0;
  eng.stream_points(
      2, 20000,
      [&](const PrimePoint& pt) {
        if (!first_emitted) first_emitted = pt.n;
        return true;
      },
      opts);
  CHECK(first_emitted == 10001);
  rows = read_ckpt(path);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t n = 5000 * (i + 1);
    CHECK(rows[i].n == n);
    REQUIRE(full.count(n) == 1);
    // resumed rows carry exactly the same bits as the uninterrupted stream
    CHECK(rows[i].lo == full[n].lo);
    CHECK(rows[i].hi == full[n].hi);
  }

  std::remove(path.c_str());
  std::remove((path + ".state").c_str());
}
