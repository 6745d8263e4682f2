#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "primebounds/double_double.hpp"
#include "primebounds/dual.hpp"
#include "primebounds/interval.hpp"
#include "primebounds/mpfloat.hpp"
#include "primebounds/rational.hpp"
#include "support/mpfr_oracle.hpp"

using namespace primebounds;
using testsupport::Mp;

namespace {

bool mp_in(const Mp& v, const Interval& box) {
  return mpfr_cmp_d(v.get(), box.lo) >= 0 && mpfr_cmp_d(v.get(), box.hi) <= 0;
}

Mp mp_from_dd(const dd& x) { return Mp(x.hi) + Mp(x.lo); }

bool mp_in_dd(const Mp& v, const DDInterval& box) {
  return !(v < mp_from_dd(box.lo)) && !(mp_from_dd(box.hi) < v);
}

bool mp_in_mpi(const Mp& v, const MPInterval& box) {
  return mpfr_cmp(v.get(), box.lo.get()) >= 0 &&
         mpfr_cmp(v.get(), box.hi.get()) <= 0;
}

}  // namespace

TEST_CASE("next_up / next_down step by exactly one ulp") {
  CHECK(detail::next_up(1.0) == std::nextafter(1.0, 2.0));
  CHECK(detail::next_down(1.0) == std::nextafter(1.0, 0.0));
  CHECK(detail::next_up(-1.0) == std::nextafter(-1.0, 0.0));
  CHECK(detail::next_down(-1.0) == std::nextafter(-1.0, -2.0));
  CHECK(detail::next_up(0.0) > 0.0);
  CHECK(detail::next_down(0.0) < 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(detail::next_up(inf) == inf);
  CHECK(detail::next_down(-inf) == -inf);
}

TEST_CASE("basic interval predicates") {
  Interval a(1.0, 2.0);
  CHECK(a.valid());
  CHECK(a.contains(1.5));
  CHECK(!a.contains(2.5));
  CHECK(!a.contains_zero());
  CHECK(Interval(-1.0, 1.0).contains_zero());
  CHECK(a.certainly_gt(0.5));
  CHECK(!a.certainly_gt(1.5));
  CHECK(a.certainly_lt(3.0));
  CHECK(Interval::invalid().valid() == false);
  CHECK(Interval::exact(3.0).is_point());
}

TEST_CASE("arithmetic containment against the scalar oracle") {
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = dist(rng), b = dist(rng);
    const Interval ia(a), ib(b);
    const Mp ma(a), mb(b);
    CHECK(mp_in(ma + mb, ia + ib));
    CHECK(mp_in(ma - mb, ia - ib));
    CHECK(mp_in(ma * mb, ia * ib));
    if (std::fabs(b) > 1e-6) CHECK(mp_in(ma / mb, ia / ib));
  }
}

TEST_CASE("interval multiplication covers all sign cases") {
  Interval a(-2.0, 3.0), b(-5.0, -1.0);
  Interval p = a * b;
  CHECK(p.lo <= -15.0);
  CHECK(p.hi >= 10.0);
  CHECK(p.lo > -15.0001);
  CHECK(p.hi < 10.0001);
}

TEST_CASE("division by a zero-straddling interval throws") {
  CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), domain_error);
  CHECK_THROWS_AS(Interval(1.0) / Interval(0.0, 1.0), domain_error);
  CHECK_NOTHROW(Interval(1.0) / Interval(0.5, 1.0));
}

TEST_CASE("exp and log enclose the oracle with small widths") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(rng);
    const Interval ex = exp(Interval(x));
    const Mp mx = testsupport::mp_exp(Mp(x));
    CHECK(mp_in(mx, ex));
    CHECK(ex.width() <= 8.0 * std::ldexp(std::fabs(ex.hi), -52) + 1e-300);
    if (x > 0.001) {
      const Interval lx = log(Interval(x));
      CHECK(mp_in(testsupport::mp_log(Mp(x)), lx));
    }
  }
  CHECK_THROWS_AS(log(Interval(-1.0, 1.0)), domain_error);
  CHECK_THROWS_AS(log(Interval(0.0, 1.0)), domain_error);
  CHECK(exp(Interval(1000.0)).hi == std::numeric_limits<double>::infinity());
  CHECK(exp(Interval(-1000.0)).lo >= 0.0);
}

TEST_CASE("sqr and pow_int handle sign-straddling bases") {
  Interval s = sqr(Interval(-2.0, 3.0));
  CHECK(s.lo == 0.0);
  CHECK(s.hi >= 9.0);
  CHECK(s.hi < 9.0001);

  Interval p4 = pow_int(Interval(-2.0, 3.0), 4);
  CHECK(p4.lo == 0.0);
  CHECK(p4.hi >= 81.0);
  CHECK(p4.hi < 81.001);

  Interval p3 = pow_int(Interval(-2.0, 3.0), 3);
  CHECK(p3.lo <= -8.0);
  CHECK(p3.hi >= 27.0);

  CHECK(pow_int(Interval(5.0), 0).is_point());
  CHECK(pow_int(Interval(5.0), 0).lo == 1.0);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    for (int k : {2, 3, 5, 6, 8}) {
      Mp m(1.0);
      for (int j = 0; j < k; ++j) m = m * Mp(x);
      CHECK(mp_in(m, pow_int(Interval(x), k)));
    }
  }
}

TEST_CASE("double-double core operations are accurate to ~2^-100") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    dd a(dist(rng), 0.0), b(dist(rng), 0.0);
    ddops::two_sum(a.hi, dist(rng) * 1e-17, a.hi, a.lo);
    ddops::two_sum(b.hi, dist(rng) * 1e-17, b.hi, b.lo);
    const Mp ma = mp_from_dd(a), mb = mp_from_dd(b);

    auto rel_err = [](const Mp& got, const Mp& want) {
      Mp d = got - want;
      if (d.sign() < 0) d = -d;
      Mp w = want;
      if (w.sign() < 0) w = -w;
      if (w.sign() == 0) return d.to_double();
      return (d / w).to_double();
    };
    CHECK(rel_err(mp_from_dd(dd_add(a, b)), ma + mb) < 0x1p-99);
    CHECK(rel_err(mp_from_dd(dd_mul(a, b)), ma * mb) < 0x1p-99);
    if (std::fabs(b.hi) > 1e-3)
      CHECK(rel_err(mp_from_dd(dd_div(a, b)), ma / mb) < 0x1p-99);
  }
}

TEST_CASE("dd_exp and dd_log stay within the 2^-90 widening margin") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> dist(-30.0, 30.0);
  for (int i = 0; i < 400; ++i) {
    const double x = dist(rng);
    const dd xd(x, 0.0);
    const Mp want = testsupport::mp_exp(Mp(x));
    const Mp got = mp_from_dd(dd_exp(xd));
    Mp d = got - want;
    if (d.sign() < 0) d = -d;
    CHECK((d / want).to_double() < 0x1p-95);
    if (x > 0.01) {
      const Mp wl = testsupport::mp_log(Mp(x));
      Mp dl = mp_from_dd(dd_log(dd(x, 0.0))) - wl;
      if (dl.sign() < 0) dl = -dl;
      // log near 1 has tiny magnitude; compare absolutely scaled by |x| ulp
      CHECK(dl.to_double() < 0x1p-95 * (std::fabs(wl.to_double()) + 1.0));
    }
  }
}

TEST_CASE("DDInterval ops contain the oracle") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double a = dist(rng), b = dist(rng);
    const DDInterval ia(a), ib(b);
    const Mp ma(a), mb(b);
    CHECK(mp_in_dd(ma + mb, ia + ib));
    CHECK(mp_in_dd(ma * mb, ia * ib));
    CHECK(mp_in_dd(ma / mb, ia / ib));
    CHECK(mp_in_dd(testsupport::mp_exp(Mp(a * 0.1)), exp(DDInterval(a * 0.1))));
    CHECK(mp_in_dd(testsupport::mp_log(ma), log(ia)));
  }
  CHECK_THROWS_AS(log(DDInterval(-1.0)), domain_error);
}

TEST_CASE("MPInterval directed rounding contains the oracle") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> dist(0.1, 40.0);
  for (int i = 0; i < 300; ++i) {
    const double a = dist(rng), b = dist(rng);
    const MPInterval ia(a), ib(b);
    const Mp ma(a), mb(b);
    CHECK(mp_in_mpi(ma + mb, ia + ib));
    CHECK(mp_in_mpi(ma - mb, ia - ib));
    CHECK(mp_in_mpi(ma * mb, ia * ib));
    CHECK(mp_in_mpi(ma / mb, ia / ib));
    CHECK(mp_in_mpi(testsupport::mp_exp(Mp(a * 0.2)), exp(MPInterval(a * 0.2))));
    CHECK(mp_in_mpi(testsupport::mp_log(ma), log(ia)));
  }
  // conversion chain stays outward
  MPInterval m(Interval(1.0, 2.0));
  Interval back = m.to_interval();
  CHECK(back.lo <= 1.0);
  CHECK(back.hi >= 2.0);
}

TEST_CASE("parse_decimal produces exact rationals (base 10, never octal)") {
  CHECK(parse_decimal("0.87") == rat("87/100"));
  CHECK(parse_decimal("0.0052") == rat("13/2500"));
  CHECK(parse_decimal("0.105") == rat("21/200"));
  CHECK(parse_decimal("-67.8615") == rat("-135723/2000"));
  CHECK(parse_decimal("26/5") == rat("26/5"));
  CHECK(parse_decimal("4585") == rat(4585));
  CHECK(parse_decimal("2137.44") == rat("53436/25"));
  CHECK(parse_decimal("38175.947") == rat("38175947/1000"));
  CHECK(parse_decimal("-12.3") == rat("-123/10"));
  CHECK(parse_decimal("0") == rat(0));
}

TEST_CASE("from_rat conversions are outward in every type") {
  const rat third("1/3");
  const Interval i3 = from_rat<Interval>(third);
  CHECK(i3.lo < i3.hi);
  // outward but tight: at most 2 ulp wide around 1/3
  CHECK(i3.hi - i3.lo <= std::ldexp(1.0, -53));
  const Mp m3 = Mp(1.0) / Mp(3.0);
  CHECK(mp_in(m3, i3));
  CHECK(mp_in_dd(m3, from_rat<DDInterval>(third)));
  CHECK(mp_in_mpi(m3, from_rat<MPInterval>(third)));

  // exact dyadics convert to points at double precision
  const Interval half = from_rat<Interval>(rat("1/2"));
  CHECK(half.is_point());
  CHECK(half.lo == 0.5);

  std::mt19937_64 rng(5150);
  for (int i = 0; i < 200; ++i) {
    const long num = static_cast<long>(rng() % 2000000) - 1000000;
    const long den = static_cast<long>(rng() % 999) + 1;
    rat q(num, den);
    q.canonicalize();
    const Mp mq = Mp(static_cast<double>(num)) / Mp(static_cast<double>(den));
    CHECK(mp_in(mq, from_rat<Interval>(q)));
    CHECK(mp_in_dd(mq, from_rat<DDInterval>(q)));
    CHECK(mp_in_mpi(mq, from_rat<MPInterval>(q)));
  }
}

TEST_CASE("dual intervals carry correct derivatives") {
  // d/dx [x^2 exp(x)] = (2x + x^2) exp(x)
  for (double x : {0.5, 1.0, 2.25, 3.5, -1.5}) {
    DualInterval dx = DualInterval::variable(Interval(x));
    DualInterval f = sqr(dx) * exp(dx);
    const Mp want =
        (Mp(2.0) * Mp(x) + Mp(x) * Mp(x)) * testsupport::mp_exp(Mp(x));
    CHECK(mp_in(want, f.d));
    const Mp wantv = Mp(x) * Mp(x) * testsupport::mp_exp(Mp(x));
    CHECK(mp_in(wantv, f.v));
  }
  // d/dx log(x) = 1/x ; chain with division and constants
  for (double x : {0.3, 1.0, 7.0}) {
    DualInterval dx = DualInterval::variable(Interval(x));
    DualInterval f = 3.0 * log(dx) + 1.0 / dx;
    const Mp want = Mp(3.0) / Mp(x) - Mp(1.0) / (Mp(x) * Mp(x));
    CHECK(mp_in(want, f.d));
  }
  // constants have zero derivative
  DualInterval c = DualInterval::constant(Interval(4.0));
  CHECK(c.d.is_point());
  CHECK(c.d.lo == 0.0);
  // pow_int derivative
  DualInterval dx = DualInterval::variable(Interval(2.0));
  DualInterval p = pow_int(dx, 5);
  CHECK(p.d.contains(5.0 * 16.0));
}

TEST_CASE("mpfloat_to_string renders frozen digits") {
  MPInterval third = from_rat<MPInterval>(rat("1/3"));
  const std::string s = mpfloat_to_string(third.lo, 10);
  CHECK(s.find("3333333333") != std::string::npos);
}
