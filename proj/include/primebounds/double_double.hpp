#pragma once
// Double-double ("dd") arithmetic: an unevaluated sum hi + lo carrying ~106
// bits of precision. Two layers live here:
//   * raw dd — round-to-nearest, used by the theta accumulator (its error is
//     tracked externally by an explicit budget);
//   * DDInterval — dd endpoints widened outward after every operation, used
//     as the first escalation stage when double intervals go indeterminate.
// Algorithms are the classic error-free transformations (two_sum, fma-based
// two_prod) plus argument-reduction exp and Newton log; error constants are
// conservative and property-tested against a 333-bit oracle in the test
// suite.

#include <cmath>
#include <limits>

#include "primebounds/interval.hpp"

namespace primebounds {

struct dd {
  double hi;
  double lo;

  constexpr dd() : hi(0.0), lo(0.0) {}
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
  bool operator<(const dd& o) const {
    return hi < o.hi || (hi == o.hi && lo < o.lo);
  }
  bool operator>(const dd& o) const { return o < *this; }
  bool operator==(const dd& o) const { return hi == o.hi && lo == o.lo; }
};

namespace ddops {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace ddops

inline dd dd_add(const dd& a, const dd& b) {
  double s1, s2, t1, t2;
  ddops::two_sum(a.hi, b.hi, s1, s2);
  ddops::two_sum(a.lo, b.lo, t1, t2);
  s2 += t1;
  ddops::quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  ddops::quick_two_sum(s1, s2, s1, s2);
  return dd(s1, s2);
}

inline dd dd_add(const dd& a, double b) {
  double s1, s2;
  ddops::two_sum(a.hi, b, s1, s2);
  s2 += a.lo;
  ddops::quick_two_sum(s1, s2, s1, s2);
  return dd(s1, s2);
}

inline dd dd_neg(const dd& a) { return dd(-a.hi, -a.lo); }

inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(const dd& a, const dd& b) {
  double p1, p2;
  ddops::two_prod(a.hi, b.hi, p1, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  ddops::quick_two_sum(p1, p2, p1, p2);
  return dd(p1, p2);
}

inline dd dd_mul(const dd& a, double b) {
  double p1, p2;
  ddops::two_prod(a.hi, b, p1, p2);
  p2 += a.lo * b;
  ddops::quick_two_sum(p1, p2, p1, p2);
  return dd(p1, p2);
}

inline dd dd_div(const dd& a, const dd& b) {
  const double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  const double q3 = r.hi / b.hi;
  double s, e;
  ddops::quick_two_sum(q1, q2, s, e);
  dd q(s, e);
  return dd_add(q, q3);
}

inline dd dd_ldexp(const dd& a, int k) {
  return dd(std::ldexp(a.hi, k), std::ldexp(a.lo, k));
}

// exp with ~2^-100 relative accuracy: reduce by ln2 then by 512, Taylor,
// square back up.
inline dd dd_exp(const dd& a) {
  if (a.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
  if (a.hi < -745.0) return dd(0.0);
  static const dd ln2(6.931471805599452862e-01, 2.319046813846299558e-17);
  const double k = std::nearbyint(a.hi / ln2.hi);
  dd r = dd_sub(a, dd_mul(ln2, k));
  r = dd_ldexp(r, -9);  // /512
  // s = exp(r) - 1 by Taylor; |r| <= ~7e-4 so degree 12 is far past 2^-110
  dd s = r;
  dd term = r;
  double fact = 1.0;
  for (int i = 2; i <= 12; ++i) {
    term = dd_mul(term, r);
    fact *= static_cast<double>(i);
    s = dd_add(s, dd_div(term, dd(fact)));
  }
  // (1+s)^2 - 1 = 2s + s^2, nine times
  for (int i = 0; i < 9; ++i) s = dd_add(dd_ldexp(s, 1), dd_mul(s, s));
  dd result = dd_add(s, 1.0);
  return dd_ldexp(result, static_cast<int>(k));
}

// log via two Newton corrections on top of libm log.
inline dd dd_log(const dd& a) {
  if (!(a.hi > 0.0))
    throw domain_error("dd_log of non-positive value");
  dd x(std::log(a.hi));
  for (int i = 0; i < 2; ++i) {
    const dd e = dd_exp(dd_neg(x));
    x = dd_add(x, dd_add(dd_mul(a, e), -1.0));
  }
  return x;
}

inline dd dd_sqr(const dd& a) { return dd_mul(a, a); }

// ---------------------------------------------------------------------------
// DDInterval: directed interval with dd endpoints.

namespace ddops {

// Outward widening after a round-to-nearest dd op. Relative slack 2^-98
// dominates the accurate-variant error bounds (<= ~16u^2 = 2^-102); the
// absolute floor covers underflow.
inline dd dd_next_up(const dd& x, double rel_pow2 = 0x1p-98) {
  const double slack = std::fabs(x.hi) * rel_pow2 + 0x1p-1000;
  return dd_add(x, slack);
}
inline dd dd_next_down(const dd& x, double rel_pow2 = 0x1p-98) {
  const double slack = std::fabs(x.hi) * rel_pow2 + 0x1p-1000;
  return dd_add(x, -slack);
}

}  // namespace ddops

struct DDInterval {
  dd lo;
  dd hi;

  DDInterval() : lo(), hi() {}
  DDInterval(double v) : lo(v), hi(v) {}
  DDInterval(const dd& l, const dd& h) : lo(l), hi(h) {}
  explicit DDInterval(const Interval& iv) : lo(iv.lo), hi(iv.hi) {}

  Interval to_interval() const {
    return Interval(detail::next_down(lo.hi + lo.lo),
                    detail::next_up(hi.hi + hi.lo));
  }
  bool contains_zero() const {
    return !(lo > dd(0.0)) && !(hi < dd(0.0));
  }
};

inline DDInterval widen_dd(const dd& lo, const dd& hi, double rel = 0x1p-98) {
  return DDInterval(ddops::dd_next_down(lo, rel), ddops::dd_next_up(hi, rel));
}

inline DDInterval operator+(const DDInterval& a, const DDInterval& b) {
  return widen_dd(dd_add(a.lo, b.lo), dd_add(a.hi, b.hi));
}
inline DDInterval operator-(const DDInterval& a, const DDInterval& b) {
  return widen_dd(dd_sub(a.lo, b.hi), dd_sub(a.hi, b.lo));
}
inline DDInterval operator-(const DDInterval& a) {
  return DDInterval(dd_neg(a.hi), dd_neg(a.lo));
}

inline DDInterval operator*(const DDInterval& a, const DDInterval& b) {
  const dd p1 = dd_mul(a.lo, b.lo), p2 = dd_mul(a.lo, b.hi),
           p3 = dd_mul(a.hi, b.lo), p4 = dd_mul(a.hi, b.hi);
  dd lo = p1, hi = p1;
  for (const dd& p : {p2, p3, p4}) {
    if (p < lo) lo = p;
    if (hi < p) hi = p;
  }
  return widen_dd(lo, hi);
}

inline DDInterval operator/(const DDInterval& a, const DDInterval& b) {
  if (b.contains_zero())
    throw domain_error("DDInterval division by enclosure containing zero");
  const dd q1 = dd_div(a.lo, b.lo), q2 = dd_div(a.lo, b.hi),
           q3 = dd_div(a.hi, b.lo), q4 = dd_div(a.hi, b.hi);
  dd lo = q1, hi = q1;
  for (const dd& q : {q2, q3, q4}) {
    if (q < lo) lo = q;
    if (hi < q) hi = q;
  }
  return widen_dd(lo, hi);
}

inline DDInterval operator+(const DDInterval& a, double b) { return a + DDInterval(b); }
inline DDInterval operator+(double a, const DDInterval& b) { return DDInterval(a) + b; }
inline DDInterval operator-(const DDInterval& a, double b) { return a - DDInterval(b); }
inline DDInterval operator-(double a, const DDInterval& b) { return DDInterval(a) - b; }
inline DDInterval operator*(const DDInterval& a, double b) { return a * DDInterval(b); }
inline DDInterval operator*(double a, const DDInterval& b) { return DDInterval(a) * b; }
inline DDInterval operator/(const DDInterval& a, double b) { return a / DDInterval(b); }
inline DDInterval operator/(double a, const DDInterval& b) { return DDInterval(a) / b; }

inline DDInterval sqr(const DDInterval& a) {
  if (!(a.lo < dd(0.0))) return widen_dd(dd_sqr(a.lo), dd_sqr(a.hi));
  if (!(dd(0.0) < a.hi)) return widen_dd(dd_sqr(a.hi), dd_sqr(a.lo));
  const dd m1 = dd_sqr(a.lo), m2 = dd_sqr(a.hi);
  return widen_dd(dd(0.0), m1 < m2 ? m2 : m1);
}

inline DDInterval pow_int(const DDInterval& a, int k) {
  if (k == 0) return DDInterval(1.0);
  if (k == 1) return a;
  if (k % 2 == 0 && a.lo < dd(0.0) && dd(0.0) < a.hi)
    return pow_int(sqr(a), k / 2);
  DDInterval acc(1.0);
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

// exp/log on DDInterval: round-to-nearest dd transcendental per endpoint,
// widened by 2^-90 relative (dd_exp/dd_log are accurate to ~2^-100; the
// margin is validated by oracle containment tests).
inline DDInterval exp(const DDInterval& a) {
  return widen_dd(dd_exp(a.lo), dd_exp(a.hi), 0x1p-90);
}

inline DDInterval log(const DDInterval& a) {
  if (!(a.lo > dd(0.0)))
    throw domain_error("DDInterval log of enclosure touching (-inf, 0]");
  return widen_dd(dd_log(a.lo), dd_log(a.hi), 0x1p-90);
}

}  // namespace primebounds
