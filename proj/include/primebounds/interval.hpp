#pragma once
// Directed-rounded interval arithmetic on double, without touching the FPU
// rounding mode: operations run in round-to-nearest and endpoints are widened
// outward by one ulp afterwards (bit-level next_up/next_down). Transcendentals
// (exp/log) are widened by 2 ulp to cover libm's faithful-rounding slack.
// Thread-safe by construction; an Interval is the only carrier of inexact
// arithmetic in this library.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace primebounds {

namespace detail {

inline double next_up(double x) {
  if (std::isnan(x)) return x;
  if (x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  bits = (x > 0.0) ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) {
  if (std::isnan(x)) return x;
  if (x == -std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  bits = (x > 0.0) ? bits - 1 : bits + 1;
  return std::bit_cast<double>(bits);
}

// n outward steps.
inline double steps_up(double x, int n) {
  for (int i = 0; i < n; ++i) x = next_up(x);
  return x;
}
inline double steps_down(double x, int n) {
  for (int i = 0; i < n; ++i) x = next_down(x);
  return x;
}

}  // namespace detail

class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

struct Interval {
  double lo;
  double hi;

  constexpr Interval() : lo(0.0), hi(0.0) {}
  constexpr Interval(double v) : lo(v), hi(v) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  static Interval exact(double v) { return Interval(v, v); }
  static Interval invalid() {
    return Interval(std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN());
  }

  bool valid() const { return !(std::isnan(lo) || std::isnan(hi)) && lo <= hi; }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  bool is_point() const { return lo == hi; }

  // Certain comparisons (false means "not certainly", not "certainly not").
  bool certainly_lt(double v) const { return hi < v; }
  bool certainly_gt(double v) const { return lo > v; }
  bool certainly_le(double v) const { return hi <= v; }
  bool certainly_ge(double v) const { return lo >= v; }
  bool certainly_lt(const Interval& o) const { return hi < o.lo; }
  bool certainly_gt(const Interval& o) const { return lo > o.hi; }
};

inline Interval widen1(double lo, double hi) {
  return Interval(detail::next_down(lo), detail::next_up(hi));
}

inline Interval operator+(const Interval& a, const Interval& b) {
  return widen1(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return widen1(a.lo - b.hi, a.hi - b.lo);
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
               p4 = a.hi * b.hi;
  const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return widen1(lo, hi);
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && 0.0 <= b.hi)
    throw domain_error("interval division by enclosure containing zero");
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo,
               q4 = a.hi / b.hi;
  const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
  const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
  return widen1(lo, hi);
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval sqr(const Interval& a) {
  Interval r = (a.lo >= 0.0)
                   ? widen1(a.lo * a.lo, a.hi * a.hi)
                   : (a.hi <= 0.0)
                         ? widen1(a.hi * a.hi, a.lo * a.lo)
                         : widen1(0.0, std::max(a.lo * a.lo, a.hi * a.hi));
  if (r.lo < 0.0) r.lo = 0.0;  // squares are nonnegative and zero is exact
  return r;
}

// Integer power, k >= 0.
inline Interval pow_int(const Interval& a, int k) {
  if (k == 0) return Interval(1.0);
  if (k == 1) return a;
  Interval acc(1.0);
  Interval base = a;
  int e = k;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      acc = first ? base : acc * base;
      first = false;
    }
    e >>= 1;
    if (e) base = (base.lo >= 0.0 || base.hi <= 0.0) ? sqr(base) : base * base;
  }
  // even powers of sign-straddling intervals tighten through sqr at the root
  if (k % 2 == 0 && a.lo < 0.0 && a.hi > 0.0) {
    Interval s = sqr(a);
    Interval t = pow_int(s, k / 2);
    if (t.lo > acc.lo || t.hi < acc.hi)
      acc = Interval(std::max(acc.lo, t.lo), std::min(acc.hi, t.hi));
  }
  return acc;
}

// exp with 2-ulp outward widening (libm exp is faithful to <= 1 ulp here).
inline Interval exp(const Interval& a) {
  double lo = std::exp(a.lo);
  double hi = std::exp(a.hi);
  lo = detail::steps_down(lo, 2);
  if (lo < 0.0) lo = 0.0;
  if (std::isinf(hi))
    hi = std::numeric_limits<double>::infinity();
  else
    hi = detail::steps_up(hi, 2);
  return Interval(lo, hi);
}

// log with 2-ulp outward widening; domain requires lo > 0.
inline Interval log(const Interval& a) {
  if (a.lo <= 0.0)
    throw domain_error("interval log of enclosure touching (-inf, 0]");
  double lo = std::log(a.lo);
  double hi = std::log(a.hi);
  return Interval(detail::steps_down(lo, 2), detail::steps_up(hi, 2));
}

inline Interval sqrt(const Interval& a) {
  if (a.lo < 0.0) throw domain_error("interval sqrt of negative enclosure");
  return widen1(std::sqrt(a.lo), std::sqrt(a.hi));
}

inline Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
  return Interval(0.0, a.mag());
}

}  // namespace primebounds
