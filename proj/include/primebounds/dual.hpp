#pragma once
// Forward-mode differentiation over intervals: a DualInterval carries an
// enclosure of a function value together with an enclosure of its derivative
// along one seed direction. Feeding DualInterval through the templated
// evaluators yields rigorous derivative ranges with no extra code, which is
// what the centered-form tail scans need (the plain interval extension of the
// tail functions is far too loose on wide cells; the mean-value form
// f(m) + f'(X)(X - m) converges).

#include "primebounds/interval.hpp"
#include "primebounds/rational.hpp"

namespace primebounds {

struct DualInterval {
  Interval v;  // value
  Interval d;  // derivative w.r.t. the seeded variable

  DualInterval() : v(0.0), d(0.0) {}
  explicit DualInterval(const Interval& val) : v(val), d(0.0) {}
  DualInterval(const Interval& val, const Interval& der) : v(val), d(der) {}

  // seed: d/dx x = 1
  static DualInterval variable(const Interval& x) {
    return DualInterval(x, Interval(1.0));
  }
  static DualInterval constant(const Interval& x) { return DualInterval(x); }
};

inline DualInterval operator+(const DualInterval& a, const DualInterval& b) {
  return DualInterval(a.v + b.v, a.d + b.d);
}
inline DualInterval operator-(const DualInterval& a, const DualInterval& b) {
  return DualInterval(a.v - b.v, a.d - b.d);
}
inline DualInterval operator-(const DualInterval& a) {
  return DualInterval(-a.v, -a.d);
}
inline DualInterval operator*(const DualInterval& a, const DualInterval& b) {
  return DualInterval(a.v * b.v, a.d * b.v + a.v * b.d);
}
inline DualInterval operator/(const DualInterval& a, const DualInterval& b) {
  const Interval q = a.v / b.v;
  return DualInterval(q, (a.d - q * b.d) / b.v);
}

inline DualInterval operator+(const DualInterval& a, double b) {
  return DualInterval(a.v + b, a.d);
}
inline DualInterval operator+(double a, const DualInterval& b) {
  return DualInterval(a + b.v, b.d);
}
inline DualInterval operator-(const DualInterval& a, double b) {
  return DualInterval(a.v - b, a.d);
}
inline DualInterval operator-(double a, const DualInterval& b) {
  return DualInterval(a - b.v, -b.d);
}
inline DualInterval operator*(const DualInterval& a, double b) {
  return DualInterval(a.v * b, a.d * b);
}
inline DualInterval operator*(double a, const DualInterval& b) {
  return DualInterval(a * b.v, a * b.d);
}
inline DualInterval operator/(const DualInterval& a, double b) {
  return DualInterval(a.v / b, a.d / b);
}
inline DualInterval operator/(double a, const DualInterval& b) {
  const Interval q = a / b.v;
  return DualInterval(q, -(q * b.d) / b.v);
}

inline DualInterval sqr(const DualInterval& a) {
  return DualInterval(sqr(a.v), 2.0 * (a.v * a.d));
}

inline DualInterval pow_int(const DualInterval& a, int k) {
  if (k == 0) return DualInterval(Interval(1.0));
  if (k == 1) return a;
  return DualInterval(pow_int(a.v, k),
                      static_cast<double>(k) * pow_int(a.v, k - 1) * a.d);
}

inline DualInterval exp(const DualInterval& a) {
  const Interval e = exp(a.v);
  return DualInterval(e, e * a.d);
}

inline DualInterval log(const DualInterval& a) {
  return DualInterval(log(a.v), a.d / a.v);
}

inline DualInterval sqrt(const DualInterval& a) {
  const Interval s = sqrt(a.v);
  return DualInterval(s, a.d / (2.0 * s));
}

template <>
inline DualInterval from_rat<DualInterval>(const rat& q) {
  return DualInterval(from_rat<Interval>(q));
}

}  // namespace primebounds
