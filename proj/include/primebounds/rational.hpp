#pragma once
// Exact rational support (GMP mpq_class): decimal-literal parsing so
// coefficients written as "5.2" or "-67.8615" are stored exactly (26/5,
// -135723/2000), plus outward conversions from rationals into each interval
// number type. Conversions run once at registry construction, never in hot
// loops.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "primebounds/double_double.hpp"
#include "primebounds/interval.hpp"
#include "primebounds/mpfloat.hpp"

namespace primebounds {

using rat = mpq_class;

// "−12.3", "4585", "26/5" → exact rational. Base 10 is forced everywhere:
// with GMP's default base 0, a leading zero ("0.87" → digits "087") would be
// read as octal.
inline rat parse_decimal(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    rat q(s, 10);
    q.canonicalize();
    return q;
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    rat q(s, 10);
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac_len = s.size() - dot - 1;
  std::string den = "1";
  den.append(frac_len, '0');
  rat q(digits + "/" + den, 10);
  q.canonicalize();
  return q;
}

inline rat operator""_q(const char* s, std::size_t) { return parse_decimal(s); }

// --- outward conversions ---------------------------------------------------

template <class T>
T from_rat(const rat& q);

template <>
inline Interval from_rat<Interval>(const rat& q) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDD);
  const double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  const double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return Interval(lo, hi);
}

template <>
inline DDInterval from_rat<DDInterval>(const rat& q) {
  // two-term decomposition: d1 = round(q), d2 = round(q - d1); the residual
  // is below 2^-105 |q|, covered by a 2^-98 outward widening
  const double d1 = mpq_get_d(q.get_mpq_t());
  rat r = q - rat(d1);
  const double d2 = mpq_get_d(r.get_mpq_t());
  const dd v(d1, d2);
  return widen_dd(v, v, 0x1p-98);
}

template <>
inline MPInterval from_rat<MPInterval>(const rat& q) {
  MPInterval r(kEscalationPrec);
  mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

// double: round-to-nearest collapse (for reporting only, never for verdicts)
template <>
inline double from_rat<double>(const rat& q) {
  return mpq_get_d(q.get_mpq_t());
}

}  // namespace primebounds
