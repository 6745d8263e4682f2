#pragma once
// Thin RAII wrapper over MPFR plus a directed-rounding interval type at 333
// bits (~100 decimal digits). This is the top rung of the precision
// escalation ladder and the basis for the high-precision oracle used in
// tests. Slow and allocation-heavy by design — it only runs on escalated
// points, random oracle samples, and identity checks.

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "primebounds/interval.hpp"

namespace primebounds {

inline constexpr mpfr_prec_t kEscalationPrec = 333;

class MPFloat {
 public:
  explicit MPFloat(mpfr_prec_t prec = kEscalationPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MPFloat(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  MPFloat(const MPFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MPFloat(MPFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  MPFloat& operator=(const MPFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  MPFloat& operator=(MPFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~MPFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double(mpfr_rnd_t r = MPFR_RNDN) const { return mpfr_get_d(v_, r); }
  int sign() const { return mpfr_sgn(v_); }
  bool operator<(const MPFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator<=(const MPFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }

 private:
  mpfr_t v_;
};

struct MPInterval {
  MPFloat lo;
  MPFloat hi;

  explicit MPInterval(mpfr_prec_t prec = kEscalationPrec) : lo(prec), hi(prec) {}
  MPInterval(double v, mpfr_prec_t prec = kEscalationPrec) : lo(v, prec), hi(v, prec) {}
  explicit MPInterval(const Interval& iv, mpfr_prec_t prec = kEscalationPrec)
      : lo(iv.lo, prec), hi(iv.hi, prec) {}

  mpfr_prec_t prec() const { return mpfr_get_prec(lo.get()); }

  static MPInterval from_rational(std::int64_t num, std::int64_t den,
                                  mpfr_prec_t prec = kEscalationPrec) {
    MPInterval r(prec);
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q, q, d);
    mpfr_set_q(r.lo.get(), q, MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q, MPFR_RNDU);
    mpq_clear(q);
    mpq_clear(d);
    return r;
  }

  Interval to_interval() const {
    return Interval(lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU));
  }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool certainly_gt(double v) const { return mpfr_cmp_d(lo.get(), v) > 0; }
  bool certainly_lt(double v) const { return mpfr_cmp_d(hi.get(), v) < 0; }
};

namespace mpdetail {

using binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

inline MPInterval directed_4(const MPInterval& a, const MPInterval& b, binop op) {
  const mpfr_prec_t p = a.prec();
  MPInterval r(p);
  MPFloat t(p);
  mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
  mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
  bool first = true;
  for (auto* x : as)
    for (auto* y : bs) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

}  // namespace mpdetail

inline MPInterval operator+(const MPInterval& a, const MPInterval& b) {
  MPInterval r(a.prec());
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}
inline MPInterval operator-(const MPInterval& a, const MPInterval& b) {
  MPInterval r(a.prec());
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}
inline MPInterval operator-(const MPInterval& a) {
  MPInterval r(a.prec());
  mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
  mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
  return r;
}
inline MPInterval operator*(const MPInterval& a, const MPInterval& b) {
  return mpdetail::directed_4(a, b, mpfr_mul);
}
inline MPInterval operator/(const MPInterval& a, const MPInterval& b) {
  if (b.contains_zero())
    throw domain_error("MPInterval division by enclosure containing zero");
  return mpdetail::directed_4(a, b, mpfr_div);
}

inline MPInterval operator+(const MPInterval& a, double b) { return a + MPInterval(b, a.prec()); }
inline MPInterval operator+(double a, const MPInterval& b) { return MPInterval(a, b.prec()) + b; }
inline MPInterval operator-(const MPInterval& a, double b) { return a - MPInterval(b, a.prec()); }
inline MPInterval operator-(double a, const MPInterval& b) { return MPInterval(a, b.prec()) - b; }
inline MPInterval operator*(const MPInterval& a, double b) { return a * MPInterval(b, a.prec()); }
inline MPInterval operator*(double a, const MPInterval& b) { return MPInterval(a, b.prec()) * b; }
inline MPInterval operator/(const MPInterval& a, double b) { return a / MPInterval(b, a.prec()); }
inline MPInterval operator/(double a, const MPInterval& b) { return MPInterval(a, b.prec()) / b; }

inline MPInterval sqr(const MPInterval& a) {
  const mpfr_prec_t p = a.prec();
  MPInterval r(p);
  if (a.lo.sign() >= 0) {
    mpfr_sqr(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqr(r.hi.get(), a.hi.get(), MPFR_RNDU);
  } else if (a.hi.sign() <= 0) {
    mpfr_sqr(r.lo.get(), a.hi.get(), MPFR_RNDD);
    mpfr_sqr(r.hi.get(), a.lo.get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo.get(), 1);
    MPFloat m1(p), m2(p);
    mpfr_sqr(m1.get(), a.lo.get(), MPFR_RNDU);
    mpfr_sqr(m2.get(), a.hi.get(), MPFR_RNDU);
    mpfr_set(r.hi.get(), mpfr_cmp(m1.get(), m2.get()) >= 0 ? m1.get() : m2.get(), MPFR_RNDU);
  }
  return r;
}

inline MPInterval pow_int(const MPInterval& a, int k) {
  if (k == 0) return MPInterval(1.0, a.prec());
  if (k == 1) return a;
  if (k % 2 == 0 && a.lo.sign() < 0 && a.hi.sign() > 0) return pow_int(sqr(a), k / 2);
  MPInterval acc(1.0, a.prec());
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

inline MPInterval exp(const MPInterval& a) {
  MPInterval r(a.prec());
  mpfr_exp(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_exp(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}

inline MPInterval log(const MPInterval& a) {
  if (a.lo.sign() <= 0)
    throw domain_error("MPInterval log of enclosure touching (-inf, 0]");
  MPInterval r(a.prec());
  mpfr_log(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_log(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}

// 50-significant-digit decimal rendering of a point value (oracle freezing).
inline std::string mpfloat_to_string(const MPFloat& x, int digits = 50) {
  char* s = nullptr;
  mp_exp_t e;
  s = mpfr_get_str(nullptr, &e, 10, digits, x.get(), MPFR_RNDN);
  std::string out = s ? s : "";
  mpfr_free_str(s);
  std::string sign;
  if (!out.empty() && out[0] == '-') {
    sign = "-";
    out = out.substr(1);
  }
  if (out.empty()) return "0";
  return sign + "0." + out + "e" + std::to_string(e);
}

}  // namespace primebounds
