#pragma once
// Point predicates: inequalities in (n, p_n) that support the main estimates.
// Each predicate evaluates to a signed margin that is claimed nonnegative
// (or positive, where strict) from the predicate's threshold onward.
//
// All margins are functions of the exact pair (n, p_n) through the enclosures
// y = log n, w = log log n and z = log p_n.  The H/F families are evaluated
// through the shared function registry; note that their z argument is the
// true log p_n, not the y + w surrogate.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primebounds/bounds.hpp"
#include "primebounds/config.hpp"
#include "primebounds/functions.hpp"
#include "primebounds/interval.hpp"
#include "primebounds/point.hpp"
#include "primebounds/polynomial.hpp"

namespace primebounds {

enum class PredicateId {
  prop_2_4,
  kor_2_5,
  kor_2_6,
  prop_3_3,
  kor_3_4,
  kor_3_5,
  lemma_2_2,
  lemma_2_3,
  lemma_3_1,
  lemma_3_2,
  lemma_5_4,
  h1,
  h2,
  h3,
  h4,
  h5,
  h6,
  h7,
  h8,
  h9,
  h10,
  eq_2_12_upper_z,
  eq_3_7_lower_z,
};

inline constexpr std::array<PredicateId, 23> kAllPredicateIds = {
    PredicateId::prop_2_4,      PredicateId::kor_2_5,
    PredicateId::kor_2_6,       PredicateId::prop_3_3,
    PredicateId::kor_3_4,       PredicateId::kor_3_5,
    PredicateId::lemma_2_2,     PredicateId::lemma_2_3,
    PredicateId::lemma_3_1,     PredicateId::lemma_3_2,
    PredicateId::lemma_5_4,     PredicateId::h1,
    PredicateId::h2,            PredicateId::h3,
    PredicateId::h4,            PredicateId::h5,
    PredicateId::h6,            PredicateId::h7,
    PredicateId::h8,            PredicateId::h9,
    PredicateId::h10,           PredicateId::eq_2_12_upper_z,
    PredicateId::eq_3_7_lower_z,
};

struct PredicateSpec {
  PredicateId id;
  std::string name;   // stable string key, e.g. "kor-2.6"
  bool strict;        // claim is > 0 rather than >= 0
  std::uint64_t claimed_threshold;  // least n for which the claim is made
  std::uint64_t domain_min;         // least n for which the margin is defined
  std::string expr;                 // the claimed inequality, human readable
  std::string provenance;
};

const std::vector<PredicateSpec>& predicate_registry();
const PredicateSpec& predicate_spec(PredicateId id);
const PredicateSpec* predicate_spec_by_name(const std::string& name);
const std::string& predicate_name(PredicateId id);
std::optional<PredicateId> predicate_from_name(const std::string& name);

// JSON dump of the registry (id, strictness, thresholds, expression,
// provenance), mirroring bounds_registry_json.
std::string predicates_registry_json();

// ---------------------------------------------------------------------------
// Margin evaluation, templated over the interval number types
// ---------------------------------------------------------------------------

namespace pdetail {

// Shared recip-log tail P1/(2y^3) - P2/(6y^4) [+ P3/(12y^5) - P4/(20y^6)].
template <class T>
T p_tail(const T& y, const T& w, bool with_p3_p4) {
  const T two = fdetail::C<T>("2"), six = fdetail::C<T>("6");
  T s = eval_poly_t<T>(PolyId::P1, w) / (two * pow_int(y, 3)) -
        eval_poly_t<T>(PolyId::P2, w) / (six * pow_int(y, 4));
  if (with_p3_p4) {
    const T twelve = fdetail::C<T>("12"), twenty = fdetail::C<T>("20");
    s = s + eval_poly_t<T>(PolyId::P3, w) / (twelve * pow_int(y, 5)) -
        eval_poly_t<T>(PolyId::P4, w) / (twenty * pow_int(y, 6));
  }
  return s;
}

// 1/y - w/y^2 + (w^2 - w + 1)/(y^2 z): the core shared by both directions.
template <class T>
T recip_core(const T& y, const T& w, const T& z) {
  const T one = fdetail::C<T>("1");
  return one / y - w / sqr(y) + (sqr(w) - w + one) / (sqr(y) * z);
}

// P9/y^4 [+ P10/y^5 [+ P11/y^6]] used by the upper recip-log family.
template <class T>
T p9_tail(const T& y, const T& w, int terms) {
  T s = eval_poly_t<T>(PolyId::P9, w) / pow_int(y, 4);
  if (terms >= 2) s = s + eval_poly_t<T>(PolyId::P10, w) / pow_int(y, 5);
  if (terms >= 3) s = s + eval_poly_t<T>(PolyId::P11, w) / pow_int(y, 6);
  return s;
}

}  // namespace pdetail

// Margin of a predicate given ready-made enclosures of n, p_n, w, y, z.
// Positive margin means the inequality holds.
template <class T>
T predicate_margin_wyz(PredicateId id, const T& nv, const T& pv, const T& w,
                       const T& y, const T& z) {
  using namespace pdetail;
  const T one = fdetail::C<T>("1");
  const T two = fdetail::C<T>("2");
  switch (id) {
    case PredicateId::prop_2_4:
      return one / z - recip_core(y, w, z) - p_tail(y, w, true) / z;
    case PredicateId::kor_2_5:
      return one / z - recip_core(y, w, z) - p_tail(y, w, false) / z;
    case PredicateId::kor_2_6:
      return one / z - recip_core(y, w, z);
    case PredicateId::prop_3_3:
      return recip_core(y, w, z) +
             eval_poly_t<T>(PolyId::P8, w) / (two * pow_int(y, 3) * z) -
             p9_tail(y, w, 3) / (two * z) - one / z;
    case PredicateId::kor_3_4:
      return recip_core(y, w, z) +
             eval_poly_t<T>(PolyId::P8, w) / (two * pow_int(y, 3) * z) -
             p9_tail(y, w, 2) / (two * z) - one / z;
    case PredicateId::kor_3_5:
      return recip_core(y, w, z) +
             eval_poly_t<T>(PolyId::P8, w) / (two * pow_int(y, 3) * z) -
             p9_tail(y, w, 1) / (two * z) - one / z;
    case PredicateId::lemma_2_2:
      return fn_F0(w, y, z);
    case PredicateId::lemma_2_3:
      return fn_F1(w, y, z);
    case PredicateId::lemma_3_1: {
      const T c1285 = fdetail::C<T>("12.85"), c315 = fdetail::C<T>("3.15");
      return (c1285 * eval_poly_t<T>(PolyId::P9, w) +
              c315 * eval_poly_t<T>(PolyId::P10, w) +
              eval_poly_t<T>(PolyId::P11, w)) /
             (two * pow_int(y, 6) * z);
    }
    case PredicateId::lemma_3_2: {
      const T c1285 = fdetail::C<T>("12.85"), c315 = fdetail::C<T>("3.15");
      const T four = fdetail::C<T>("4");
      const T p9 = eval_poly_t<T>(PolyId::P9, w);
      const T p10 = eval_poly_t<T>(PolyId::P10, w);
      const T p11 = eval_poly_t<T>(PolyId::P11, w);
      const T p12 = eval_poly_t<T>(PolyId::P12, w);
      return p9 * p12 / (four * pow_int(y, 7) * z) +
             c1285 * p10 / (two * pow_int(y, 7) * z) +
             c315 * p11 / (two * pow_int(y, 7) * z) +
             c315 * p11 / (two * pow_int(y, 6) * sqr(z)) -
             pow_int(w - two, 4) / (four * pow_int(y, 8));
    }
    case PredicateId::lemma_5_4: {
      // Phi(log log n) <= log p_n.  With e^z = p, e^y = n and e^w = y the
      // claim is equivalent to p/(n y) >= 1 + (w-1)/y + (w-2.1)/y^2.
      const T c21 = fdetail::C<T>("2.1");
      return pv / (nv * y) - (one + (w - one) / y + (w - c21) / sqr(y));
    }
    case PredicateId::h1: return fn_H1(w, y, z);
    case PredicateId::h2: return fn_H2(w, y, z);
    case PredicateId::h3: return fn_H3(w, y, z);
    case PredicateId::h4: return fn_H4(w, y, z);
    case PredicateId::h5: return fn_H5(w, y, z);
    case PredicateId::h6: return fn_H6(w, y, z);
    case PredicateId::h7: return fn_H7(w, y, z);
    case PredicateId::h8: return fn_H8(w, y, z);
    case PredicateId::h9: return fn_H9(w, y, z);
    case PredicateId::h10: return fn_H10(w, y, z);
    default:
      throw argument_error("predicate_margin_wyz: z-form bounds need (n, p)");
  }
}

// Margin recomputed from the exact pair (n, p); used on escalated tiers.
template <class T>
T predicate_margin_t(PredicateId id, std::uint64_t n, std::uint64_t p) {
  const PredicateSpec& s = predicate_spec(id);
  if (n < s.domain_min)
    throw argument_error("predicate " + s.name + " needs n >= " +
                         std::to_string(s.domain_min));
  if (p < 2) throw argument_error("predicate_margin_t needs p >= 2");
  if (id == PredicateId::eq_2_12_upper_z)
    return bound_rhs_z<T>(BoundId::eq_2_12_upper_z, n, p) -
           from_rat<T>(rat(static_cast<unsigned long>(p)));
  if (id == PredicateId::eq_3_7_lower_z)
    return from_rat<T>(rat(static_cast<unsigned long>(p))) -
           bound_rhs_z<T>(BoundId::eq_3_7_lower_z, n, p);
  const T nv = from_rat<T>(rat(static_cast<unsigned long>(n)));
  const T pv = from_rat<T>(rat(static_cast<unsigned long>(p)));
  const T y = log(nv);
  const T w = log(y);
  const T z = log(pv);
  return predicate_margin_wyz(id, nv, pv, w, y, z);
}

// Double-precision margin using the enclosures already carried by the point.
Interval predicate_margin(PredicateId id, const PrimePoint& pt);

// Margin recomputed from the exact pair on a higher tier: 1 = double-double,
// 2 = MPFR.
Interval predicate_margin_escalated(PredicateId id, const PrimePoint& pt,
                                    int tier);

// Verdict plus margin, escalating indeterminate outcomes like check_bound.
CheckOutcome check_predicate(PredicateId id, const PrimePoint& pt,
                             PrecisionMode mode = PrecisionMode::escalating);
CheckOutcome check_predicate(const std::string& name, const PrimePoint& pt,
                             PrecisionMode mode = PrecisionMode::escalating);

}  // namespace primebounds
