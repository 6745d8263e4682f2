#pragma once
// Catalog of explicit bounds for the n-th prime p_n and for the Chebyshev
// partial sum theta(p_n) = sum_{k <= n} log p_k.
//
// Each catalog entry records which quantity it bounds, from which side, with
// which strictness, the validity threshold claimed for it, and a
// human-readable right-hand side.  Right-hand sides are evaluated with
// outward-rounded arithmetic at any index n; two entries are phrased in
// z = log p_n and take the pair (n, p_n) instead of n alone.
//
// check_bound compares an entry against a PrimePoint and returns a verdict
// plus a signed margin enclosure; an indeterminate double-precision margin is
// optionally re-evaluated in double-double and then MPFR arithmetic.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primebounds/config.hpp"
#include "primebounds/double_double.hpp"
#include "primebounds/functions.hpp"
#include "primebounds/interval.hpp"
#include "primebounds/mpfloat.hpp"
#include "primebounds/point.hpp"

namespace primebounds {

enum class BoundId {
  rosser_lower,
  eq_1_4_upper,
  eq_1_5_lower,
  eq_1_6_upper,
  rosser_schoenfeld_lower,
  eq_1_7_upper,
  eq_1_8_lower,
  massias_robin_lower,
  eq_1_9_upper,
  eq_1_10_upper,
  eq_1_11_lower,
  thm_1_1_upper,
  thm_1_2_lower,
  corollary_unconditional_1_12,
  kor_after_thm_1_2_lower,
  remark_3_16_lower,
  theta_lower_11_808,
  theta_upper_10_367,
  theta_dusart_lower_2_04,
  theta_dusart_upper_0_782,
  eq_2_12_upper_z,
  eq_3_7_lower_z,
};

inline constexpr std::array<BoundId, 22> kAllBoundIds = {
    BoundId::rosser_lower,
    BoundId::eq_1_4_upper,
    BoundId::eq_1_5_lower,
    BoundId::eq_1_6_upper,
    BoundId::rosser_schoenfeld_lower,
    BoundId::eq_1_7_upper,
    BoundId::eq_1_8_lower,
    BoundId::massias_robin_lower,
    BoundId::eq_1_9_upper,
    BoundId::eq_1_10_upper,
    BoundId::eq_1_11_lower,
    BoundId::thm_1_1_upper,
    BoundId::thm_1_2_lower,
    BoundId::corollary_unconditional_1_12,
    BoundId::kor_after_thm_1_2_lower,
    BoundId::remark_3_16_lower,
    BoundId::theta_lower_11_808,
    BoundId::theta_upper_10_367,
    BoundId::theta_dusart_lower_2_04,
    BoundId::theta_dusart_upper_0_782,
    BoundId::eq_2_12_upper_z,
    BoundId::eq_3_7_lower_z,
};

enum class BoundTarget { pn, theta };
enum class BoundSide { lower, upper };

struct BoundSpec {
  BoundId id;
  std::string name;   // stable string key, e.g. "thm-1.1-upper"
  BoundTarget target;
  BoundSide side;
  bool strict;        // true: the claim is > or <; false: >= or <=
  // Least n for which the inequality is claimed to hold; empty means
  // "conjectural/none" (no unconditional threshold is claimed).
  std::optional<std::uint64_t> claimed_threshold;
  bool conditional;   // claim depends on the Riemann hypothesis
  bool takes_z;       // right-hand side uses z = log p_n; evaluate with (n, p)
  std::uint64_t domain_min;  // least n for which the RHS is defined
  std::string expr;          // right-hand side, human readable
  std::string provenance;
  std::string notes;         // extra metadata (e.g. conditional-threshold window)
};

const std::vector<BoundSpec>& bound_registry();
const BoundSpec& bound_spec(BoundId id);
// nullptr when the name is not in the registry.
const BoundSpec* bound_spec_by_name(const std::string& name);
const std::string& bound_name(BoundId id);
std::optional<BoundId> bound_from_name(const std::string& name);

// JSON dump of the registry (id, target, side, strictness, threshold,
// conditional flag, provenance) for the bounds.json export.
std::string bounds_registry_json();

enum class Verdict { holds, fails, indeterminate };
const char* verdict_name(Verdict v);

// Strict: holds iff margin is certainly > 0, fails iff certainly <= 0.
// Non-strict: holds iff certainly >= 0, fails iff certainly < 0.
Verdict classify_margin(const Interval& margin, bool strict);

struct CheckOutcome {
  Verdict verdict = Verdict::indeterminate;
  // Signed margin: lhs - rhs for lower bounds, rhs - lhs for upper bounds,
  // where lhs is p_n (or theta(p_n) for theta entries).  Positive means the
  // inequality holds with room to spare.
  Interval margin = Interval::invalid();
  int escalations = 0;  // 0 plain double, 1 double-double, 2 MPFR
};

// ---------------------------------------------------------------------------
// Right-hand side evaluation, templated over the interval number types
// ---------------------------------------------------------------------------

namespace bdetail {

// n(y + w + k) with k given as a decimal literal ("0" for none).
template <class T>
T simple_rhs(const T& nv, const T& y, const T& w, const char* k_lit) {
  const T k = fdetail::C<T>(k_lit);
  return nv * (y + w + k);
}

// n(y + w - 1 + (w + a)/y) with a a decimal literal.
template <class T>
T four_term_rhs(const T& nv, const T& y, const T& w, const char* a_lit) {
  const T one = fdetail::C<T>("1");
  const T a = fdetail::C<T>(a_lit);
  return nv * (y + w - one + (w + a) / y);
}

// n(y + w - 1 + (w - 2)/y - (w^2 + bw + c)/(2y^2)).
template <class T>
T five_term_rhs(const T& nv, const T& y, const T& w, const char* b_lit,
                const char* c_lit) {
  const T one = fdetail::C<T>("1");
  const T two = fdetail::C<T>("2");
  const T b = fdetail::C<T>(b_lit);
  const T c = fdetail::C<T>(c_lit);
  return nv * (y + w - one + (w - two) / y -
               (sqr(w) + b * w + c) / (two * sqr(y)));
}

// n(z - 1 - 1/z - c2/z^2 - c3/z^3 - c4/z^4 - c5/z^5 - c6/z^6).
template <class T>
T z_form_rhs(const T& nv, const T& z, const char* c2, const char* c3,
             const char* c4, const char* c5, const char* c6) {
  const T one = fdetail::C<T>("1");
  const T iz = one / z;
  T acc = fdetail::C<T>(c6);
  acc = acc * iz + fdetail::C<T>(c5);
  acc = acc * iz + fdetail::C<T>(c4);
  acc = acc * iz + fdetail::C<T>(c3);
  acc = acc * iz + fdetail::C<T>(c2);
  acc = acc * iz + one;
  return nv * (z - one - acc * iz);
}

}  // namespace bdetail

// Right-hand side of an n-only entry given enclosures of n, y = log n and
// w = log log n.  The rosser-lower case never reads w, so an invalid w may be
// passed for it (the n = 1 point has no log log n).
template <class T>
T bound_rhs_wyz(BoundId id, const T& nv, const T& y, const T& w) {
  using namespace bdetail;
  switch (id) {
    case BoundId::rosser_lower:
      return nv * y;
    case BoundId::eq_1_4_upper:
      return simple_rhs(nv, y, w, "0");
    case BoundId::eq_1_5_lower:
      return simple_rhs(nv, y, w, "-1");
    case BoundId::eq_1_6_upper:
      return nv * (y + w + w);
    case BoundId::rosser_schoenfeld_lower:
      return simple_rhs(nv, y, w, "-1.5");
    case BoundId::eq_1_7_upper:
      return simple_rhs(nv, y, w, "-0.5");
    case BoundId::eq_1_8_lower:
      return simple_rhs(nv, y, w, "-1.0072629");
    case BoundId::massias_robin_lower:
      return simple_rhs(nv, y, w, "-1.002872");
    case BoundId::eq_1_9_upper:
      return four_term_rhs(nv, y, w, "-1.8");
    case BoundId::eq_1_10_upper:
      return four_term_rhs(nv, y, w, "-2");
    case BoundId::eq_1_11_lower:
      return four_term_rhs(nv, y, w, "-2.1");
    case BoundId::thm_1_1_upper:
      return five_term_rhs(nv, y, w, "-6", "10.667");
    case BoundId::thm_1_2_lower:
      return five_term_rhs(nv, y, w, "-6", "11.508");
    case BoundId::corollary_unconditional_1_12:
      return five_term_rhs(nv, y, w, "-6", "0");
    case BoundId::kor_after_thm_1_2_lower:
      return five_term_rhs(nv, y, w, "0", "0");
    case BoundId::remark_3_16_lower:
      return five_term_rhs(nv, y, w, "-6", "11");
    case BoundId::theta_lower_11_808:
      return five_term_rhs(nv, y, w, "-6", "11.808");
    case BoundId::theta_upper_10_367:
      return five_term_rhs(nv, y, w, "-6", "10.367");
    case BoundId::theta_dusart_lower_2_04:
      return four_term_rhs(nv, y, w, "-2.04");
    case BoundId::theta_dusart_upper_0_782: {
      const T c = fdetail::C<T>("0.782");
      return four_term_rhs(nv, y, w, "-2") - nv * c / sqr(y);
    }
    default:
      throw argument_error("bound_rhs_wyz: z-form entries need (n, p_n)");
  }
}

// Right-hand side of an n-only entry at index n.  Throws argument_error for
// the z-form entries and below the entry's domain guard.
template <class T>
T bound_rhs(BoundId id, std::uint64_t n) {
  const BoundSpec& s = bound_spec(id);
  if (s.takes_z)
    throw argument_error("bound " + s.name +
                         " is a z-form entry; evaluate it with (n, p_n)");
  if (n < s.domain_min)
    throw argument_error("bound " + s.name + " needs n >= " +
                         std::to_string(s.domain_min));
  const T nv = exact_u64<T>(n);
  const T y = log(nv);
  // rosser-lower is the only entry defined at n = 1, where log log n is not.
  if (id == BoundId::rosser_lower) return nv * y;
  return bound_rhs_wyz(id, nv, y, log(y));
}

// Right-hand side of a z-form entry at (n, p_n).
template <class T>
T bound_rhs_z(BoundId id, std::uint64_t n, std::uint64_t p) {
  const BoundSpec& s = bound_spec(id);
  if (!s.takes_z)
    throw argument_error("bound " + s.name +
                         " is an n-only entry; evaluate it with n");
  if (n < s.domain_min)
    throw argument_error("bound " + s.name + " needs n >= " +
                         std::to_string(s.domain_min));
  if (p < 2) throw argument_error("bound_rhs_z needs p >= 2");
  const T nv = exact_u64<T>(n);
  const T z = log(exact_u64<T>(p));
  switch (id) {
    case BoundId::eq_2_12_upper_z:
      return bdetail::z_form_rhs(nv, z, "2.85", "13.15", "70.7", "458.7275",
                                 "3428.7225");
    case BoundId::eq_3_7_lower_z:
      return bdetail::z_form_rhs(nv, z, "3.15", "12.85", "71.3", "463.2275",
                                 "4585");
    default:
      throw argument_error("bound_rhs_z: unhandled id");
  }
}

// ---------------------------------------------------------------------------
// Double-precision entry points and checking
// ---------------------------------------------------------------------------

Interval eval_bound(BoundId id, std::uint64_t n);
Interval eval_bound(const std::string& name, std::uint64_t n);
Interval eval_bound_z(BoundId id, std::uint64_t n, std::uint64_t p);
Interval eval_bound_z(const std::string& name, std::uint64_t n,
                      std::uint64_t p);

// Signed margin at a streamed point (positive means the inequality holds).
// bound_margin evaluates in plain double intervals, reusing the log
// enclosures the point already carries.  bound_margin_escalated recomputes
// the right-hand side (and the logs) from the exact pair on a higher tier:
// 1 = double-double, 2 = MPFR.  theta entries keep the streamed theta
// enclosure on every tier, since it cannot be sharpened after the fact.
Interval bound_margin(BoundId id, const PrimePoint& pt);
Interval bound_margin_escalated(BoundId id, const PrimePoint& pt, int tier);

// Compare one catalog entry against a streamed point.  theta entries require
// pt.theta_valid.  With PrecisionMode::escalating an indeterminate margin is
// recomputed in double-double and, if still indeterminate, in MPFR; the
// theta enclosure itself cannot be sharpened after the fact, so theta
// entries keep the streamed interval on every tier.
CheckOutcome check_bound(BoundId id, const PrimePoint& pt,
                         PrecisionMode mode = PrecisionMode::escalating);
CheckOutcome check_bound(const std::string& name, const PrimePoint& pt,
                         PrecisionMode mode = PrecisionMode::escalating);

}  // namespace primebounds
