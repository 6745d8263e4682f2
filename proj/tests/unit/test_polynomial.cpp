#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primebounds/constants.hpp"
#include "primebounds/functions.hpp"
#include "primebounds/polynomial.hpp"
#include "support/mpfr_oracle.hpp"

using namespace primebounds;
using testsupport::Mp;

TEST_CASE("registered polynomial names round-trip") {
  for (PolyId id : kAllPolyIds) {
    PolyId back{};
    CHECK(poly_id_from_name(poly_name(id), back));
    CHECK(back == id);
  }
  PolyId out{};
  CHECK(!poly_id_from_name("P99", out));
}

TEST_CASE("degrees of the fixed polynomials") {
  CHECK(poly(PolyId::P1).degree() == 2);
  CHECK(poly(PolyId::P4).degree() == 5);
  CHECK(poly(PolyId::P7).degree() == 8);
  CHECK(poly(PolyId::P11).degree() == 3);
  CHECK(poly(PolyId::Q1).degree() == 7);
  CHECK(poly(PolyId::Q7).degree() == 4);
  CHECK(poly(PolyId::Q9).degree() == 5);
  CHECK(poly(PolyId::T1).degree() == 1);
  CHECK(poly(PolyId::T2).degree() == 2);
}

TEST_CASE("Q7/Q8/Q9 frozen expansions match their defining combinations") {
  const Poly one_sq = Poly::from_strings({"1", "-1", "1"});  // x^2 - x + 1
  const Poly q7 = one_sq * poly(PolyId::P12) + one_sq * poly(PolyId::P8) -
                  poly(PolyId::P9).scaled(parse_decimal("3.15")) -
                  poly(PolyId::P10) + poly(PolyId::P8).scaled(parse_decimal("12.85"));
  CHECK(q7 == poly(PolyId::Q7));

  const Poly q8 = poly(PolyId::P10).scaled(parse_decimal("3.15")) +
                  poly(PolyId::P9).scaled(parse_decimal("12.85"));
  CHECK(q8 == poly(PolyId::Q8));

  const Poly q9 = (one_sq * poly(PolyId::P9)).scaled(rat(2)) -
                  poly(PolyId::P8) * poly(PolyId::P12);
  CHECK(q9 == poly(PolyId::Q9));
}

TEST_CASE("exact cross-identities between the P polynomials") {
  const Poly one_sq = Poly::from_strings({"1", "-1", "1"});

  // P12 = P8 + 6.3 (x^2 - x + 1)
  CHECK(poly(PolyId::P12) ==
        poly(PolyId::P8) + one_sq.scaled(parse_decimal("6.3")));

  // P8 - P1 = 1/5
  CHECK(poly(PolyId::P8) - poly(PolyId::P1) == Poly::from_strings({"1/5"}));

  // 12.85 P8 = 38.55 x^2 - 77.1 x + 66.82
  CHECK(poly(PolyId::P8).scaled(parse_decimal("12.85")) ==
        Poly::from_strings({"38.55", "-77.1", "66.82"}));

  // P11 = x (x - 2.1)^2
  const Poly x = Poly::from_strings({"1", "0"});
  const Poly shift = Poly::from_strings({"1", "-2.1"});
  CHECK(poly(PolyId::P11) == x * shift * shift);

  // P10 = 2 (x - 2.1)(x^2 - 1.5x + 1.05)
  CHECK(poly(PolyId::P10) ==
        (shift * Poly::from_strings({"1", "-1.5", "1.05"})).scaled(rat(2)));

  // 8.7 w^2 - 38 w + 10.7 = P1 + 5.7 (w^2 - w + 1) - 26.3 w
  const Poly lhs = Poly::from_strings({"8.7", "-38", "10.7"});
  const Poly rhs = poly(PolyId::P1) + one_sq.scaled(parse_decimal("5.7")) -
                   Poly::from_strings({"26.3", "0"});
  CHECK(lhs == rhs);
}

TEST_CASE("derived constants match their defining products exactly") {
  // A2 = (458.7275 - A1) A0^5
  rat a0p5 = consts::A0();
  for (int i = 1; i < 5; ++i) a0p5 *= consts::A0();
  CHECK(consts::A2() == (parse_decimal("458.7275") - consts::A1()) * a0p5);

  // A3 = 3428.7225 A0^6
  CHECK(consts::A3() == parse_decimal("3428.7225") * a0p5 * consts::A0());

  // S1 = 12.85 - (B1+...+B5), S2 = 3.15 - (B6+...+B10)
  rat s1 = parse_decimal("12.85");
  for (int i = 0; i < 5; ++i) s1 -= consts::B()[i];
  CHECK(consts::S1() == s1);
  rat s2 = parse_decimal("3.15");
  for (int i = 5; i < 10; ++i) s2 -= consts::B()[i];
  CHECK(consts::S2() == s2);
}

TEST_CASE("exact evaluation spot values") {
  CHECK(poly(PolyId::P1).eval_exact(rat(2)) == rat(5));
  CHECK(poly(PolyId::P1).eval_exact(rat(0)) == rat(5));
  CHECK(poly(PolyId::T1).eval_exact(rat(2)) == rat(0));
  CHECK(poly(PolyId::T2).eval_exact(rat(3)) == rat(2));
  // P11(2.1) = 0 exactly (double root at 2.1)
  CHECK(poly(PolyId::P11).eval_exact(parse_decimal("2.1")) == rat(0));
  CHECK(poly(PolyId::P10).eval_exact(parse_decimal("2.1")) == rat(0));
}

TEST_CASE("interval evaluation encloses exact values in every number type") {
  for (PolyId id : kAllPolyIds) {
    const Poly& p = poly(id);
    for (const char* xs : {"0", "1", "2.1", "3.05", "-1.5", "7"}) {
      const rat x = parse_decimal(xs);
      const rat want = p.eval_exact(x);
      // oracle value of the exact rational
      Mp wantm = Mp(want.get_num().get_str().c_str()) /
                 Mp(want.get_den().get_str().c_str());

      const Interval ei = eval_poly(id, from_rat<Interval>(x));
      CHECK(mpfr_cmp_d(wantm.get(), ei.lo) >= 0);
      CHECK(mpfr_cmp_d(wantm.get(), ei.hi) <= 0);

      const MPInterval em = eval_poly_t<MPInterval>(id, from_rat<MPInterval>(x));
      CHECK(mpfr_cmp(wantm.get(), em.lo.get()) >= 0);
      CHECK(mpfr_cmp(wantm.get(), em.hi.get()) <= 0);
    }
  }
}

TEST_CASE("P11 interval evaluation contains zero at 2.1") {
  const Interval at = eval_poly(PolyId::P11, from_rat<Interval>(parse_decimal("2.1")));
  CHECK(at.contains_zero());
  CHECK(at.width() < 5e-14);
}

TEST_CASE("poly_coeffs caches enclose the exact coefficients") {
  for (PolyId id : {PolyId::P9, PolyId::Q7, PolyId::Q8, PolyId::Q9, PolyId::P8}) {
    const Poly& p = poly(id);
    const auto& ci = poly_coeffs<Interval>(id);
    REQUIRE(ci.size() == p.c.size());
    for (std::size_t k = 0; k < ci.size(); ++k) {
      Mp want = Mp(p.c[k].get_num().get_str().c_str()) /
                Mp(p.c[k].get_den().get_str().c_str());
      CHECK(mpfr_cmp_d(want.get(), ci[k].lo) >= 0);
      CHECK(mpfr_cmp_d(want.get(), ci[k].hi) <= 0);
    }
  }
}
