#pragma once
// The named auxiliary functions behind the bound machinery: exponential-
// polynomial kernels G0/G1, the lower-estimate logarithm Phi, tail positivity
// functions f1..f10, the bivariate bracket grids g1/h1/alpha/beta/gamma/r,
// the positivity functionals F0/F1/H1..H10, the remainder coefficients b0/b1
// with their per-step parameter choices, and the classical Cipolla expansion.
//
// Every evaluator is a template over the interval number types (Interval,
// DDInterval, MPInterval, DualInterval), so one transcription serves plain
// evaluation, the escalation ladder, and forward-mode differentiation.
// Decimal constants are parsed as exact rationals and converted outward into
// the target type once per instantiation (function-local statics).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "primebounds/constants.hpp"
#include "primebounds/dual.hpp"
#include "primebounds/polynomial.hpp"
#include "primebounds/rational.hpp"

namespace primebounds {

enum class FnId {
  // univariate
  G0, G1, W1, Phi,
  f1, f2, f3, f4, f5, f6, f7, f8, f9, f10,
  // bivariate bracket grids (args x, t)
  g1, h1, alpha, beta, gamma, r,
  // point functions of (w, y, z) = (log log n, log n, log(n log n))
  F0, F1,
  H1, H2, H3, H4, H5, H6, H7, H8, H9, H10,
  g, h,
  b0_step1, b0_step2,
  b1_step1, b1_step2, b1_step3,
};

inline constexpr std::array<FnId, 39> kAllFnIds = {
    FnId::G0, FnId::G1, FnId::W1, FnId::Phi,
    FnId::f1, FnId::f2, FnId::f3, FnId::f4, FnId::f5, FnId::f6, FnId::f7,
    FnId::f8, FnId::f9, FnId::f10,
    FnId::g1, FnId::h1, FnId::alpha, FnId::beta, FnId::gamma, FnId::r,
    FnId::F0, FnId::F1,
    FnId::H1, FnId::H2, FnId::H3, FnId::H4, FnId::H5, FnId::H6, FnId::H7,
    FnId::H8, FnId::H9, FnId::H10,
    FnId::g, FnId::h,
    FnId::b0_step1, FnId::b0_step2,
    FnId::b1_step1, FnId::b1_step2, FnId::b1_step3,
};

// arity 1: f(x); arity 2: f(x, t); arity 3: f(w, y, z) derived from an index n
struct FnInfo {
  FnId id;
  std::string name;
  int arity;
  std::string domain;      // human/JSON description of the sampling domain
  std::string provenance;  // what the function is, in words
  double lo = 0.0, hi = 0.0;           // sampling window (arity 1 and 2)
  std::uint64_t n_lo = 0, n_hi = 0;    // sampling window in n (arity 3)
};

std::string fn_name(FnId id);
bool fn_id_from_name(const std::string& name, FnId& out);
const std::vector<FnInfo>& fn_registry();
const FnInfo& fn_info(FnId id);

namespace fdetail {

template <class T>
T C(const char* lit) {
  return from_rat<T>(parse_decimal(lit));
}

template <class T>
std::vector<T> coeffs(std::initializer_list<const char*> lits) {
  std::vector<T> v;
  v.reserve(lits.size());
  for (const char* s : lits) v.push_back(from_rat<T>(parse_decimal(s)));
  return v;
}

// descending-coefficient Horner evaluation
template <class T>
T horner(const std::vector<T>& c, const T& x) {
  T acc = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
  return acc;
}

}  // namespace fdetail

// ---------------------------------------------------------------------------
// univariate kernels
// ---------------------------------------------------------------------------

// G0(x) = (2x^3-21x^2+82.2x-98.9)/(6e^{3x}) - (x^4-14x^3+53.4x^2-100.6x+17)/(4e^{4x})
//       + (2x^5-10x^4+35x^3-110x^2+150x-42)/(10e^{5x})
//       - (3x^4-44x^3+156x^2-96x+64)/(24e^{6x})
template <class T>
T fn_G0(const T& x) {
  using fdetail::C;
  static const std::vector<T> n3 = fdetail::coeffs<T>({"2", "-21", "82.2", "-98.9"});
  static const std::vector<T> n4 =
      fdetail::coeffs<T>({"1", "-14", "53.4", "-100.6", "17"});
  static const std::vector<T> n5 =
      fdetail::coeffs<T>({"2", "-10", "35", "-110", "150", "-42"});
  static const std::vector<T> n6 = fdetail::coeffs<T>({"3", "-44", "156", "-96", "64"});
  static const T d3 = C<T>("6"), d4 = C<T>("4"), d5 = C<T>("10"), d6 = C<T>("24");
  const T em = exp(-x);
  const T em2 = sqr(em), em3 = em2 * em, em4 = sqr(em2), em5 = em2 * em3,
          em6 = sqr(em3);
  return fdetail::horner(n3, x) / d3 * em3 - fdetail::horner(n4, x) / d4 * em4 +
         fdetail::horner(n5, x) / d5 * em5 - fdetail::horner(n6, x) / d6 * em6;
}

// G1(x) = (2x^3-15x^2+42x-14)/6 e^{-3x} + 3.15x e^{-3x} - 12.85 e^{-3x}
//       - (x^2-x+1)e^{-3x} + (x^2-x+1)x e^{-4x} - P12(x)/2 e^{-4x}
//       + 12.85x e^{-4x} + P12(x)x/2 e^{-5x} + (x-1)^2/2 e^{-2x}
//       - (x^3-6x^2+12x-7)/3 e^{-3x} - [s^2/2 - s^3/3 + s^4/4]
//       + (x-2)^4/4 e^{-8x},   s = (x-1)e^{-x} + (x-2)e^{-2x}
template <class T>
T fn_G1(const T& x) {
  using fdetail::C;
  static const std::vector<T> na = fdetail::coeffs<T>({"2", "-15", "42", "-14"});
  static const std::vector<T> nb = fdetail::coeffs<T>({"1", "-6", "12", "-7"});
  static const T c1 = C<T>("1"), c2 = C<T>("2"), c3 = C<T>("3"), c4 = C<T>("4"),
                 c6 = C<T>("6");
  static const T c315 = C<T>("3.15"), c1285 = C<T>("12.85");
  const T em = exp(-x);
  const T em2 = sqr(em), em3 = em2 * em, em4 = sqr(em2), em5 = em2 * em3,
          em8 = sqr(em4);
  const T q = sqr(x) - x + c1;  // x^2 - x + 1
  const T p12 = eval_poly_t<T>(PolyId::P12, x);
  const T s = (x - c1) * em + (x - c2) * em2;
  const T s2 = sqr(s), s3 = s2 * s, s4 = sqr(s2);
  return fdetail::horner(na, x) / c6 * em3 + c315 * x * em3 - c1285 * em3 -
         q * em3 + q * x * em4 - p12 / c2 * em4 + c1285 * x * em4 +
         p12 * x / c2 * em5 + sqr(x - c1) / c2 * em2 -
         fdetail::horner(nb, x) / c3 * em3 - (s2 / c2 - s3 / c3 + s4 / c4) +
         pow_int(x - c2, 4) / c4 * em8;
}

// W1(x) = 3.54 e^x - 20 (2x^3 - 18x^2 + 64.2x - 98.9)
template <class T>
T fn_W1(const T& x) {
  using fdetail::C;
  static const std::vector<T> n = fdetail::coeffs<T>({"2", "-18", "64.2", "-98.9"});
  static const T c354 = C<T>("3.54"), c20 = C<T>("20");
  return c354 * exp(x) - c20 * fdetail::horner(n, x);
}

// the argument of the logarithm in Phi: 1 + (x-1)e^{-x} + (x-2.1)e^{-2x}
template <class T>
T fn_phi_inner(const T& x) {
  using fdetail::C;
  static const T c1 = C<T>("1"), c21 = C<T>("2.1");
  const T em = exp(-x);
  return c1 + (x - c1) * em + (x - c21) * sqr(em);
}

// Phi(x) = e^x + x + log(1 + (x-1)e^{-x} + (x-2.1)e^{-2x});
// throws domain_error when the inner enclosure touches (-inf, 0]
template <class T>
T fn_phi(const T& x) {
  return exp(x) + x + log(fn_phi_inner(x));
}

// ---------------------------------------------------------------------------
// tail positivity functions f1..f10 (f6 is the diagonal of r below)
// ---------------------------------------------------------------------------

// f1(x) = 4*0.27 x e^{3x} - 2 Q7(x) e^x + 2*0.87 Q8(x) + Q9(x)
//       + 2*12.85*0.87^2 P9(x)
template <class T>
T fn_f1(const T& x) {
  static const T cA = from_rat<T>(rat(4) * consts::B()[0]);
  static const T c2 = fdetail::C<T>("2");
  static const T cB = from_rat<T>(rat(2) * consts::A0());
  static const T cC =
      from_rat<T>(rat(2) * parse_decimal("12.85") * consts::A0() * consts::A0());
  const T ex = exp(x);
  return cA * x * pow_int(ex, 3) - c2 * eval_poly_t<T>(PolyId::Q7, x) * ex +
         cB * eval_poly_t<T>(PolyId::Q8, x) + eval_poly_t<T>(PolyId::Q9, x) +
         cC * eval_poly_t<T>(PolyId::P9, x);
}

// f2(x) = 4.23 x Phi^3 + 12.85 x e^x Phi^2 - 71.3 e^{3x}
template <class T>
T fn_f2(const T& x) {
  using fdetail::C;
  static const T c423 = C<T>("4.23"), c1285 = C<T>("12.85"), c713 = C<T>("71.3");
  const T ph = fn_phi(x);
  const T ph2 = sqr(ph);
  const T ex = exp(x);
  return c423 * x * (ph2 * ph) + c1285 * x * ex * ph2 - c713 * pow_int(ex, 3);
}

// f3(x) = 3.15 x Phi - 35.15 x^2 + 44.6 x - 42.08
template <class T>
T fn_f3(const T& x) {
  using fdetail::C;
  static const T c315 = C<T>("3.15"), c3515 = C<T>("35.15"), c446 = C<T>("44.6"),
                 c4208 = C<T>("42.08");
  return c315 * x * fn_phi(x) - c3515 * sqr(x) + c446 * x - c4208;
}

// f4(x) = 0.116 x e^x Phi + 3.15 x^3 - 57.45 x^2 + 113.01 x - 80.05
template <class T>
T fn_f4(const T& x) {
  using fdetail::C;
  static const T c0116 = C<T>("0.116");
  static const std::vector<T> n =
      fdetail::coeffs<T>({"3.15", "-57.45", "113.01", "-80.05"});
  return c0116 * x * exp(x) * fn_phi(x) + fdetail::horner(n, x);
}

// f5(x) = 4.48 x e^x - 2x^4 + 5x^3 - 37.7 x^2 + 41.1 x - 31.9
template <class T>
T fn_f5(const T& x) {
  using fdetail::C;
  static const T c448 = C<T>("4.48");
  static const std::vector<T> n =
      fdetail::coeffs<T>({"-2", "5", "-37.7", "41.1", "-31.9"});
  return c448 * x * exp(x) + fdetail::horner(n, x);
}

// f7(x) = 0.0052 x e^x Phi^2 - 38.55 x^2 + 77.1 x - 66.82
template <class T>
T fn_f7(const T& x) {
  using fdetail::C;
  static const T c = C<T>("0.0052");
  static const std::vector<T> n = fdetail::coeffs<T>({"-38.55", "77.1", "-66.82"});
  return c * x * exp(x) * sqr(fn_phi(x)) + fdetail::horner(n, x);
}

// f8(x) = 0.052 x Phi^2 - 12.85 (x^2 - x + 1)
template <class T>
T fn_f8(const T& x) {
  using fdetail::C;
  static const T c0052 = C<T>("0.052"), c1285 = C<T>("12.85"), c1 = C<T>("1");
  return c0052 * x * sqr(fn_phi(x)) - c1285 * (sqr(x) - x + c1);
}

// f9(x) = 0.1955 x Phi^4 - 463.2275 e^{2x}
template <class T>
T fn_f9(const T& x) {
  using fdetail::C;
  static const T c = C<T>("0.1955"), d = C<T>("463.2275");
  return c * x * pow_int(fn_phi(x), 4) - d * sqr(exp(x));
}

// f10(x) = 0.08 x Phi^5 - 4585 e^{2x}
template <class T>
T fn_f10(const T& x) {
  using fdetail::C;
  static const T c = C<T>("0.08"), d = C<T>("4585");
  return c * x * pow_int(fn_phi(x), 5) - d * sqr(exp(x));
}

// ---------------------------------------------------------------------------
// bivariate bracket grids (nondecreasing in x, nonincreasing in t; a cell
// [t0,t1] is certified by the single evaluation F(t0, t1))
// ---------------------------------------------------------------------------

// g1(x,t) = 3.54e^{4x} + 20(18x^2+98.9)e^{3x} - 20(2t^3+64.2t)e^{3t}
//         + 30(x^4+63.16x^2+258.29)e^{2x} - 30(12t^3+203.17t)e^{2t}
//         + 12(10x^4+70x^2+1554.24)e^x - 12(2t^5+30t^3+90t)e^t
//         + 5(2137.44x^2+37836.25) - 5(8t^3+2185.45t)
template <class T>
T fn_g1(const T& x, const T& t) {
  using fdetail::C;
  static const T c354 = C<T>("3.54"), c20 = C<T>("20"), c30 = C<T>("30"),
                 c12 = C<T>("12"), c5 = C<T>("5");
  static const std::vector<T> px3 = fdetail::coeffs<T>({"18", "0", "98.9"});
  static const std::vector<T> pt3 = fdetail::coeffs<T>({"2", "0", "64.2", "0"});
  static const std::vector<T> px2 =
      fdetail::coeffs<T>({"1", "0", "63.16", "0", "258.29"});
  static const std::vector<T> pt2 = fdetail::coeffs<T>({"12", "0", "203.17", "0"});
  static const std::vector<T> px1 =
      fdetail::coeffs<T>({"10", "0", "70", "0", "1554.24"});
  static const std::vector<T> pt1 =
      fdetail::coeffs<T>({"2", "0", "30", "0", "90", "0"});
  static const std::vector<T> px0 = fdetail::coeffs<T>({"2137.44", "0", "37836.25"});
  static const std::vector<T> pt0 = fdetail::coeffs<T>({"8", "0", "2185.45", "0"});
  const T ex = exp(x), et = exp(t);
  const T ex2 = sqr(ex), et2 = sqr(et);
  const T ex3 = ex2 * ex, et3 = et2 * et;
  const T ex4 = sqr(ex2);
  return c354 * ex4 + c20 * fdetail::horner(px3, x) * ex3 -
         c20 * fdetail::horner(pt3, t) * et3 + c30 * fdetail::horner(px2, x) * ex2 -
         c30 * fdetail::horner(pt2, t) * et2 + c12 * fdetail::horner(px1, x) * ex -
         c12 * fdetail::horner(pt1, t) * et + c5 * fdetail::horner(px0, x) -
         c5 * fdetail::horner(pt0, t);
}

// h1(x,t) = 1.98e^{4x} + 20(21x^2+130.823)e^{3x} - 20(2t^3+82.2t)e^{3t}
//         + 30(x^4+77.16x^2+279.57)e^{2x} - 30(14t^3+236.45t)e^{2t}
//         + 12(10x^4+110x^2+1660.65)e^x - 12(2t^5+35t^3+203.205t)e^t
//         + 5(3x^4+2309.28x^2+38175.947) - 5(44t^3+2568.52t)
template <class T>
T fn_h1(const T& x, const T& t) {
  using fdetail::C;
  static const T c198 = C<T>("1.98"), c20 = C<T>("20"), c30 = C<T>("30"),
                 c12 = C<T>("12"), c5 = C<T>("5");
  static const std::vector<T> px3 = fdetail::coeffs<T>({"21", "0", "130.823"});
  static const std::vector<T> pt3 = fdetail::coeffs<T>({"2", "0", "82.2", "0"});
  static const std::vector<T> px2 =
      fdetail::coeffs<T>({"1", "0", "77.16", "0", "279.57"});
  static const std::vector<T> pt2 = fdetail::coeffs<T>({"14", "0", "236.45", "0"});
  static const std::vector<T> px1 =
      fdetail::coeffs<T>({"10", "0", "110", "0", "1660.65"});
  static const std::vector<T> pt1 =
      fdetail::coeffs<T>({"2", "0", "35", "0", "203.205", "0"});
  static const std::vector<T> px0 =
      fdetail::coeffs<T>({"3", "0", "2309.28", "0", "38175.947"});
  static const std::vector<T> pt0 = fdetail::coeffs<T>({"44", "0", "2568.52", "0"});
  const T ex = exp(x), et = exp(t);
  const T ex2 = sqr(ex), et2 = sqr(et);
  const T ex3 = ex2 * ex, et3 = et2 * et;
  const T ex4 = sqr(ex2);
  return c198 * ex4 + c20 * fdetail::horner(px3, x) * ex3 -
         c20 * fdetail::horner(pt3, t) * et3 + c30 * fdetail::horner(px2, x) * ex2 -
         c30 * fdetail::horner(pt2, t) * et2 + c12 * fdetail::horner(px1, x) * ex -
         c12 * fdetail::horner(pt1, t) * et + c5 * fdetail::horner(px0, x) -
         c5 * fdetail::horner(pt0, t);
}

// shared body of alpha/beta/gamma:
//   c5 e^{5x} + 2(2x^3 + c4 x)e^{4x} - 2(a t^2 + b)e^{4t}
//   + 3(12x^3+112x)e^{3x} - 3(t^4+46.6t^2+40)e^{3t}
//   + 6(21.3x^3+41.5x)e^{2x} - 6(2t^4+40.3t^2+12)e^{2t}
//   + 2(56x^3+132x)e^x - 2(9t^4+129t^2+52)e^t
//   + 6(14x^3+40x) - 6(2t^4+36t^2+16)
template <class T>
T fn_abg_body(const T& x, const T& t, const T& c5, const T& c4, const T& a,
              const T& b) {
  using fdetail::C;
  static const T k2 = C<T>("2"), k3 = C<T>("3"), k6 = C<T>("6");
  static const std::vector<T> px3 = fdetail::coeffs<T>({"12", "0", "112", "0"});
  static const std::vector<T> pt3 = fdetail::coeffs<T>({"1", "0", "46.6", "0", "40"});
  static const std::vector<T> px2 = fdetail::coeffs<T>({"21.3", "0", "41.5", "0"});
  static const std::vector<T> pt2 = fdetail::coeffs<T>({"2", "0", "40.3", "0", "12"});
  static const std::vector<T> px1 = fdetail::coeffs<T>({"56", "0", "132", "0"});
  static const std::vector<T> pt1 = fdetail::coeffs<T>({"9", "0", "129", "0", "52"});
  static const std::vector<T> px0 = fdetail::coeffs<T>({"14", "0", "40", "0"});
  static const std::vector<T> pt0 = fdetail::coeffs<T>({"2", "0", "36", "0", "16"});
  const T ex = exp(x), et = exp(t);
  const T ex2 = sqr(ex), et2 = sqr(et);
  const T ex3 = ex2 * ex, et3 = et2 * et;
  const T ex4 = sqr(ex2), et4 = sqr(et2);
  const T ex5 = ex4 * ex;
  const T x3 = sqr(x) * x;
  return c5 * ex5 + k2 * (k2 * x3 + c4 * x) * ex4 - k2 * (a * sqr(t) + b) * et4 +
         k3 * fdetail::horner(px3, x) * ex3 - k3 * fdetail::horner(pt3, t) * et3 +
         k6 * fdetail::horner(px2, x) * ex2 - k6 * fdetail::horner(pt2, t) * et2 +
         k2 * fdetail::horner(px1, x) * ex - k2 * fdetail::horner(pt1, t) * et +
         k6 * fdetail::horner(px0, x) - k6 * fdetail::horner(pt0, t);
}

template <class T>
T fn_alpha(const T& x, const T& t) {
  using fdetail::C;
  static const T c5 = C<T>("0.534"), c4 = C<T>("63.071778"), a = C<T>("18"),
                 b = C<T>("97.1");
  return fn_abg_body(x, t, c5, c4, a, b);
}

template <class T>
T fn_beta(const T& x, const T& t) {
  using fdetail::C;
  static const T c5 = C<T>("1.272"), c4 = C<T>("81.071778"), a = C<T>("21"),
                 b = C<T>("131.867");
  return fn_abg_body(x, t, c5, c4, a, b);
}

template <class T>
T fn_gamma(const T& x, const T& t) {
  using fdetail::C;
  static const T c5 = C<T>("1.248"), c4 = C<T>("81.071778"), a = C<T>("21"),
                 b = C<T>("131.636");
  return fn_abg_body(x, t, c5, c4, a, b);
}

// r(x,t) = (0.105 e^x + 4.477) x Phi(x) + 3.15 x e^x - 3.15 (t^2 + 1) e^t
template <class T>
T fn_r(const T& x, const T& t) {
  using fdetail::C;
  static const T b6 = from_rat<T>(consts::B()[5]);
  static const T s1 = from_rat<T>(consts::S1());
  static const T c315 = C<T>("3.15"), c1 = C<T>("1");
  return (b6 * exp(x) + s1) * x * fn_phi(x) + c315 * x * exp(x) -
         c315 * (sqr(t) + c1) * exp(t);
}

// f6(x) = r(x, x)
template <class T>
T fn_f6(const T& x) {
  return fn_r(x, x);
}

// ---------------------------------------------------------------------------
// point functions of (w, y, z); the caller supplies enclosures of
// w = log log n, y = log n, z = log(n log n) = y + w
// ---------------------------------------------------------------------------

// F0 = y - 0.87 z
template <class T>
T fn_F0(const T& w, const T& y, const T& z) {
  (void)w;
  static const T a0 = from_rat<T>(consts::A0());
  return y - a0 * z;
}

// F1 = A1/z^5 + (w^2-3.85w+14.15)(w^2-w+1)/(y^4 z) + 2.85 P1(w)/(2y^3 z^2)
//    + 2.85 P1(w)/(2y^4 z) + (13.15(w^2-w+1) - 70.7w)/(y^2 z^2) (1/y + 1/z)
//    - P2(w)/(6 y^4 z)
template <class T>
T fn_F1(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T a1 = from_rat<T>(consts::A1());
  static const T c385 = C<T>("3.85"), c1415 = C<T>("14.15"), c285 = C<T>("2.85"),
                 c1315 = C<T>("13.15"), c707 = C<T>("70.7"), c1 = C<T>("1"),
                 c2 = C<T>("2"), c6 = C<T>("6");
  const T q = sqr(w) - w + c1;
  const T p1 = eval_poly_t<T>(PolyId::P1, w);
  const T p2 = eval_poly_t<T>(PolyId::P2, w);
  const T y2 = sqr(y), z2 = sqr(z);
  const T y3 = y2 * y, y4 = sqr(y2);
  const T z5 = sqr(z2) * z;
  return a1 / z5 + (sqr(w) - c385 * w + c1415) * q / (y4 * z) +
         c285 * p1 / (c2 * y3 * z2) + c285 * p1 / (c2 * y4 * z) +
         (c1315 * q / (y2 * z2) - c707 * w / (y2 * z2)) * (c1 / y + c1 / z) -
         p2 / (c6 * y4 * z);
}

// H1 = B1 w/(y^3 z) - Q7(w)/(2y^5 z) + Q8(w)/(2y^5 z^2) + Q9(w)/(4y^6 z)
//    + 12.85 P9(w)/(2y^4 z^3)
template <class T>
T fn_H1(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b1 = from_rat<T>(consts::B()[0]);
  static const T c1285 = C<T>("12.85"), c2 = C<T>("2"), c4 = C<T>("4");
  const T y2 = sqr(y), z2 = sqr(z);
  const T y3 = y2 * y, y4 = sqr(y2), y5 = y4 * y, y6 = sqr(y3);
  const T z3 = z2 * z;
  return b1 * w / (y3 * z) - eval_poly_t<T>(PolyId::Q7, w) / (c2 * y5 * z) +
         eval_poly_t<T>(PolyId::Q8, w) / (c2 * y5 * z2) +
         eval_poly_t<T>(PolyId::Q9, w) / (c4 * y6 * z) +
         c1285 * eval_poly_t<T>(PolyId::P9, w) / (c2 * y4 * z3);
}

// H2 = B2 w/(y^3 z) + 12.85 w/(y^2 z^2) - 71.3/z^4
template <class T>
T fn_H2(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b2 = from_rat<T>(consts::B()[1]);
  static const T c1285 = C<T>("12.85"), c713 = C<T>("71.3");
  const T y2 = sqr(y), z2 = sqr(z);
  return b2 * w / (y2 * y * z) + c1285 * w / (y2 * z2) - c713 / sqr(z2);
}

// H3 = B3 w/(y^3 z) - 3.15 P8(w)/(2y^3 z^2) - 12.85(w^2-w+1)/(y^3 z^2)
template <class T>
T fn_H3(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b3 = from_rat<T>(consts::B()[2]);
  static const T c315 = C<T>("3.15"), c1285 = C<T>("12.85"), c1 = C<T>("1"),
                 c2 = C<T>("2");
  const T y3 = sqr(y) * y, z2 = sqr(z);
  const T q = sqr(w) - w + c1;
  return b3 * w / (y3 * z) -
         c315 * eval_poly_t<T>(PolyId::P8, w) / (c2 * y3 * z2) -
         c1285 * q / (y3 * z2);
}

// H4 = B4 w/(y^3 z) + (3.15 P9(w) - 12.85 P8(w))/(2y^4 z^2)
template <class T>
T fn_H4(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b4 = from_rat<T>(consts::B()[3]);
  static const T c315 = C<T>("3.15"), c1285 = C<T>("12.85"), c2 = C<T>("2");
  const T y2 = sqr(y);
  return b4 * w / (y2 * y * z) +
         (c315 * eval_poly_t<T>(PolyId::P9, w) -
          c1285 * eval_poly_t<T>(PolyId::P8, w)) /
             (c2 * sqr(y2) * sqr(z));
}

// H5 = B5 w/(y^3 z) + (P9(w) - 3.15 P8(w))/(2y^4 z) - 12.85(w^2-w+1)/(y^4 z)
//    - (w^2-w+1)^2/(y^4 z)
template <class T>
T fn_H5(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b5 = from_rat<T>(consts::B()[4]);
  static const T c315 = C<T>("3.15"), c1285 = C<T>("12.85"), c1 = C<T>("1"),
                 c2 = C<T>("2");
  const T y2 = sqr(y), y4 = sqr(y2);
  const T q = sqr(w) - w + c1;
  return b5 * w / (y2 * y * z) +
         (eval_poly_t<T>(PolyId::P9, w) - c315 * eval_poly_t<T>(PolyId::P8, w)) /
             (c2 * y4 * z) -
         c1285 * q / (y4 * z) - sqr(q) / (y4 * z);
}

// H6 = B6 w/(y^2 z) + S1 w/(y^3 z) - 3.15(w^2-w+1)/(y^2 z^2)
template <class T>
T fn_H6(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b6 = from_rat<T>(consts::B()[5]);
  static const T s1 = from_rat<T>(consts::S1());
  static const T c315 = C<T>("3.15"), c1 = C<T>("1");
  const T y2 = sqr(y);
  const T q = sqr(w) - w + c1;
  return b6 * w / (y2 * z) + s1 * w / (y2 * y * z) - c315 * q / (y2 * sqr(z));
}

// H7 = B7 w/(y^2 z) - 12.85 P8(w)/(2y^3 z^3)
template <class T>
T fn_H7(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b7 = from_rat<T>(consts::B()[6]);
  static const T c1285 = C<T>("12.85"), c2 = C<T>("2");
  const T y2 = sqr(y), z2 = sqr(z);
  return b7 * w / (y2 * z) -
         c1285 * eval_poly_t<T>(PolyId::P8, w) / (c2 * y2 * y * z2 * z);
}

// H8 = B8 w/(y^2 z) - 12.85(w^2-w+1)/(y^2 z^3)
template <class T>
T fn_H8(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b8 = from_rat<T>(consts::B()[7]);
  static const T c1285 = C<T>("12.85"), c1 = C<T>("1");
  const T y2 = sqr(y), z2 = sqr(z);
  const T q = sqr(w) - w + c1;
  return b8 * w / (y2 * z) - c1285 * q / (y2 * z2 * z);
}

// H9 = B9 w/(y^2 z) - 463.2275/z^5
template <class T>
T fn_H9(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b9 = from_rat<T>(consts::B()[8]);
  static const T c = C<T>("463.2275");
  const T z2 = sqr(z);
  return b9 * w / (sqr(y) * z) - c / (sqr(z2) * z);
}

// H10 = B10 w/(y^2 z) - 4585/z^6
template <class T>
T fn_H10(const T& w, const T& y, const T& z) {
  using fdetail::C;
  static const T b10 = from_rat<T>(consts::B()[9]);
  static const T c = C<T>("4585");
  const T z2 = sqr(z);
  return b10 * w / (sqr(y) * z) - c / sqr(z2 * z);
}

// g(w,y) = -(2w^3-18w^2+64.2w-98.9)/(3y)
//        + (w^4-12w^3+63.16w^2-203.17w+258.29)/(2y^2)
//        - (2w^5-10w^4+30w^3-70w^2+90w-1554.24)/(5y^3)
//        - (8w^3-2137.44w^2+2185.45w-37836.25)/(12y^4)
template <class T>
T fn_g_disp(const T& w, const T& y) {
  using fdetail::C;
  static const std::vector<T> n1 = fdetail::coeffs<T>({"2", "-18", "64.2", "-98.9"});
  static const std::vector<T> n2 =
      fdetail::coeffs<T>({"1", "-12", "63.16", "-203.17", "258.29"});
  static const std::vector<T> n3 =
      fdetail::coeffs<T>({"2", "-10", "30", "-70", "90", "-1554.24"});
  static const std::vector<T> n4 =
      fdetail::coeffs<T>({"8", "-2137.44", "2185.45", "-37836.25"});
  static const T c3 = C<T>("3"), c2 = C<T>("2"), c5 = C<T>("5"), c12 = C<T>("12");
  const T y2 = sqr(y);
  return -fdetail::horner(n1, w) / (c3 * y) + fdetail::horner(n2, w) / (c2 * y2) -
         fdetail::horner(n3, w) / (c5 * y2 * y) -
         fdetail::horner(n4, w) / (c12 * sqr(y2));
}

// h(w,y) = -(2w^3-21w^2+82.2w-130.823)/(3y)
//        + (w^4-14w^3+77.16w^2-236.45w+279.57)/(2y^2)
//        - (2w^5-10w^4+35w^3-110w^2+203.205w-1660.65)/(5y^3)
//        + (3w^4-44w^3+2309.28w^2-2568.52w+38175.947)/(12y^4)
template <class T>
T fn_h_disp(const T& w, const T& y) {
  using fdetail::C;
  static const std::vector<T> n1 = fdetail::coeffs<T>({"2", "-21", "82.2", "-130.823"});
  static const std::vector<T> n2 =
      fdetail::coeffs<T>({"1", "-14", "77.16", "-236.45", "279.57"});
  static const std::vector<T> n3 =
      fdetail::coeffs<T>({"2", "-10", "35", "-110", "203.205", "-1660.65"});
  static const std::vector<T> n4 =
      fdetail::coeffs<T>({"3", "-44", "2309.28", "-2568.52", "38175.947"});
  static const T c3 = C<T>("3"), c2 = C<T>("2"), c5 = C<T>("5"), c12 = C<T>("12");
  const T y2 = sqr(y);
  return -fdetail::horner(n1, w) / (c3 * y) + fdetail::horner(n2, w) / (c2 * y2) -
         fdetail::horner(n3, w) / (c5 * y2 * y) +
         fdetail::horner(n4, w) / (c12 * sqr(y2));
}

// ---------------------------------------------------------------------------
// remainder coefficients b0/b1 with their per-step parameter choices
// ---------------------------------------------------------------------------

enum class B0Step { step1, step2 };   // a0 = -w^2 + 6w   |   a0 = 10.641
enum class B1Step { step1, step2, step3 };
// a1 = 0.2y - w^2 + 6w  |  a1 = 11.589  |  a1 = 11.512

// b0 = 10.7 + 2A2/y^3 + 2A3/y^4
//    + (a0/y)(1 - (w-1)/y - (w-2)/y^2 + (2w^2-12w+a0)/(4y^3))
//    - 2 G0(w) y^2
//    + A0((5.7A0+8.7)w^2 - (32A0+38)w + 147.1A0+10.7)/y^2
//    + 2*70.7 A0^3 (w^2-w+1)/y^4 + 2*70.7 A0^4 (w^2-w+1)/y^4
template <class T>
T fn_b0(const T& w, const T& y, B0Step step) {
  using fdetail::C;
  static const T c107 = C<T>("10.7");
  static const T cA2 = from_rat<T>(rat(2) * consts::A2());
  static const T cA3 = from_rat<T>(rat(2) * consts::A3());
  static const T a0c = from_rat<T>(consts::A0());
  static const T q2a =
      from_rat<T>(parse_decimal("5.7") * consts::A0() + parse_decimal("8.7"));
  static const T q2b = from_rat<T>(rat(32) * consts::A0() + rat(38));
  static const T q2c =
      from_rat<T>(parse_decimal("147.1") * consts::A0() + parse_decimal("10.7"));
  static const T c3pow = from_rat<T>(
      rat(2) * parse_decimal("70.7") * consts::A0() * consts::A0() * consts::A0());
  static const T c4pow = from_rat<T>(rat(2) * parse_decimal("70.7") * consts::A0() *
                                     consts::A0() * consts::A0() * consts::A0());
  static const T ca0s2 = C<T>("10.641");
  static const T c1 = C<T>("1"), c2 = C<T>("2"), c4 = C<T>("4"), c6 = C<T>("6"),
                 c12 = C<T>("12");
  const T a0 = (step == B0Step::step1) ? (c6 * w - sqr(w)) : ca0s2;
  const T y2 = sqr(y);
  const T y3 = y2 * y, y4 = sqr(y2);
  const T q = sqr(w) - w + c1;
  return c107 + cA2 / y3 + cA3 / y4 +
         (a0 / y) * (c1 - (w - c1) / y - (w - c2) / y2 +
                     (c2 * sqr(w) - c12 * w + a0) / (c4 * y3)) -
         c2 * fn_G0(w) * y2 + a0c * (q2a * sqr(w) - q2b * w + q2c) / y2 +
         c3pow * q / y4 + c4pow * q / y4;
}

// b1 = 11.3 - 2 G1(w) y^2 + a1/y - 2 A0 S2 w/y
template <class T>
T fn_b1(const T& w, const T& y, B1Step step) {
  using fdetail::C;
  static const T c113 = C<T>("11.3");
  static const T c02 = C<T>("0.2"), c6 = C<T>("6");
  static const T a1s2 = C<T>("11.589"), a1s3 = C<T>("11.512");
  static const T c2 = C<T>("2");
  static const T a0s2 = from_rat<T>(rat(2) * consts::A0() * consts::S2());
  T a1 = (step == B1Step::step1) ? (c02 * y - sqr(w) + c6 * w)
                                 : (step == B1Step::step2 ? a1s2 : a1s3);
  return c113 - c2 * fn_G1(w) * sqr(y) + a1 / y - a0s2 * w / y;
}

// ---------------------------------------------------------------------------
// Cipolla expansion and per-precision (w, y, z) construction
// ---------------------------------------------------------------------------

// order 0: n(y + w - 1); order 1 adds n(w-2)/y; order 2 subtracts
// n(w^2 - 6w + 11)/(2y^2)
template <class T>
T cipolla_estimate(std::uint64_t n, int order) {
  if (n < 2) throw domain_error("cipolla_estimate requires n >= 2");
  if (order < 0 || order > 2)
    throw domain_error("cipolla_estimate order must be 0, 1 or 2");
  static const T c1 = fdetail::C<T>("1"), c2 = fdetail::C<T>("2");
  const T tn = from_rat<T>(rat(static_cast<unsigned long>(n)));
  const T y = log(tn);
  const T w = log(y);
  T est = tn * (y + w - c1);
  if (order >= 1) est = est + tn * (w - c2) / y;
  if (order >= 2)
    est = est - tn * eval_poly_t<T>(PolyId::T2, w) / (c2 * sqr(y));
  return est;
}

// Exact enclosure of an unsigned integer; cheap double path when exact.
template <class T>
T exact_u64(std::uint64_t v) {
  if (v <= (1ull << 53)) return T(static_cast<double>(v));
  return from_rat<T>(rat(static_cast<unsigned long>(v)));
}

template <class T>
struct PointArgs {
  T w, y, z;
};

// w = log log n, y = log n, z = y + w; requires n >= 2
template <class T>
PointArgs<T> point_args(std::uint64_t n) {
  if (n < 2) throw domain_error("point_args requires n >= 2");
  const T tn = from_rat<T>(rat(static_cast<unsigned long>(n)));
  const T y = log(tn);
  const T w = log(y);
  return PointArgs<T>{w, y, y + w};
}

// ---------------------------------------------------------------------------
// dispatchers
// ---------------------------------------------------------------------------

template <class T>
T eval_univariate(FnId id, const T& x) {
  switch (id) {
    case FnId::G0: return fn_G0(x);
    case FnId::G1: return fn_G1(x);
    case FnId::W1: return fn_W1(x);
    case FnId::Phi: return fn_phi(x);
    case FnId::f1: return fn_f1(x);
    case FnId::f2: return fn_f2(x);
    case FnId::f3: return fn_f3(x);
    case FnId::f4: return fn_f4(x);
    case FnId::f5: return fn_f5(x);
    case FnId::f6: return fn_f6(x);
    case FnId::f7: return fn_f7(x);
    case FnId::f8: return fn_f8(x);
    case FnId::f9: return fn_f9(x);
    case FnId::f10: return fn_f10(x);
    default:
      throw domain_error("eval_univariate: " + fn_name(id) + " is not univariate");
  }
}

template <class T>
T eval_bivariate(FnId id, const T& x, const T& t) {
  switch (id) {
    case FnId::g1: return fn_g1(x, t);
    case FnId::h1: return fn_h1(x, t);
    case FnId::alpha: return fn_alpha(x, t);
    case FnId::beta: return fn_beta(x, t);
    case FnId::gamma: return fn_gamma(x, t);
    case FnId::r: return fn_r(x, t);
    default:
      throw domain_error("eval_bivariate: " + fn_name(id) + " is not bivariate");
  }
}

template <class T>
T eval_point_fn(FnId id, const T& w, const T& y, const T& z) {
  switch (id) {
    case FnId::F0: return fn_F0(w, y, z);
    case FnId::F1: return fn_F1(w, y, z);
    case FnId::H1: return fn_H1(w, y, z);
    case FnId::H2: return fn_H2(w, y, z);
    case FnId::H3: return fn_H3(w, y, z);
    case FnId::H4: return fn_H4(w, y, z);
    case FnId::H5: return fn_H5(w, y, z);
    case FnId::H6: return fn_H6(w, y, z);
    case FnId::H7: return fn_H7(w, y, z);
    case FnId::H8: return fn_H8(w, y, z);
    case FnId::H9: return fn_H9(w, y, z);
    case FnId::H10: return fn_H10(w, y, z);
    case FnId::g: return fn_g_disp(w, y);
    case FnId::h: return fn_h_disp(w, y);
    case FnId::b0_step1: return fn_b0(w, y, B0Step::step1);
    case FnId::b0_step2: return fn_b0(w, y, B0Step::step2);
    case FnId::b1_step1: return fn_b1(w, y, B1Step::step1);
    case FnId::b1_step2: return fn_b1(w, y, B1Step::step2);
    case FnId::b1_step3: return fn_b1(w, y, B1Step::step3);
    default:
      throw domain_error("eval_point_fn: " + fn_name(id) +
                         " is not a point function");
  }
}

}  // namespace primebounds
