#pragma once
// The fixed polynomial registry: P1..P12, Q1..Q9, T1, T2 with exact rational
// coefficients transcribed verbatim (decimal literals parsed exactly).
// Q7/Q8/Q9 are stored as frozen expanded coefficient lists; the test suite
// re-derives them from their defining combinations via the exact polynomial
// algebra below, so the frozen lists and the algebra check each other.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "primebounds/rational.hpp"

namespace primebounds {

enum class PolyId {
  P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12,
  Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8, Q9,
  T1, T2,
};

inline constexpr std::array<PolyId, 23> kAllPolyIds = {
    PolyId::P1, PolyId::P2, PolyId::P3, PolyId::P4,  PolyId::P5,  PolyId::P6,
    PolyId::P7, PolyId::P8, PolyId::P9, PolyId::P10, PolyId::P11, PolyId::P12,
    PolyId::Q1, PolyId::Q2, PolyId::Q3, PolyId::Q4,  PolyId::Q5,  PolyId::Q6,
    PolyId::Q7, PolyId::Q8, PolyId::Q9, PolyId::T1,  PolyId::T2,
};

std::string poly_name(PolyId id);
bool poly_id_from_name(const std::string& name, PolyId& out);

// Exact polynomial with rational coefficients, descending degree order.
struct Poly {
  std::vector<rat> c;

  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

  rat eval_exact(const rat& x) const {
    rat acc = 0;
    for (const rat& k : c) acc = acc * x + k;
    return acc;
  }

  bool operator==(const Poly& o) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const rat& s) const;

  static Poly from_strings(std::initializer_list<const char*> coeffs);
};

const Poly& poly(PolyId id);

// Per-number-type coefficient caches; built once, then read-only.
template <class T>
const std::vector<T>& poly_coeffs(PolyId id);

template <class T>
T eval_poly_t(PolyId id, const T& x) {
  const std::vector<T>& c = poly_coeffs<T>(id);
  T acc = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
  return acc;
}

inline Interval eval_poly(PolyId id, const Interval& x) {
  return eval_poly_t<Interval>(id, x);
}

}  // namespace primebounds
