#pragma once
// Named proof constants, all exact rationals. A2/A3 are stored as frozen
// exact values of their defining products; the test suite recomputes them
// from the definitions in rational arithmetic (zero tolerance).

#include <array>
#include <cstdint>

#include "primebounds/rational.hpp"

namespace primebounds {
namespace consts {

inline const rat& A0() { static const rat v = parse_decimal("0.87"); return v; }
inline const rat& A1() { static const rat v = parse_decimal("155.32"); return v; }
// A2 = (458.7275 - A1) * A0^5
inline const rat& A2() {
  static const rat v("604898581989141/4000000000000");
  return v;
}
// A3 = 3428.7225 * A0^6
inline const rat& A3() {
  static const rat v("594713564795632401/400000000000000");
  return v;
}

inline const std::array<rat, 10>& B() {
  static const std::array<rat, 10> v = {
      parse_decimal("0.27"),   parse_decimal("4.23"),  parse_decimal("1.575"),
      parse_decimal("0.058"),  parse_decimal("2.24"),  parse_decimal("0.105"),
      parse_decimal("0.0026"), parse_decimal("0.052"), parse_decimal("0.1955"),
      parse_decimal("0.08")};
  return v;
}

// S1 = 12.85 - (B1+..+B5) = 4.477;  S2 = 3.15 - (B6+..+B10) = 2.7149
inline const rat& S1() { static const rat v = parse_decimal("4.477"); return v; }
inline const rat& S2() { static const rat v = parse_decimal("2.7149"); return v; }

// claimed minimal thresholds M_i for H_i >= 0, and headline thresholds
inline constexpr std::array<std::uint64_t, 10> kM = {
    1359056314, 1471247583, 1468111666, 1383728153, 1462324835,
    5,          1075859481, 1445815789, 1479240488, 1447605594};
inline constexpr std::uint64_t kN0 = 1338564587;   // minimal n with F0 >= 0
inline constexpr std::uint64_t kN1 = 100720878;    // minimal n with F1 >= 0
inline constexpr std::uint64_t kThm11Threshold = 46254381;

// coefficient set of the z-form upper estimate:
//   n(z - 1 - 1/z - 2.85/z^2 - 13.15/z^3 - 70.7/z^4 - 458.7275/z^5 - 3428.7225/z^6)
inline const std::array<rat, 6>& zcoef_upper() {
  static const std::array<rat, 6> v = {
      rat(1),                   parse_decimal("2.85"),
      parse_decimal("13.15"),   parse_decimal("70.7"),
      parse_decimal("458.7275"), parse_decimal("3428.7225")};
  return v;
}
// coefficient set of the z-form lower estimate (3.15/12.85/71.3/463.2275/4585)
inline const std::array<rat, 6>& zcoef_lower() {
  static const std::array<rat, 6> v = {
      rat(1),                    parse_decimal("3.15"),
      parse_decimal("12.85"),    parse_decimal("71.3"),
      parse_decimal("463.2275"), parse_decimal("4585")};
  return v;
}

}  // namespace consts
}  // namespace primebounds
