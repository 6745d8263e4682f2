#include "primebounds/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "primebounds/dual.hpp"

namespace primebounds {

std::string poly_name(PolyId id) {
  static const char* names[] = {"P1", "P2", "P3", "P4",  "P5",  "P6", "P7", "P8",
                                "P9", "P10", "P11", "P12", "Q1", "Q2", "Q3", "Q4",
                                "Q5", "Q6", "Q7", "Q8",  "Q9",  "T1", "T2"};
  return names[static_cast<int>(id)];
}

bool poly_id_from_name(const std::string& name, PolyId& out) {
  for (PolyId id : kAllPolyIds)
    if (poly_name(id) == name) {
      out = id;
      return true;
    }
  return false;
}

bool Poly::operator==(const Poly& o) const {
  // compare with leading-zero normalization
  auto strip = [](const std::vector<rat>& v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] == 0) ++i;
    return std::vector<rat>(v.begin() + i, v.end());
  };
  return strip(c) == strip(o.c);
}

Poly Poly::operator+(const Poly& o) const {
  const std::size_t n = std::max(c.size(), o.c.size());
  Poly r;
  r.c.assign(n, rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.c[n - c.size() + i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[n - o.c.size() + i] += o.c[i];
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(rat(-1)); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (c.empty() || o.c.empty()) return r;
  r.c.assign(c.size() + o.c.size() - 1, rat(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  return r;
}

Poly Poly::scaled(const rat& s) const {
  Poly r = *this;
  for (rat& k : r.c) k *= s;
  return r;
}

Poly Poly::from_strings(std::initializer_list<const char*> coeffs) {
  Poly p;
  for (const char* s : coeffs) p.c.push_back(parse_decimal(s));
  return p;
}

namespace {

std::map<PolyId, Poly> build_registry() {
  std::map<PolyId, Poly> m;
  auto put = [&](PolyId id, std::initializer_list<const char*> cs) {
    m[id] = Poly::from_strings(cs);
  };
  put(PolyId::P1, {"3", "-6", "5"});
  put(PolyId::P2, {"5", "-24", "39", "-14"});
  put(PolyId::P3, {"7", "-48", "120", "-124", "51"});
  put(PolyId::P4, {"9", "-80", "280", "-480", "405", "-124"});
  put(PolyId::P5, {"11", "-120", "540", "-1280", "1680", "-1146", "325"});
  put(PolyId::P6, {"13", "-168", "924", "-2800", "5040", "-5376", "3143", "-762"});
  put(PolyId::P7, {"4", "-84", "630", "-2492", "5915", "-8764", "7966", "-4064", "896"});
  put(PolyId::P8, {"3", "-6", "5.2"});
  put(PolyId::P9, {"1", "-6", "11.4", "-4.2"});
  put(PolyId::P10, {"2", "-7.2", "8.4", "-4.41"});
  put(PolyId::P11, {"1", "-4.2", "4.41", "0"});
  put(PolyId::P12, {"9.3", "-12.3", "11.5"});
  put(PolyId::Q1, {"12", "-138", "676", "-1819", "2914", "-2782", "1468", "-328"});
  put(PolyId::Q2, {"90", "-700", "2405", "-4506", "4801", "-2732", "648"});
  put(PolyId::Q3, {"50", "-275", "662", "-833", "538", "-140"});
  put(PolyId::Q4, {"30", "-114", "181", "-136", "40"});
  put(PolyId::Q5, {"18", "-43", "38", "-12"});
  put(PolyId::Q6, {"7", "-8", "2"});
  // Q7..Q9: frozen expansions of
  //   Q7 = (x^2-x+1)P12 + (x^2-x+1)P8 - 3.15 P9 - P10 + 12.85 P8
  //   Q8 = 3.15 P10 + 12.85 P9
  //   Q9 = 2(x^2-x+1)P9 - P8 P12
  put(PolyId::Q7, {"12.3", "-35.75", "111.95", "-156.41", "101.16"});
  put(PolyId::Q8, {"19.15", "-99.78", "172.95", "-67.8615"});
  put(PolyId::Q9, {"2", "-41.9", "129.5", "-199.86", "164.16", "-68.2"});
  put(PolyId::T1, {"1", "-2"});
  put(PolyId::T2, {"1", "-6", "11"});
  return m;
}

}  // namespace

const Poly& poly(PolyId id) {
  static const std::map<PolyId, Poly> registry = build_registry();
  return registry.at(id);
}

template <class T>
const std::vector<T>& poly_coeffs(PolyId id) {
  static const std::array<std::vector<T>, kAllPolyIds.size()> cache = [] {
    std::array<std::vector<T>, kAllPolyIds.size()> a;
    for (PolyId pid : kAllPolyIds) {
      std::vector<T> v;
      for (const rat& q : poly(pid).c) v.push_back(from_rat<T>(q));
      a[static_cast<std::size_t>(pid)] = std::move(v);
    }
    return a;
  }();
  return cache[static_cast<std::size_t>(id)];
}

template const std::vector<Interval>& poly_coeffs<Interval>(PolyId);
template const std::vector<DDInterval>& poly_coeffs<DDInterval>(PolyId);
template const std::vector<MPInterval>& poly_coeffs<MPInterval>(PolyId);
template const std::vector<DualInterval>& poly_coeffs<DualInterval>(PolyId);

}  // namespace primebounds
