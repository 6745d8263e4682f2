#include "primebounds/functions.hpp"

#include <stdexcept>

namespace primebounds {

namespace {

std::vector<FnInfo> build_registry() {
  std::vector<FnInfo> v;
  auto uni = [&](FnId id, const char* name, const char* prov, double lo,
                 double hi) {
    FnInfo f;
    f.id = id;
    f.name = name;
    f.arity = 1;
    f.domain = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    f.provenance = prov;
    f.lo = lo;
    f.hi = hi;
    v.push_back(std::move(f));
  };
  auto biv = [&](FnId id, const char* name, const char* prov, double lo,
                 double hi) {
    FnInfo f;
    f.id = id;
    f.name = name;
    f.arity = 2;
    f.domain = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]^2";
    f.provenance = prov;
    f.lo = lo;
    f.hi = hi;
    v.push_back(std::move(f));
  };
  auto pt = [&](FnId id, const char* name, const char* prov) {
    FnInfo f;
    f.id = id;
    f.name = name;
    f.arity = 3;
    f.domain = "n in [2, 4294967296]";
    f.provenance = prov;
    f.n_lo = 2;
    f.n_hi = 1ull << 32;
    v.push_back(std::move(f));
  };

  uni(FnId::G0, "G0",
      "exponential-polynomial kernel of the upper-bound remainder analysis", 0.0,
      30.0);
  uni(FnId::G1, "G1",
      "exponential-polynomial kernel of the lower-bound remainder analysis", 0.0,
      30.0);
  uni(FnId::W1, "W1",
      "positivity witness for the leading coefficient of the first kernel grid",
      0.0, 30.0);
  uni(FnId::Phi, "Phi",
      "logarithm of the second-order lower estimate of the n-th prime, "
      "as a function of log log n",
      1.0, 30.0);
  const char* tail = "tail positivity function for a coefficient-domination check";
  uni(FnId::f1, "f1", tail, 3.05, 30.0);
  uni(FnId::f2, "f2", tail, 3.05, 30.0);
  uni(FnId::f3, "f3", tail, 3.05, 30.0);
  uni(FnId::f4, "f4", tail, 3.05, 30.0);
  uni(FnId::f5, "f5", tail, 3.05, 30.0);
  uni(FnId::f6, "f6",
      "diagonal of the reciprocal-sum comparison bracket r(x, t)", 3.05, 30.0);
  uni(FnId::f7, "f7", tail, 3.05, 30.0);
  uni(FnId::f8, "f8", tail, 3.05, 30.0);
  uni(FnId::f9, "f9", tail, 3.05, 30.0);
  uni(FnId::f10, "f10", tail, 3.05, 30.0);

  biv(FnId::g1, "g1",
      "bivariate bracket form of the first upper-bound kernel grid", 0.0, 7.0);
  biv(FnId::h1, "h1",
      "bivariate bracket form of the second upper-bound kernel grid", 0.0, 8.0);
  biv(FnId::alpha, "alpha",
      "bivariate bracket form of the lower-bound kernel grid, step 1", 3.05, 7.0);
  biv(FnId::beta, "beta",
      "bivariate bracket form of the lower-bound kernel grid, step 2", 3.05, 7.0);
  biv(FnId::gamma, "gamma",
      "bivariate bracket form of the lower-bound kernel grid, step 3", 3.05, 7.0);
  biv(FnId::r, "r", "bivariate bracket form of the reciprocal-sum comparison",
      0.7, 3.5);

  pt(FnId::F0, "F0", "leading ratio-comparison functional y - 0.87 z");
  pt(FnId::F1, "F1", "second ratio-comparison functional (A1 = 155.32)");
  const char* dom = "coefficient-domination functional of the term-by-term "
                    "comparison of the two estimate expansions";
  pt(FnId::H1, "H1", dom);
  pt(FnId::H2, "H2", dom);
  pt(FnId::H3, "H3", dom);
  pt(FnId::H4, "H4", dom);
  pt(FnId::H5, "H5", dom);
  pt(FnId::H6, "H6", dom);
  pt(FnId::H7, "H7", dom);
  pt(FnId::H8, "H8", dom);
  pt(FnId::H9, "H9", dom);
  pt(FnId::H10, "H10", dom);
  pt(FnId::g, "g", "remainder display of the first upper-bound step");
  pt(FnId::h, "h", "remainder display of the second upper-bound step");
  pt(FnId::b0_step1, "b0.step1",
     "upper-bound remainder coefficient with a0 = 6w - w^2");
  pt(FnId::b0_step2, "b0.step2",
     "upper-bound remainder coefficient with a0 = 10.641");
  pt(FnId::b1_step1, "b1.step1",
     "lower-bound remainder coefficient with a1 = 0.2y - w^2 + 6w");
  pt(FnId::b1_step2, "b1.step2",
     "lower-bound remainder coefficient with a1 = 11.589");
  pt(FnId::b1_step3, "b1.step3",
     "lower-bound remainder coefficient with a1 = 11.512");
  return v;
}

}  // namespace

const std::vector<FnInfo>& fn_registry() {
  static const std::vector<FnInfo> reg = build_registry();
  return reg;
}

std::string fn_name(FnId id) {
  for (const FnInfo& f : fn_registry())
    if (f.id == id) return f.name;
  throw std::logic_error("fn_name: unregistered id");
}

bool fn_id_from_name(const std::string& name, FnId& out) {
  for (const FnInfo& f : fn_registry())
    if (f.name == name) {
      out = f.id;
      return true;
    }
  return false;
}

const FnInfo& fn_info(FnId id) {
  for (const FnInfo& f : fn_registry())
    if (f.id == id) return f;
  throw std::logic_error("fn_info: unregistered id");
}

}  // namespace primebounds
