#include "primebounds/bounds.hpp"

#include <unordered_map>

#include <json.hpp>

namespace primebounds {

namespace {

std::vector<BoundSpec> build_registry() {
  std::vector<BoundSpec> v;
  auto add = [&v](BoundId id, std::string name, BoundTarget target,
                  BoundSide side, bool strict,
                  std::optional<std::uint64_t> threshold, bool conditional,
                  bool takes_z, std::uint64_t domain_min, std::string expr,
                  std::string provenance, std::string notes = "") {
    v.push_back(BoundSpec{id, std::move(name), target, side, strict, threshold,
                          conditional, takes_z, domain_min, std::move(expr),
                          std::move(provenance), std::move(notes)});
  };
  using B = BoundId;
  const auto pn = BoundTarget::pn;
  const auto th = BoundTarget::theta;
  const auto lo = BoundSide::lower;
  const auto up = BoundSide::upper;

  add(B::rosser_lower, "rosser-lower", pn, lo, true, 1, false, false, 1,
      "n log n", "Rosser 1939");
  add(B::eq_1_4_upper, "eq-1.4-upper", pn, up, true, 6, false, false, 2,
      "n(log n + log log n)",
      "threshold via Rosser-Schoenfeld 1962");
  add(B::eq_1_5_lower, "eq-1.5-lower", pn, lo, true, 2, false, false, 2,
      "n(log n + log log n - 1)", "threshold via Dusart 1998");
  add(B::eq_1_6_upper, "eq-1.6-upper", pn, up, true, 4, false, false, 2,
      "n(log n + 2 log log n)", "Rosser 1939");
  add(B::rosser_schoenfeld_lower, "rosser-schoenfeld-lower", pn, lo, true, 2,
      false, false, 2, "n(log n + log log n - 1.5)",
      "Rosser-Schoenfeld 1962");
  add(B::eq_1_7_upper, "eq-1.7-upper", pn, up, true, 20, false, false, 2,
      "n(log n + log log n - 0.5)", "Rosser-Schoenfeld 1962");
  add(B::eq_1_8_lower, "eq-1.8-lower", pn, lo, false, 2, false, false, 2,
      "n(log n + log log n - 1.0072629)", "Robin 1983");
  add(B::massias_robin_lower, "massias-robin-lower", pn, lo, false, 2, false,
      false, 2, "n(log n + log log n - 1.002872)", "Massias-Robin 1996");
  add(B::eq_1_9_upper, "eq-1.9-upper", pn, up, false, 27076, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 1.8)/log n)", "Dusart 1998");
  add(B::eq_1_10_upper, "eq-1.10-upper", pn, up, false, 688383, false, false,
      2, "n(log n + log log n - 1 + (log log n - 2)/log n)", "Dusart 2018");
  add(B::eq_1_11_lower, "eq-1.11-lower", pn, lo, false, 3, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2.1)/log n)", "Dusart 2018");
  add(B::thm_1_1_upper, "thm-1.1-upper", pn, up, true, 46254381, false, false,
      2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n + 10.667)/(2 log^2 n))",
      "main upper estimate, constant 10.667");
  add(B::thm_1_2_lower, "thm-1.2-lower", pn, lo, true, 2, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n + 11.508)/(2 log^2 n))",
      "main lower estimate, constant 11.508");
  add(B::corollary_unconditional_1_12, "corollary-unconditional-1.12", pn, up,
      true, 3468, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n)/(2 log^2 n))",
      "unconditional corollary of the main upper estimate",
      "shares its display label with thm-1.1-upper; distinct ids assigned");
  add(B::kor_after_thm_1_2_lower, "kor-after-thm-1.2-lower", pn, lo, true, 2,
      false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - (log log n)^2/(2 log^2 n))",
      "corollary of the main lower estimate");
  add(B::remark_3_16_lower, "remark-3.16-lower", pn, lo, true, std::nullopt,
      true, false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n + 11)/(2 log^2 n))",
      "sharpened lower constant 11, Riemann-hypothesis conditional",
      "under RH the least valid index r3 satisfies 3.9e30 < r3 <= 3.958e30");
  add(B::theta_lower_11_808, "theta-lower-11.808", th, lo, true, 2, false,
      false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n + 11.808)/(2 log^2 n))",
      "theta(p_n) companion estimate, constant 11.808");
  add(B::theta_upper_10_367, "theta-upper-10.367", th, up, true, 2581, false,
      false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n"
      " - ((log log n)^2 - 6 log log n + 10.367)/(2 log^2 n))",
      "theta(p_n) companion estimate, constant 10.367");
  add(B::theta_dusart_lower_2_04, "theta-dusart-lower-2.04", th, lo, false,
      29844570422670ULL, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2.04)/log n)", "Dusart 2018",
      "threshold is pi(10^15) + 1");
  add(B::theta_dusart_upper_0_782, "theta-dusart-upper-0.782", th, up, false,
      781, false, false, 2,
      "n(log n + log log n - 1 + (log log n - 2)/log n - 0.782/log^2 n)",
      "Dusart 2018");
  add(B::eq_2_12_upper_z, "eq-2.12-upper-z", pn, up, true, 1338564587, false,
      true, 1,
      "n(log p_n - 1 - 1/log p_n - 2.85/log^2 p_n - 13.15/log^3 p_n"
      " - 70.7/log^4 p_n - 458.7275/log^5 p_n - 3428.7225/log^6 p_n)",
      "sixth-order reciprocal-log upper form in log p_n",
      "intermediate inequality; checked against the pair (n, p_n)");
  add(B::eq_3_7_lower_z, "eq-3.7-lower-z", pn, lo, true, 1479240488, false,
      true, 1,
      "n(log p_n - 1 - 1/log p_n - 3.15/log^2 p_n - 12.85/log^3 p_n"
      " - 71.3/log^4 p_n - 463.2275/log^5 p_n - 4585/log^6 p_n)",
      "sixth-order reciprocal-log lower form in log p_n",
      "intermediate inequality; checked against the pair (n, p_n)");
  return v;
}

const std::unordered_map<std::string, BoundId>& name_index() {
  static const std::unordered_map<std::string, BoundId> idx = [] {
    std::unordered_map<std::string, BoundId> m;
    for (const BoundSpec& s : bound_registry()) m.emplace(s.name, s.id);
    return m;
  }();
  return idx;
}

void require_theta(const BoundSpec& s, const PrimePoint& pt) {
  if (s.target == BoundTarget::theta && !pt.theta_valid)
    throw argument_error("bound " + s.name +
                         " targets theta(p_n); the point has no theta");
}

template <class T>
Interval margin_tier(const BoundSpec& s, const PrimePoint& pt) {
  const T lhs = s.target == BoundTarget::theta ? T(pt.theta)
                                               : exact_u64<T>(pt.p);
  const T rhs = s.takes_z ? bound_rhs_z<T>(s.id, pt.n, pt.p)
                          : bound_rhs<T>(s.id, pt.n);
  return ((s.side == BoundSide::lower) ? lhs - rhs : rhs - lhs).to_interval();
}

BoundId require_name(const std::string& name) {
  auto id = bound_from_name(name);
  if (!id) throw argument_error("unknown bound id: " + name);
  return *id;
}

}  // namespace

const std::vector<BoundSpec>& bound_registry() {
  static const std::vector<BoundSpec> reg = build_registry();
  return reg;
}

const BoundSpec& bound_spec(BoundId id) {
  return bound_registry()[static_cast<std::size_t>(id)];
}

const BoundSpec* bound_spec_by_name(const std::string& name) {
  auto it = name_index().find(name);
  return it == name_index().end() ? nullptr : &bound_spec(it->second);
}

const std::string& bound_name(BoundId id) { return bound_spec(id).name; }

std::optional<BoundId> bound_from_name(const std::string& name) {
  auto it = name_index().find(name);
  if (it == name_index().end()) return std::nullopt;
  return it->second;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "indeterminate";
  }
}

Verdict classify_margin(const Interval& m, bool strict) {
  if (strict) {
    if (m.lo > 0.0) return Verdict::holds;
    if (m.hi <= 0.0) return Verdict::fails;
  } else {
    if (m.lo >= 0.0) return Verdict::holds;
    if (m.hi < 0.0) return Verdict::fails;
  }
  return Verdict::indeterminate;
}

std::string bounds_registry_json() {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const BoundSpec& s : bound_registry()) {
    nlohmann::ordered_json e;
    e["id"] = s.name;
    e["target"] = s.target == BoundTarget::pn ? "p_n" : "theta_pn";
    e["side"] = s.side == BoundSide::lower ? "lower" : "upper";
    e["strict"] = s.strict;
    if (s.claimed_threshold)
      e["claimed_threshold"] = *s.claimed_threshold;
    else
      e["claimed_threshold"] = "conjectural/none";
    e["conditional"] = s.conditional;
    e["takes_z"] = s.takes_z;
    e["domain_min"] = s.domain_min;
    e["expr"] = s.expr;
    e["provenance"] = s.provenance;
    if (!s.notes.empty()) e["notes"] = s.notes;
    entries.push_back(std::move(e));
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["bounds"] = std::move(entries);
  return doc.dump(2);
}

Interval eval_bound(BoundId id, std::uint64_t n) {
  return bound_rhs<Interval>(id, n);
}

Interval eval_bound(const std::string& name, std::uint64_t n) {
  return eval_bound(require_name(name), n);
}

Interval eval_bound_z(BoundId id, std::uint64_t n, std::uint64_t p) {
  return bound_rhs_z<Interval>(id, n, p);
}

Interval eval_bound_z(const std::string& name, std::uint64_t n,
                      std::uint64_t p) {
  return eval_bound_z(require_name(name), n, p);
}

Interval bound_margin(BoundId id, const PrimePoint& pt) {
  const BoundSpec& s = bound_spec(id);
  require_theta(s, pt);
  const Interval lhs = s.target == BoundTarget::theta
                           ? pt.theta
                           : exact_u64<Interval>(pt.p);
  Interval rhs;
  if (s.takes_z) {
    rhs = bound_rhs_z<Interval>(id, pt.n, pt.p);
  } else {
    if (pt.n < s.domain_min)
      throw argument_error("bound " + s.name + " needs n >= " +
                           std::to_string(s.domain_min));
    rhs = bound_rhs_wyz(id, exact_u64<Interval>(pt.n), pt.y, pt.w);
  }
  return (s.side == BoundSide::lower) ? lhs - rhs : rhs - lhs;
}

Interval bound_margin_escalated(BoundId id, const PrimePoint& pt, int tier) {
  const BoundSpec& s = bound_spec(id);
  require_theta(s, pt);
  if (tier == 1) return margin_tier<DDInterval>(s, pt);
  if (tier == 2) return margin_tier<MPInterval>(s, pt);
  throw argument_error("bound_margin_escalated: tier must be 1 or 2");
}

CheckOutcome check_bound(BoundId id, const PrimePoint& pt,
                         PrecisionMode mode) {
  const BoundSpec& s = bound_spec(id);
  CheckOutcome out;
  out.margin = bound_margin(id, pt);
  out.verdict = classify_margin(out.margin, s.strict);
  for (int tier = 1;
       tier <= 2 && out.verdict == Verdict::indeterminate &&
       mode == PrecisionMode::escalating;
       ++tier) {
    out.escalations = tier;
    out.margin = bound_margin_escalated(id, pt, tier);
    out.verdict = classify_margin(out.margin, s.strict);
  }
  return out;
}

CheckOutcome check_bound(const std::string& name, const PrimePoint& pt,
                         PrecisionMode mode) {
  return check_bound(require_name(name), pt, mode);
}

}  // namespace primebounds
