#include "primebounds/predicates.hpp"

#include <unordered_map>

#include <json.hpp>

namespace primebounds {

namespace {

std::vector<PredicateSpec> build_registry() {
  std::vector<PredicateSpec> v;
  auto add = [&v](PredicateId id, std::string name, bool strict,
                  std::uint64_t threshold, std::uint64_t domain_min,
                  std::string expr, std::string provenance) {
    v.push_back(PredicateSpec{id, std::move(name), strict, threshold,
                              domain_min, std::move(expr),
                              std::move(provenance)});
  };
  using P = PredicateId;
  const char* recip_lo =
      "1/log p_n >= 1/log n - w/log^2 n + (w^2-w+1)/(log^2 n log p_n)";
  const char* recip_up =
      "1/log p_n <= 1/log n - w/log^2 n + (w^2-w+1)/(log^2 n log p_n)";

  add(P::prop_2_4, "prop-2.4", false, 688383, 2,
      std::string(recip_lo) +
          " + [P1/(2y^3) - P2/(6y^4) + P3/(12y^5) - P4/(20y^6)]/log p_n",
      "fourth-order lower estimate for 1/log p_n");
  add(P::kor_2_5, "kor-2.5", false, 456914, 2,
      std::string(recip_lo) + " + [P1/(2y^3) - P2/(6y^4)]/log p_n",
      "second-order lower estimate for 1/log p_n");
  add(P::kor_2_6, "kor-2.6", false, 71, 2, recip_lo,
      "leading-order lower estimate for 1/log p_n");
  add(P::prop_3_3, "prop-3.3", false, 2, 2,
      std::string(recip_up) +
          " + [P8/(2y^3) - (P9/y^4 + P10/y^5 + P11/y^6)/2]/log p_n",
      "third-order upper estimate for 1/log p_n");
  add(P::kor_3_4, "kor-3.4", false, 2, 2,
      std::string(recip_up) +
          " + [P8/(2y^3) - (P9/y^4 + P10/y^5)/2]/log p_n",
      "second-order upper estimate for 1/log p_n");
  add(P::kor_3_5, "kor-3.5", false, 2, 2,
      std::string(recip_up) + " + [P8/(2y^3) - P9/(2y^4)]/log p_n",
      "first-order upper estimate for 1/log p_n");
  add(P::lemma_2_2, "lemma-2.2", false, 1338564587, 2,
      "log n >= 0.87 log p_n", "log-ratio lower bound (F0 >= 0)");
  add(P::lemma_2_3, "lemma-2.3", false, 100720878, 2, "F1(n) >= 0",
      "auxiliary positivity with constant A1 = 155.32");
  add(P::lemma_3_1, "lemma-3.1", false, 6, 2,
      "(12.85 P9(w) + 3.15 P10(w) + P11(w))/(2y^6 z) >= 0",
      "polynomial positivity helper");
  add(P::lemma_3_2, "lemma-3.2", false, 17, 2,
      "P9 P12/(4y^7 z) + 12.85 P10/(2y^7 z) + 3.15 P11/(2y^7 z)"
      " + 3.15 P11/(2y^6 z^2) >= (w-2)^4/(4y^8)",
      "polynomial positivity helper");
  add(P::lemma_5_4, "lemma-5.4", false, 3, 2,
      "Phi(log log n) <= log p_n, checked as"
      " p_n/(n log n) >= 1 + (w-1)/y + (w-2.1)/y^2",
      "auxiliary-function comparison");
  static const std::uint64_t kM[10] = {
      1359056314ULL, 1471247583ULL, 1468111666ULL, 1383728153ULL,
      1462324835ULL, 5ULL,          1075859481ULL, 1445815789ULL,
      1479240488ULL, 1447605594ULL};
  static const char* kB[10] = {"0.27",  "4.23",   "1.575", "0.058", "2.24",
                               "0.105", "0.0026", "0.052", "0.1955", "0.08"};
  const P hs[10] = {P::h1, P::h2, P::h3, P::h4, P::h5,
                    P::h6, P::h7, P::h8, P::h9, P::h10};
  for (int i = 0; i < 10; ++i) {
    add(hs[i], "h" + std::to_string(i + 1), false, kM[i], 2,
        "H" + std::to_string(i + 1) + "(n) >= 0 with B" +
            std::to_string(i + 1) + " = " + kB[i],
        "positivity of H" + std::to_string(i + 1));
  }
  add(P::eq_2_12_upper_z, "eq-2.12-upper-z", true, 1338564587, 1,
      "p_n < sixth-order reciprocal-log upper form in log p_n",
      "catalog entry eq-2.12-upper-z checked as a (n, p_n) predicate");
  add(P::eq_3_7_lower_z, "eq-3.7-lower-z", true, 1479240488, 1,
      "p_n > sixth-order reciprocal-log lower form in log p_n",
      "catalog entry eq-3.7-lower-z checked as a (n, p_n) predicate");
  return v;
}

const std::unordered_map<std::string, PredicateId>& name_index() {
  static const std::unordered_map<std::string, PredicateId> idx = [] {
    std::unordered_map<std::string, PredicateId> m;
    for (const PredicateSpec& s : predicate_registry()) m.emplace(s.name, s.id);
    return m;
  }();
  return idx;
}

}  // namespace

const std::vector<PredicateSpec>& predicate_registry() {
  static const std::vector<PredicateSpec> reg = build_registry();
  return reg;
}

const PredicateSpec& predicate_spec(PredicateId id) {
  return predicate_registry()[static_cast<std::size_t>(id)];
}

const PredicateSpec* predicate_spec_by_name(const std::string& name) {
  auto it = name_index().find(name);
  return it == name_index().end() ? nullptr : &predicate_spec(it->second);
}

const std::string& predicate_name(PredicateId id) {
  return predicate_spec(id).name;
}

std::string predicates_registry_json() {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const PredicateSpec& s : predicate_registry()) {
    nlohmann::ordered_json e;
    e["id"] = s.name;
    e["strict"] = s.strict;
    e["claimed_threshold"] = s.claimed_threshold;
    e["domain_min"] = s.domain_min;
    e["expr"] = s.expr;
    e["provenance"] = s.provenance;
    entries.push_back(std::move(e));
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["predicates"] = std::move(entries);
  return doc.dump(2);
}

std::optional<PredicateId> predicate_from_name(const std::string& name) {
  auto it = name_index().find(name);
  if (it == name_index().end()) return std::nullopt;
  return it->second;
}

Interval predicate_margin(PredicateId id, const PrimePoint& pt) {
  const PredicateSpec& s = predicate_spec(id);
  if (pt.n < s.domain_min)
    throw argument_error("predicate " + s.name + " needs n >= " +
                         std::to_string(s.domain_min));
  if (id == PredicateId::eq_2_12_upper_z)
    return eval_bound_z(BoundId::eq_2_12_upper_z, pt.n, pt.p) -
           Interval(static_cast<double>(pt.p));
  if (id == PredicateId::eq_3_7_lower_z)
    return Interval(static_cast<double>(pt.p)) -
           eval_bound_z(BoundId::eq_3_7_lower_z, pt.n, pt.p);
  return predicate_margin_wyz(id, Interval(static_cast<double>(pt.n)),
                              Interval(static_cast<double>(pt.p)), pt.w, pt.y,
                              pt.z);
}

Interval predicate_margin_escalated(PredicateId id, const PrimePoint& pt,
                                    int tier) {
  if (tier == 1)
    return predicate_margin_t<DDInterval>(id, pt.n, pt.p).to_interval();
  if (tier == 2)
    return predicate_margin_t<MPInterval>(id, pt.n, pt.p).to_interval();
  throw argument_error("predicate_margin_escalated: tier must be 1 or 2");
}

CheckOutcome check_predicate(PredicateId id, const PrimePoint& pt,
                             PrecisionMode mode) {
  const PredicateSpec& s = predicate_spec(id);
  CheckOutcome out;
  out.margin = predicate_margin(id, pt);
  out.verdict = classify_margin(out.margin, s.strict);
  for (int tier = 1;
       tier <= 2 && out.verdict == Verdict::indeterminate &&
       mode == PrecisionMode::escalating;
       ++tier) {
    out.escalations = tier;
    out.margin = predicate_margin_escalated(id, pt, tier);
    out.verdict = classify_margin(out.margin, s.strict);
  }
  return out;
}

CheckOutcome check_predicate(const std::string& name, const PrimePoint& pt,
                             PrecisionMode mode) {
  auto id = predicate_from_name(name);
  if (!id) throw argument_error("unknown predicate id: " + name);
  return check_predicate(*id, pt, mode);
}

}  // namespace primebounds
