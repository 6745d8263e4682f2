// primebounds CLI: prime queries, bound/predicate verification campaigns,
// grid certification, and report generation on top of the library.
//
// Exit codes: 0 clean, 1 violations found, 2 inconclusive (unresolved
// indeterminates / depth-limited grid cells), 3 capacity, configuration, or
// usage errors.  Every flag can also be set via PRIMEBOUNDS_* environment
// variables (PRIMEBOUNDS_CEILING, PRIMEBOUNDS_WORKERS, ...).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primebounds/bounds.hpp"
#include "primebounds/constants.hpp"
#include "primebounds/engine.hpp"
#include "primebounds/grid.hpp"
#include "primebounds/predicates.hpp"
#include "primebounds/theta.hpp"
#include "primebounds/verify.hpp"

namespace {

using namespace primebounds;

struct Cli {
  RunConfig cfg;
  std::unique_ptr<PrimeEngine> engine_;

  PrimeEngine& engine() {
    if (!engine_) {
      cfg.validate();
      engine_ = std::make_unique<PrimeEngine>(cfg.ceiling, cfg.segment_bytes);
    }
    return *engine_;
  }
  VerifyOptions verify_opts() const {
    VerifyOptions o;
    o.precision = cfg.precision;
    o.chunk_size = cfg.chunk_size;
    o.workers = cfg.workers;
    o.checkpoint_dir = cfg.checkpoint_dir;
    o.resume = cfg.resume;
    return o;
  }
};

// range argument: "lo:hi", "lo..hi", or a single index
void parse_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
  std::string a = s, b = s;
  const auto colon = s.find(':');
  const auto dots = s.find("..");
  if (colon != std::string::npos) {
    a = s.substr(0, colon);
    b = s.substr(colon + 1);
  } else if (dots != std::string::npos) {
    a = s.substr(0, dots);
    b = s.substr(dots + 2);
  }
  try {
    std::size_t used = 0;
    lo = std::stoull(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    hi = std::stoull(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
  } catch (const std::exception&) {
    throw argument_error("cannot parse range \"" + s +
                         "\" (expected lo:hi or a single index)");
  }
}

std::string iv_human(const Interval& v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.15g  width %.2e  [%.17g, %.17g]", v.mid(),
                v.width(), v.lo, v.hi);
  return buf;
}

int exit_for(const VerificationReport& r) {
  if (r.violation_count) return 1;
  if (r.inconclusive()) return 2;
  return 0;
}

int exit_for(const GridReport& r) {
  if (r.failure_count == 0) return 0;
  return r.inconclusive() ? 2 : 1;
}

void print_report(const Cli& cli, const VerificationReport& r) {
  if (cli.cfg.output == OutputMode::json) {
    std::printf("%s\n", report_json(r).c_str());
    return;
  }
  if (cli.cfg.output == OutputMode::csv) {
    std::fputs(report_csv(r).c_str(), stdout);
    return;
  }
  std::printf("subject %s  range [%llu, %llu]  checked %llu\n",
              r.subject.c_str(), (unsigned long long)r.n_lo,
              (unsigned long long)r.n_hi, (unsigned long long)r.count_checked);
  std::printf("violations %llu%s  escalated %llu  indeterminate %llu\n",
              (unsigned long long)r.violation_count,
              r.last_violation
                  ? ("  (last " + std::to_string(*r.last_violation) + ")")
                        .c_str()
                  : "",
              (unsigned long long)r.escalated_count,
              (unsigned long long)r.indeterminate_count);
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i)
    std::printf("  violation n=%llu  margin [%.17g, %.17g]\n",
                (unsigned long long)r.violations[i].n,
                r.violations[i].margin.lo, r.violations[i].margin.hi);
  if (r.violations.size() > shown)
    std::printf("  ... %llu more violations (see --output json/csv)\n",
                (unsigned long long)(r.violation_count - shown));
  if (r.min_margin.valid())
    std::printf("min margin at n=%llu: %s\n",
                (unsigned long long)r.min_margin_n,
                iv_human(r.min_margin).c_str());
  if (r.theta_envelope) {
    const ThetaEnvelope& e = *r.theta_envelope;
    std::printf("theta envelope (reported, not asserted): holds %llu, "
                "violations %llu, indeterminate %llu, worst n=%llu ratio "
                "<= %.6g\n",
                (unsigned long long)e.holds, (unsigned long long)e.violations,
                (unsigned long long)e.indeterminate,
                (unsigned long long)e.worst_n, e.worst_ratio.hi);
  }
  const char* verdict = r.violation_count      ? "violations found"
                        : r.inconclusive()     ? "inconclusive"
                                               : "clean";
  std::printf("verdict: %s  (%.2f s)\n", verdict, r.wall_time_s);
}

void print_grid_report(const Cli& cli, const GridReport& r) {
  if (cli.cfg.output == OutputMode::json) {
    std::printf("%s\n", grid_report_json(r).c_str());
    return;
  }
  std::printf("grid %s: cells %llu, failures %llu%s, refined %llu (max depth "
              "%d)\n",
              r.grid.c_str(), (unsigned long long)r.cells_checked,
              (unsigned long long)r.failure_count,
              r.inconclusive() ? " (inconclusive)" : "",
              (unsigned long long)r.refined, r.max_depth_used);
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i)
    std::printf("  cell %llu: [%.17g, %.17g]%s\n",
                (unsigned long long)r.failures[i].cell, r.failures[i].value.lo,
                r.failures[i].value.hi,
                r.failures[i].definite() ? " (definite)" : " (straddle)");
  if (r.min_lower_bound.valid())
    std::printf("  min lower bound %.17g at cell %llu\n", r.min_lower_bound.lo,
                (unsigned long long)r.min_cell);
  std::printf("  %s  (%.2f s)\n", r.passed() ? "PASS" : "FAIL",
              r.wall_time_s);
}

// --- nth / pi / theta -------------------------------------------------------

int cmd_nth(Cli& cli, std::uint64_t n) {
  const std::uint64_t p = cli.engine().nth_prime(n);
  if (cli.cfg.output == OutputMode::json)
    std::printf("{\"n\": %llu, \"p\": %llu}\n", (unsigned long long)n,
                (unsigned long long)p);
  else if (cli.cfg.output == OutputMode::csv)
    std::printf("n,p\n%llu,%llu\n", (unsigned long long)n,
                (unsigned long long)p);
  else
    std::printf("p_%llu = %llu\n", (unsigned long long)n,
                (unsigned long long)p);
  return 0;
}

int cmd_pi(Cli& cli, std::uint64_t x) {
  const std::uint64_t c = cli.engine().prime_count(x);
  if (cli.cfg.output == OutputMode::json)
    std::printf("{\"x\": %llu, \"pi\": %llu}\n", (unsigned long long)x,
                (unsigned long long)c);
  else if (cli.cfg.output == OutputMode::csv)
    std::printf("x,pi\n%llu,%llu\n", (unsigned long long)x,
                (unsigned long long)c);
  else
    std::printf("pi(%llu) = %llu\n", (unsigned long long)x,
                (unsigned long long)c);
  return 0;
}

int cmd_theta(Cli& cli, std::uint64_t n) {
  if (n == 0) throw argument_error("prime index must be >= 1");
  std::uint64_t p = 2;
  Interval th;
  if (n == 1) {
    ThetaAccumulator acc;
    acc.add_term(std::log(2.0));
    th = acc.enclosure();
  } else {
    cli.engine().stream_points(n, n, [&](const PrimePoint& pt) {
      p = pt.p;
      th = pt.theta;
      return true;
    });
  }
  if (cli.cfg.output == OutputMode::json)
    std::printf("{\"n\": %llu, \"p\": %llu, \"theta_lo\": %.17g, "
                "\"theta_hi\": %.17g}\n",
                (unsigned long long)n, (unsigned long long)p, th.lo, th.hi);
  else if (cli.cfg.output == OutputMode::csv)
    std::printf("n,p,theta_lo,theta_hi\n%llu,%llu,%.17g,%.17g\n",
                (unsigned long long)n, (unsigned long long)p, th.lo, th.hi);
  else
    std::printf("theta(p_%llu) = %s\n", (unsigned long long)n,
                iv_human(th).c_str());
  return 0;
}

// --- bound subcommands ------------------------------------------------------

int cmd_bound_list(Cli& cli) {
  if (cli.cfg.output == OutputMode::json) {
    std::printf("%s\n", bounds_registry_json().c_str());
    return 0;
  }
  if (cli.cfg.output == OutputMode::csv) {
    std::printf("id,target,side,strict,claimed_threshold,conditional\n");
    for (const BoundSpec& b : bound_registry())
      std::printf("%s,%s,%s,%d,%s,%d\n", b.name.c_str(),
                  b.target == BoundTarget::theta ? "theta_pn" : "pn",
                  b.side == BoundSide::lower ? "lower" : "upper",
                  b.strict ? 1 : 0,
                  b.claimed_threshold
                      ? std::to_string(*b.claimed_threshold).c_str()
                      : "none",
                  b.conditional ? 1 : 0);
    return 0;
  }
  for (const BoundSpec& b : bound_registry())
    std::printf("%-28s %-8s %-5s %-3s n>=%-12s %s%s\n", b.name.c_str(),
                b.target == BoundTarget::theta ? "theta" : "p_n",
                b.side == BoundSide::lower ? "lower" : "upper",
                b.strict ? ">" : ">=",
                b.claimed_threshold
                    ? std::to_string(*b.claimed_threshold).c_str()
                    : "(none)",
                b.conditional ? "[RH] " : "", b.expr.c_str());
  return 0;
}

int cmd_bound_eval(Cli& cli, const std::string& id, std::uint64_t n) {
  const BoundSpec* spec = bound_spec_by_name(id);
  if (!spec) throw argument_error("unknown bound id: " + id);
  std::uint64_t p = 0;
  Interval v;
  if (spec->takes_z) {
    p = cli.engine().nth_prime(n);
    v = eval_bound_z(spec->id, n, p);
  } else {
    v = eval_bound(spec->id, n);
  }
  if (cli.cfg.output == OutputMode::json) {
    nlohmann::ordered_json j{{"id", id}, {"n", n}};
    if (spec->takes_z) j["p"] = p;
    j["lo"] = v.lo;
    j["hi"] = v.hi;
    std::printf("%s\n", j.dump().c_str());
  } else if (cli.cfg.output == OutputMode::csv) {
    std::printf("id,n,lo,hi\n%s,%llu,%.17g,%.17g\n", id.c_str(),
                (unsigned long long)n, v.lo, v.hi);
  } else {
    std::printf("%s(%llu) = %s\n", id.c_str(), (unsigned long long)n,
                iv_human(v).c_str());
  }
  return 0;
}

int cmd_check(Cli& cli, const std::string& id, const std::string& range,
              bool envelope) {
  std::uint64_t lo = 0, hi = 0;
  parse_range(range, lo, hi);
  const Subject sub = resolve_subject(id);
  if (const BoundSpec* bs = bound_spec_by_name(id);
      bs && bs->conditional && !cli.cfg.include_conditional)
    throw argument_error("bound " + id +
                         " is conditional on the Riemann hypothesis; rerun "
                         "with --include-conditional");
  VerificationReport rep =
      (envelope && sub.needs_theta)
          ? verify_theta(cli.engine(), id, lo, hi, cli.verify_opts())
          : verify_range(cli.engine(), id, lo, hi, cli.verify_opts());
  print_report(cli, rep);
  return exit_for(rep);
}

int cmd_bound_threshold(Cli& cli, const std::string& id, std::uint64_t horizon) {
  const Subject sub = resolve_subject(id);
  const VerificationReport rep = verify_range(
      cli.engine(), id, sub.domain_min, horizon, cli.verify_opts());
  std::uint64_t blocking = 0;
  if (rep.last_violation) blocking = *rep.last_violation;
  if (rep.last_indeterminate)
    blocking = std::max(blocking, *rep.last_indeterminate);
  const std::uint64_t found = blocking == 0 ? sub.domain_min : blocking + 1;
  if (cli.cfg.output == OutputMode::json) {
    nlohmann::ordered_json j{{"subject", id},
                             {"horizon", horizon},
                             {"found_threshold", found}};
    if (sub.claimed_threshold)
      j["claimed_threshold"] = *sub.claimed_threshold;
    else
      j["claimed_threshold"] = nullptr;
    j["violation_count"] = rep.violation_count;
    j["inconclusive"] = rep.inconclusive();
    std::printf("%s\n", j.dump().c_str());
  } else if (cli.cfg.output == OutputMode::csv) {
    std::printf("subject,horizon,found_threshold,claimed_threshold\n"
                "%s,%llu,%llu,%s\n",
                id.c_str(), (unsigned long long)horizon,
                (unsigned long long)found,
                sub.claimed_threshold
                    ? std::to_string(*sub.claimed_threshold).c_str()
                    : "none");
  } else {
    std::printf("%llu\n", (unsigned long long)found);
    if (sub.claimed_threshold && *sub.claimed_threshold != found)
      std::printf("note: differs from the catalog threshold %llu\n",
                  (unsigned long long)*sub.claimed_threshold);
  }
  return rep.inconclusive() ? 2 : 0;
}

// --- grid run ---------------------------------------------------------------

int cmd_grid_run(Cli& cli, const std::string& what) {
  std::vector<GridSpec> specs;
  if (what == "paper:all") {
    specs = paper_grids();
  } else if (const GridSpec* g = paper_grid(what)) {
    specs.push_back(*g);
  } else if (what.rfind("paper:", 0) == 0) {
    throw argument_error("unknown paper grid \"" + what +
                         "\" (known: g1, h1, alpha, beta, gamma, r)");
  } else {
    std::ifstream in(what);
    if (!in) throw argument_error("cannot open grid manifest " + what);
    std::stringstream buf;
    buf << in.rdbuf();
    specs = grid_specs_from_json(buf.str());
  }
  int rc = 0;
  std::vector<GridReport> reports;
  for (const GridSpec& s : specs) {
    GridReport rep = run_grid(s);
    rc = std::max(rc, exit_for(rep));
    if (cli.cfg.output != OutputMode::json) print_grid_report(cli, rep);
    reports.push_back(std::move(rep));
  }
  if (cli.cfg.output == OutputMode::json) {
    if (reports.size() == 1) {
      std::printf("%s\n", grid_report_json(reports[0]).c_str());
    } else {
      std::printf("[");
      for (std::size_t i = 0; i < reports.size(); ++i)
        std::printf("%s%s", i ? "," : "",
                    grid_report_json(reports[i]).c_str());
      std::printf("]\n");
    }
  }
  return rc;
}

// --- report mi-table --------------------------------------------------------

int cmd_mi_table(Cli& cli) {
  static const PredicateId h_ids[10] = {
      PredicateId::h1, PredicateId::h2, PredicateId::h3, PredicateId::h4,
      PredicateId::h5, PredicateId::h6, PredicateId::h7, PredicateId::h8,
      PredicateId::h9, PredicateId::h10};
  // conservative horizon that is certainly streamable at the ceiling:
  // pi(x) > 0.9 x / log x for x >= 100
  const double c = static_cast<double>(cli.cfg.ceiling);
  const std::uint64_t horizon_cap =
      cli.cfg.ceiling >= 100
          ? static_cast<std::uint64_t>(0.9 * c / std::log(c))
          : 25;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (cli.cfg.output == OutputMode::human)
    std::printf("%-4s %-10s %-14s %-14s %s\n", "i", "B_i", "claimed M_i",
                "derived M_i", "note");
  for (int i = 0; i < 10; ++i) {
    const PredicateSpec& spec = predicate_spec(h_ids[i]);
    const double bi = consts::B()[static_cast<std::size_t>(i)].get_d();
    const std::uint64_t claimed = spec.claimed_threshold;
    std::uint64_t derived = 0;
    std::uint64_t horizon = 0;
    bool fits = claimed <= horizon_cap;
    if (fits) {
      horizon = std::min<std::uint64_t>(
          horizon_cap, std::max<std::uint64_t>(1'000'000, 10 * claimed));
      derived = find_min_threshold(cli.engine(), spec.name, horizon,
                                   cli.verify_opts());
    }
    if (cli.cfg.output == OutputMode::human) {
      if (fits)
        std::printf("%-4d %-10g %-14llu %-14llu %s (horizon %llu)\n", i + 1,
                    bi, (unsigned long long)claimed,
                    (unsigned long long)derived,
                    derived == claimed ? "match" : "DIFFERS",
                    (unsigned long long)horizon);
      else
        std::printf("%-4d %-10g %-14llu %-14s beyond ceiling %llu\n", i + 1,
                    bi, (unsigned long long)claimed, "-",
                    (unsigned long long)cli.cfg.ceiling);
    }
    nlohmann::ordered_json row{{"i", i + 1},
                               {"b", bi},
                               {"claimed_threshold", claimed}};
    if (fits) {
      row["derived_threshold"] = derived;
      row["horizon"] = horizon;
      row["matches"] = derived == claimed;
    } else {
      row["derived_threshold"] = nullptr;
      row["note"] = "claimed threshold beyond the configured ceiling";
    }
    rows.push_back(std::move(row));
  }
  if (cli.cfg.output != OutputMode::human)
    std::printf("%s\n", rows.dump(2).c_str());
  return 0;
}

// --- selftest ---------------------------------------------------------------

struct SelfTest {
  int failed = 0;
  int total = 0;
  void check(const char* what, bool ok) {
    ++total;
    if (!ok) ++failed;
    std::printf("%-58s %s\n", what, ok ? "PASS" : "FAIL");
  }
};

int cmd_selftest() {
  SelfTest t;
  PrimeEngine eng(2'000'000);
  t.check("nth_prime(10000) == 104729", eng.nth_prime(10000) == 104729);
  t.check("prime_count(10^6) == 78498", eng.prime_count(1'000'000) == 78498);

  // identities: the point enclosures invert back onto exact integers
  bool ident = true;
  for (std::uint64_t n : {2ull, 97ull, 10000ull, 100000ull}) {
    const PrimePoint pt = make_point(n, eng.nth_prime(n));
    ident = ident && exp(pt.y).contains(static_cast<double>(n)) &&
            exp(pt.w).contains(pt.y.mid()) &&
            exp(pt.z).contains(static_cast<double>(pt.p));
  }
  t.check("exp(y) contains n, exp(w) contains y, exp(z) contains p", ident);

  t.check("eval rosser-lower(1) encloses 0",
          eval_bound(BoundId::rosser_lower, 1).contains_zero());
  {
    const Interval v = eval_bound(BoundId::eq_1_6_upper, 4);
    t.check("eval eq-1.6-upper(4) in [8.158, 8.159]",
            v.lo > 8.158 && v.hi < 8.159);
  }
  t.check("check rosser-lower at n=1 holds",
          check_bound(BoundId::rosser_lower, make_point(1, 2)).verdict ==
              Verdict::holds);
  t.check("check eq-1.4-upper at n=5 fails",
          check_bound(BoundId::eq_1_4_upper, make_point(5, 11)).verdict ==
              Verdict::fails);
  t.check("check thm-1.2-lower at n=2 holds",
          check_bound(BoundId::thm_1_2_lower, make_point(2, 3)).verdict ==
              Verdict::holds);

  t.check("threshold eq-1.4-upper @10^4 == 6",
          find_min_threshold(eng, "eq-1.4-upper", 10000) == 6);
  t.check("threshold eq-1.6-upper @10^4 == 4",
          find_min_threshold(eng, "eq-1.6-upper", 10000) == 4);
  t.check("threshold eq-1.7-upper @10^4 == 20",
          find_min_threshold(eng, "eq-1.7-upper", 10000) == 20);
  t.check("threshold kor-2.6 @10^4 == 71",
          find_min_threshold(eng, "kor-2.6", 10000) == 71);
  t.check("threshold h6 @10^4 == 5",
          find_min_threshold(eng, "h6", 10000) == 5);

  t.check("theta-lower-11.808 clean on [2, 10^4]",
          verify_theta(eng, "theta-lower-11.808", 2, 10000).violation_count ==
              0);
  t.check("theta-upper-10.367 clean on [2581, 10^4]",
          verify_theta(eng, "theta-upper-10.367", 2581, 10000)
                  .violation_count == 0);
  t.check("theta-upper-10.367 violated below 2581",
          verify_range(eng, "theta-upper-10.367", 2, 2580).violation_count >
              0);

  {
    VerifyOptions par;
    par.workers = 2;
    par.chunk_size = 7919;
    const std::string a =
        report_json(verify_range(eng, "eq-1.8-lower", 2, 50000));
    std::string b =
        report_json(verify_range(eng, "eq-1.8-lower", 2, 50000, par));
    const auto strip = [](std::string s) {
      const auto p = s.find("\"wall_time_s\"");
      return p == std::string::npos ? s : s.erase(p);
    };
    t.check("verification deterministic across workers/chunks",
            strip(a) == strip(b));
  }

  t.check("paper:r grid passes", run_grid(*paper_grid("paper:r")).passed());
  {
    GridSpec coarse;
    coarse.name = "coarse:g1";
    coarse.fn = FnId::g1;
    coarse.x_start = parse_decimal("0");
    coarse.step = parse_decimal("0.01");
    coarse.cells = 700;
    t.check("coarse g1 grid reports failures",
            run_grid(coarse).failure_count > 0);
  }
  t.check("tail scan f2 on [3.05, 30] passes",
          tail_scan(FnId::f2, parse_decimal("3.05"), parse_decimal("30"),
                    parse_decimal("0.01"))
              .passed());

  t.check("bound registry has 22 entries", bound_registry().size() == 22);
  t.check("predicate registry has 23 entries",
          predicate_registry().size() == 23);
  {
    bool ok = true;
    try {
      ok = !nlohmann::json::parse(bounds_registry_json()).empty() &&
           !nlohmann::json::parse(grid_manifest_json()).empty();
    } catch (const std::exception&) {
      ok = false;
    }
    t.check("registry JSON exports parse", ok);
  }

  std::printf("selftest: %d/%d passed\n", t.total - t.failed, t.total);
  return t.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  int rc = 0;

  CLI::App app{
      "primebounds: explicit bounds for the n-th prime and theta(p_n) -- "
      "prime queries, exhaustive range verification, threshold searches, and "
      "grid certification.\nExit codes: 0 clean, 1 violations, 2 "
      "inconclusive, 3 capacity/config/usage."};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--ceiling", cli.cfg.ceiling,
                 "largest prime value the engine may sieve")
      ->envname("PRIMEBOUNDS_CEILING")
      ->capture_default_str();
  app.add_option("--workers", cli.cfg.workers, "concurrent chunk workers")
      ->envname("PRIMEBOUNDS_WORKERS")
      ->capture_default_str();
  app.add_option("--chunk-size", cli.cfg.chunk_size,
                 "indices per verification chunk (>= 1000)")
      ->envname("PRIMEBOUNDS_CHUNK_SIZE")
      ->capture_default_str();
  app.add_option("--precision", cli.cfg.precision,
                 "indeterminate handling: standard | escalating")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, PrecisionMode>{
              {"standard", PrecisionMode::standard},
              {"escalating", PrecisionMode::escalating}},
          CLI::ignore_case))
      ->envname("PRIMEBOUNDS_PRECISION");
  app.add_option("--output", cli.cfg.output, "output format: json | csv | human")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputMode>{{"json", OutputMode::json},
                                            {"csv", OutputMode::csv},
                                            {"human", OutputMode::human}},
          CLI::ignore_case))
      ->envname("PRIMEBOUNDS_OUTPUT");
  app.add_option("--checkpoint-dir", cli.cfg.checkpoint_dir,
                 "directory for verification checkpoints")
      ->envname("PRIMEBOUNDS_CHECKPOINT_DIR");
  app.add_flag("--resume", cli.cfg.resume,
               "resume from a matching checkpoint if present")
      ->envname("PRIMEBOUNDS_RESUME");
  app.add_flag("--include-conditional", cli.cfg.include_conditional,
               "allow checking RH-conditional catalog entries")
      ->envname("PRIMEBOUNDS_INCLUDE_CONDITIONAL");

  // nth / pi / theta
  static std::uint64_t arg_n = 0;
  static std::uint64_t arg_x = 0;
  auto* nth = app.add_subcommand("nth", "print the n-th prime");
  nth->add_option("n", arg_n, "prime index (1-based)")->required();
  nth->callback([&] { rc = cmd_nth(cli, arg_n); });

  auto* pi = app.add_subcommand("pi", "count primes <= x");
  pi->add_option("x", arg_x, "upper limit")->required();
  pi->callback([&] { rc = cmd_pi(cli, arg_x); });

  auto* theta = app.add_subcommand(
      "theta", "enclosure of theta(p_n) = sum of log p over the first n primes");
  static std::uint64_t arg_tn = 0;
  theta->add_option("n", arg_tn, "prime index (1-based)")->required();
  theta->callback([&] { rc = cmd_theta(cli, arg_tn); });

  // bound
  auto* bound = app.add_subcommand("bound", "catalog of p_n / theta bounds");
  bound->require_subcommand(1);
  bound->add_subcommand("list", "print the bound registry")->callback([&] {
    rc = cmd_bound_list(cli);
  });
  static std::string arg_id;
  static std::uint64_t arg_en = 0;
  auto* beval = bound->add_subcommand("eval", "evaluate a bound at index n");
  beval->add_option("id", arg_id, "bound id (see: bound list)")->required();
  beval->add_option("n", arg_en, "prime index")->required();
  beval->callback([&] { rc = cmd_bound_eval(cli, arg_id, arg_en); });

  static std::string arg_range;
  static bool arg_envelope = false;
  auto* bcheck =
      bound->add_subcommand("check", "verify a bound over an index range");
  bcheck->add_option("id", arg_id, "bound id")->required();
  bcheck->add_option("range", arg_range, "index range lo:hi")->required();
  bcheck->add_flag("--envelope", arg_envelope,
                   "also report the |theta - p| envelope (theta targets)");
  bcheck->callback([&] { rc = cmd_check(cli, arg_id, arg_range, arg_envelope); });

  static std::uint64_t arg_horizon = 0;
  auto* bthr = bound->add_subcommand(
      "threshold", "least N such that the bound holds on [N, horizon]");
  bthr->add_option("id", arg_id, "bound id")->required();
  bthr->add_option("horizon", arg_horizon, "scan horizon (index)")->required();
  bthr->callback([&] { rc = cmd_bound_threshold(cli, arg_id, arg_horizon); });

  // predicate
  auto* pred = app.add_subcommand("predicate", "point predicates (H_i, recip-log, ...)");
  pred->require_subcommand(1);
  auto* pcheck =
      pred->add_subcommand("check", "verify a predicate over an index range");
  pcheck->add_option("id", arg_id, "predicate id (e.g. h6, kor-2.6)")
      ->required();
  pcheck->add_option("range", arg_range, "index range lo:hi")->required();
  pcheck->callback([&] { rc = cmd_check(cli, arg_id, arg_range, false); });
  auto* plist = pred->add_subcommand("list", "print the predicate registry");
  plist->callback([&] {
    if (cli.cfg.output == OutputMode::json) {
      std::printf("%s\n", predicates_registry_json().c_str());
    } else {
      for (const PredicateSpec& p : predicate_registry())
        std::printf("%-18s n>=%-12llu %s\n", p.name.c_str(),
                    (unsigned long long)p.claimed_threshold, p.expr.c_str());
    }
    rc = 0;
  });

  // grid
  auto* grid = app.add_subcommand("grid", "bracket-grid certification");
  grid->require_subcommand(1);
  static std::string arg_grid;
  auto* grun = grid->add_subcommand(
      "run", "run a paper grid (paper:g1 ... paper:r, paper:all) or a "
             "manifest file");
  grun->add_option("what", arg_grid, "paper grid id or manifest path")
      ->required();
  grun->callback([&] { rc = cmd_grid_run(cli, arg_grid); });
  grid->add_subcommand("manifest", "print the paper grid manifest JSON")
      ->callback([&] {
        std::printf("%s\n", grid_manifest_json().c_str());
        rc = 0;
      });

  // report
  auto* report = app.add_subcommand("report", "derived report tables");
  report->require_subcommand(1);
  report->add_subcommand("mi-table",
                         "B_i / M_i table with re-derived thresholds")
      ->callback([&] { rc = cmd_mi_table(cli); });

  app.add_subcommand("selftest", "run the built-in identity and oracle suite")
      ->callback([&] { rc = cmd_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const capacity_error& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return 3;
  } catch (const argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return rc;
}
