#include "primebounds/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace primebounds {

namespace {

Interval abs_iv(const Interval& m) {
  if (m.lo >= 0.0) return m;
  if (m.hi <= 0.0) return Interval(-m.hi, -m.lo);
  return Interval(0.0, std::max(-m.lo, m.hi));
}

struct Runner {
  const Subject& sub;
  const VerifyOptions& opts;
  bool with_envelope;
  VerificationReport rep;
  ThetaEnvelope env;

  Runner(const Subject& s, const VerifyOptions& o, bool envl)
      : sub(s), opts(o), with_envelope(envl) {}

  Interval tier0(const PrimePoint& pt) const {
    return sub.is_bound ? bound_margin(sub.bound, pt)
                        : predicate_margin(sub.pred, pt);
  }
  Interval tier(const PrimePoint& pt, int t) const {
    return sub.is_bound ? bound_margin_escalated(sub.bound, pt, t)
                        : predicate_margin_escalated(sub.pred, pt, t);
  }

  void handle(const PrimePoint& pt) {
    ++rep.count_checked;
    Interval m = tier0(pt);
    if (opts.debug_widen > 0.0)
      m = Interval(m.lo - opts.debug_widen, m.hi + opts.debug_widen);
    Verdict v = classify_margin(m, sub.strict);
    int esc = 0;
    if (v == Verdict::indeterminate &&
        opts.precision == PrecisionMode::escalating) {
      for (int t = 1; t <= 2 && v == Verdict::indeterminate; ++t) {
        esc = t;
        m = tier(pt, t);
        v = classify_margin(m, sub.strict);
      }
    }
    if (esc > 0 && v != Verdict::indeterminate) {
      ++rep.escalated_count;
      if (rep.escalated.size() < opts.list_cap) rep.escalated.push_back(pt.n);
    }
    switch (v) {
      case Verdict::holds:
        break;
      case Verdict::fails:
        ++rep.violation_count;
        rep.last_violation = pt.n;
        if (rep.violations.size() < opts.list_cap)
          rep.violations.push_back(Violation{pt.n, m});
        break;
      case Verdict::indeterminate:
        ++rep.indeterminate_count;
        rep.last_indeterminate = pt.n;
        if (rep.indeterminates.size() < opts.list_cap)
          rep.indeterminates.push_back(pt.n);
        break;
    }
    if (!rep.min_margin.valid() || m.lo < rep.min_margin.lo) {
      rep.min_margin = m;
      rep.min_margin_n = pt.n;
    }
    if (with_envelope && pt.theta_valid) handle_envelope(pt);
  }

  void handle_envelope(const PrimePoint& pt) {
    static const Interval c015 = from_rat<Interval>(parse_decimal("0.15"));
    const Interval p = exact_u64<Interval>(pt.p);
    const Interval cap = c015 * p / pow_int(pt.z, 3);
    const Interval dev = abs_iv(pt.theta - p);
    switch (classify_margin(cap - dev, /*strict=*/true)) {
      case Verdict::holds: ++env.holds; break;
      case Verdict::fails: ++env.violations; break;
      case Verdict::indeterminate: ++env.indeterminate; break;
    }
    const Interval ratio = dev / cap;
    if (!env.worst_ratio.valid() || ratio.hi > env.worst_ratio.hi) {
      env.worst_ratio = ratio;
      env.worst_n = pt.n;
    }
  }
};

// Folds one chunk's state into the running prefix state.  Chunks are merged
// in ascending range order, which reproduces the single-pass scan exactly:
// capped lists keep their first list_cap entries, min_margin keeps its first
// occurrence (strict <), last_* take the later chunk's value.
void merge_state(Runner& base, const Runner& part, std::size_t cap) {
  VerificationReport& a = base.rep;
  const VerificationReport& b = part.rep;
  a.count_checked += b.count_checked;
  a.violation_count += b.violation_count;
  for (const Violation& v : b.violations) {
    if (a.violations.size() >= cap) break;
    a.violations.push_back(v);
  }
  if (b.last_violation) a.last_violation = b.last_violation;
  a.escalated_count += b.escalated_count;
  for (std::uint64_t n : b.escalated) {
    if (a.escalated.size() >= cap) break;
    a.escalated.push_back(n);
  }
  a.indeterminate_count += b.indeterminate_count;
  for (std::uint64_t n : b.indeterminates) {
    if (a.indeterminates.size() >= cap) break;
    a.indeterminates.push_back(n);
  }
  if (b.last_indeterminate) a.last_indeterminate = b.last_indeterminate;
  if (b.min_margin.valid() &&
      (!a.min_margin.valid() || b.min_margin.lo < a.min_margin.lo)) {
    a.min_margin = b.min_margin;
    a.min_margin_n = b.min_margin_n;
  }
  base.env.holds += part.env.holds;
  base.env.violations += part.env.violations;
  base.env.indeterminate += part.env.indeterminate;
  if (part.env.worst_ratio.valid() &&
      (!base.env.worst_ratio.valid() ||
       part.env.worst_ratio.hi > base.env.worst_ratio.hi)) {
    base.env.worst_ratio = part.env.worst_ratio;
    base.env.worst_n = part.env.worst_n;
  }
}

// ---------------------------------------------------------------------------
// checkpointing: the merged prefix state is serialized after each completed
// wave; doubles round-trip exactly through the JSON layer, so a resumed run
// finishes with a bit-identical report.
// ---------------------------------------------------------------------------

std::string checkpoint_file(const std::string& dir, const Subject& sub,
                            std::uint64_t n_lo, std::uint64_t n_hi) {
  std::string tag;
  for (char c : sub.name)
    tag += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
            c == '-')
               ? c
               : '_';
  return dir + "/" + tag + "-" + std::to_string(n_lo) + "-" +
         std::to_string(n_hi) + ".ckpt.json";
}

nlohmann::ordered_json state_to_json(const Runner& r, std::uint64_t next_start,
                                     double wall) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["subject"] = r.rep.subject;
  j["n_lo"] = r.rep.n_lo;
  j["n_hi"] = r.rep.n_hi;
  j["next_start"] = next_start;
  j["wall_time_s"] = wall;
  j["count_checked"] = r.rep.count_checked;
  j["violation_count"] = r.rep.violation_count;
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const Violation& v : r.rep.violations)
    viol.push_back({v.n, v.margin.lo, v.margin.hi});
  j["violations"] = std::move(viol);
  if (r.rep.last_violation) j["last_violation"] = *r.rep.last_violation;
  j["escalated_count"] = r.rep.escalated_count;
  j["escalated"] = r.rep.escalated;
  j["indeterminate_count"] = r.rep.indeterminate_count;
  j["indeterminates"] = r.rep.indeterminates;
  if (r.rep.last_indeterminate)
    j["last_indeterminate"] = *r.rep.last_indeterminate;
  if (r.rep.min_margin.valid()) {
    j["min_margin_n"] = r.rep.min_margin_n;
    j["min_margin_lo"] = r.rep.min_margin.lo;
    j["min_margin_hi"] = r.rep.min_margin.hi;
  }
  if (r.with_envelope) {
    nlohmann::ordered_json e;
    e["holds"] = r.env.holds;
    e["violations"] = r.env.violations;
    e["indeterminate"] = r.env.indeterminate;
    if (r.env.worst_ratio.valid()) {
      e["worst_n"] = r.env.worst_n;
      e["worst_ratio_lo"] = r.env.worst_ratio.lo;
      e["worst_ratio_hi"] = r.env.worst_ratio.hi;
    }
    j["envelope"] = std::move(e);
  }
  return j;
}

bool state_from_json(const std::string& path, Runner& r,
                     std::uint64_t& next_start, double& wall) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::ordered_json::parse(buf.str());
    if (j.at("version").get<int>() != 1) return false;
    if (j.at("subject").get<std::string>() != r.rep.subject) return false;
    if (j.at("n_lo").get<std::uint64_t>() != r.rep.n_lo) return false;
    if (j.at("n_hi").get<std::uint64_t>() != r.rep.n_hi) return false;
    const std::uint64_t ns = j.at("next_start").get<std::uint64_t>();
    if (ns <= r.rep.n_lo || ns > r.rep.n_hi + 1) return false;
    r.rep.count_checked = j.at("count_checked").get<std::uint64_t>();
    r.rep.violation_count = j.at("violation_count").get<std::uint64_t>();
    for (const auto& v : j.at("violations"))
      r.rep.violations.push_back(
          Violation{v.at(0).get<std::uint64_t>(),
                    Interval(v.at(1).get<double>(), v.at(2).get<double>())});
    if (j.contains("last_violation"))
      r.rep.last_violation = j["last_violation"].get<std::uint64_t>();
    r.rep.escalated_count = j.at("escalated_count").get<std::uint64_t>();
    r.rep.escalated = j.at("escalated").get<std::vector<std::uint64_t>>();
    r.rep.indeterminate_count =
        j.at("indeterminate_count").get<std::uint64_t>();
    r.rep.indeterminates =
        j.at("indeterminates").get<std::vector<std::uint64_t>>();
    if (j.contains("last_indeterminate"))
      r.rep.last_indeterminate = j["last_indeterminate"].get<std::uint64_t>();
    if (j.contains("min_margin_n")) {
      r.rep.min_margin_n = j["min_margin_n"].get<std::uint64_t>();
      r.rep.min_margin = Interval(j.at("min_margin_lo").get<double>(),
                                  j.at("min_margin_hi").get<double>());
    }
    if (r.with_envelope) {
      const auto& e = j.at("envelope");
      r.env.holds = e.at("holds").get<std::uint64_t>();
      r.env.violations = e.at("violations").get<std::uint64_t>();
      r.env.indeterminate = e.at("indeterminate").get<std::uint64_t>();
      if (e.contains("worst_n")) {
        r.env.worst_n = e["worst_n"].get<std::uint64_t>();
        r.env.worst_ratio = Interval(e.at("worst_ratio_lo").get<double>(),
                                     e.at("worst_ratio_hi").get<double>());
      }
    }
    wall = j.value("wall_time_s", 0.0);
    next_start = ns;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void write_checkpoint(const std::string& path, const Runner& r,
                      std::uint64_t next_start, double wall) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << state_to_json(r, next_start, wall).dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

VerificationReport run_verify(const PrimeEngine& engine, const Subject& sub,
                              std::uint64_t n_lo, std::uint64_t n_hi,
                              const VerifyOptions& opts, bool with_envelope) {
  if (n_lo < 1 || n_lo > n_hi)
    throw argument_error("verify: need 1 <= n_lo <= n_hi");
  if (n_lo < sub.domain_min)
    throw argument_error("subject " + sub.name + " needs n >= " +
                         std::to_string(sub.domain_min));
  if (opts.chunk_size == 0)
    throw argument_error("verify: chunk_size must be positive");
  if (opts.workers < 1)
    throw argument_error("verify: workers must be >= 1");
  const auto t_start = std::chrono::steady_clock::now();

  Runner base(sub, opts, with_envelope);
  base.rep.subject = sub.name;
  base.rep.n_lo = n_lo;
  base.rep.n_hi = n_hi;

  std::string ckpt_path;
  std::uint64_t scan_from = n_lo;
  double prior_wall = 0.0;
  if (!opts.checkpoint_dir.empty()) {
    std::filesystem::create_directories(opts.checkpoint_dir);
    ckpt_path = checkpoint_file(opts.checkpoint_dir, sub, n_lo, n_hi);
    if (opts.resume) {
      std::uint64_t ns = 0;
      if (state_from_json(ckpt_path, base, ns, prior_wall)) scan_from = ns;
    }
  }

  if (scan_from == 1) {
    base.handle(make_point(1, engine.nth_prime(1)));
    scan_from = 2;
  }

  if (scan_from <= n_hi) {
    if (opts.workers == 1 && ckpt_path.empty()) {
      // Serial fast path: one continuous stream.  Chunk decomposition has no
      // observable effect on the report, so none is performed.
      engine.stream_points(scan_from, n_hi,
                           [&base](const PrimePoint& pt) {
                             base.handle(pt);
                             return true;
                           });
    } else {
      std::vector<std::uint64_t> starts;
      for (std::uint64_t s = scan_from;;) {
        starts.push_back(s);
        if (n_hi - s < opts.chunk_size) break;
        s += opts.chunk_size;
      }
      const auto seeds = engine.make_seeds(starts);
      const std::size_t n_chunks = starts.size();
      const auto chunk_hi = [&](std::size_t i) {
        return i + 1 < n_chunks ? starts[i + 1] - 1 : n_hi;
      };
      for (std::size_t wave = 0; wave < n_chunks;
           wave += static_cast<std::size_t>(opts.workers)) {
        const std::size_t k = std::min<std::size_t>(
            static_cast<std::size_t>(opts.workers), n_chunks - wave);
        std::vector<Runner> parts(k, Runner(sub, opts, with_envelope));
        std::vector<std::exception_ptr> errors(k);
        const auto run_chunk = [&](std::size_t j) {
          try {
            engine.stream_from_seed(seeds[wave + j], chunk_hi(wave + j),
                                    [&parts, j](const PrimePoint& pt) {
                                      parts[j].handle(pt);
                                      return true;
                                    });
          } catch (...) {
            errors[j] = std::current_exception();
          }
        };
        if (k == 1) {
          run_chunk(0);
        } else {
          std::vector<std::thread> pool;
          pool.reserve(k);
          for (std::size_t j = 0; j < k; ++j)
            pool.emplace_back(run_chunk, j);
          for (std::thread& t : pool) t.join();
        }
        for (std::size_t j = 0; j < k; ++j)
          if (errors[j]) std::rethrow_exception(errors[j]);
        for (std::size_t j = 0; j < k; ++j)
          merge_state(base, parts[j], opts.list_cap);
        if (!ckpt_path.empty() && wave + k < n_chunks) {
          const double wall =
              prior_wall + std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t_start)
                               .count();
          write_checkpoint(ckpt_path, base, chunk_hi(wave + k - 1) + 1, wall);
        }
      }
    }
  }

  if (!ckpt_path.empty()) {
    std::error_code ec;
    std::filesystem::remove(ckpt_path, ec);
  }
  if (with_envelope) base.rep.theta_envelope = base.env;
  base.rep.wall_time_s =
      prior_wall + std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t_start)
                       .count();
  return base.rep;
}

}  // namespace

Subject resolve_subject(const std::string& name) {
  Subject sub;
  sub.name = name;
  if (const BoundSpec* b = bound_spec_by_name(name)) {
    sub.is_bound = true;
    sub.bound = b->id;
    sub.strict = b->strict;
    sub.needs_theta = b->target == BoundTarget::theta;
    sub.domain_min = b->domain_min;
    sub.claimed_threshold = b->claimed_threshold;
    return sub;
  }
  if (const PredicateSpec* p = predicate_spec_by_name(name)) {
    sub.is_bound = false;
    sub.pred = p->id;
    sub.strict = p->strict;
    sub.needs_theta = false;
    sub.domain_min = p->domain_min;
    sub.claimed_threshold = p->claimed_threshold;
    return sub;
  }
  throw argument_error("unknown subject: " + name);
}

VerificationReport verify_range(const PrimeEngine& engine,
                                const std::string& subject,
                                std::uint64_t n_lo, std::uint64_t n_hi,
                                const VerifyOptions& opts) {
  return run_verify(engine, resolve_subject(subject), n_lo, n_hi, opts,
                    /*with_envelope=*/false);
}

std::uint64_t find_min_threshold(const PrimeEngine& engine,
                                 const std::string& subject,
                                 std::uint64_t n_hi,
                                 const VerifyOptions& opts) {
  const Subject sub = resolve_subject(subject);
  if (n_hi < sub.domain_min)
    throw argument_error("find_min_threshold: horizon below the domain of " +
                         subject);
  const VerificationReport rep =
      run_verify(engine, sub, sub.domain_min, n_hi, opts,
                 /*with_envelope=*/false);
  std::uint64_t blocking = 0;
  if (rep.last_violation) blocking = *rep.last_violation;
  if (rep.last_indeterminate)
    blocking = std::max(blocking, *rep.last_indeterminate);
  return blocking == 0 ? sub.domain_min : blocking + 1;
}

VerificationReport verify_theta(const PrimeEngine& engine,
                                const std::string& subject,
                                std::uint64_t n_lo, std::uint64_t n_hi,
                                const VerifyOptions& opts) {
  const Subject sub = resolve_subject(subject);
  if (!sub.needs_theta)
    throw argument_error("verify_theta: subject " + subject +
                         " does not target theta(p_n)");
  return run_verify(engine, sub, n_lo, n_hi, opts, /*with_envelope=*/true);
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["n_lo"] = r.n_lo;
  j["n_hi"] = r.n_hi;
  j["count_checked"] = r.count_checked;
  j["violation_count"] = r.violation_count;
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations)
    viol.push_back({{"n", v.n}, {"margin_lo", v.margin.lo},
                    {"margin_hi", v.margin.hi}});
  j["violations"] = std::move(viol);
  if (r.last_violation)
    j["last_violation"] = *r.last_violation;
  else
    j["last_violation"] = nullptr;
  j["escalated_count"] = r.escalated_count;
  j["escalated"] = r.escalated;
  j["indeterminate_count"] = r.indeterminate_count;
  j["indeterminates"] = r.indeterminates;
  if (r.last_indeterminate)
    j["last_indeterminate"] = *r.last_indeterminate;
  else
    j["last_indeterminate"] = nullptr;
  j["min_margin"] = {{"n", r.min_margin_n},
                     {"lo", r.min_margin.lo},
                     {"hi", r.min_margin.hi}};
  j["inconclusive"] = r.inconclusive();
  if (r.theta_envelope) {
    const ThetaEnvelope& e = *r.theta_envelope;
    j["theta_envelope"] = {{"holds", e.holds},
                           {"violations", e.violations},
                           {"indeterminate", e.indeterminate},
                           {"worst_n", e.worst_n},
                           {"worst_ratio_lo", e.worst_ratio.lo},
                           {"worst_ratio_hi", e.worst_ratio.hi}};
  }
  j["wall_time_s"] = r.wall_time_s;
  return j.dump(2);
}

std::string report_csv(const VerificationReport& r) {
  std::string out;
  char buf[256];
  const auto add = [&out, &buf](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof(buf), fmt, args...);
    out += buf;
  };
  add("# subject=%s\n", r.subject.c_str());
  add("# n_lo=%llu n_hi=%llu count_checked=%llu\n",
      (unsigned long long)r.n_lo, (unsigned long long)r.n_hi,
      (unsigned long long)r.count_checked);
  add("# violation_count=%llu last_violation=%s\n",
      (unsigned long long)r.violation_count,
      r.last_violation ? std::to_string(*r.last_violation).c_str() : "none");
  add("# escalated_count=%llu indeterminate_count=%llu inconclusive=%d\n",
      (unsigned long long)r.escalated_count,
      (unsigned long long)r.indeterminate_count, r.inconclusive() ? 1 : 0);
  add("# min_margin_n=%llu min_margin_lo=%.17g min_margin_hi=%.17g\n",
      (unsigned long long)r.min_margin_n, r.min_margin.lo, r.min_margin.hi);
  if (r.theta_envelope) {
    const ThetaEnvelope& e = *r.theta_envelope;
    add("# theta_envelope holds=%llu violations=%llu indeterminate=%llu"
        " worst_n=%llu worst_ratio_hi=%.17g\n",
        (unsigned long long)e.holds, (unsigned long long)e.violations,
        (unsigned long long)e.indeterminate, (unsigned long long)e.worst_n,
        e.worst_ratio.hi);
  }
  add("# wall_time_s=%.3f\n", r.wall_time_s);
  out += "n,margin_lo,margin_hi\n";
  for (const Violation& v : r.violations)
    add("%llu,%.17g,%.17g\n", (unsigned long long)v.n, v.margin.lo,
        v.margin.hi);
  return out;
}

}  // namespace primebounds
