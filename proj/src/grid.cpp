#include "primebounds/grid.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "primebounds/config.hpp"

namespace primebounds {

namespace {

constexpr std::size_t kFailureCap = 100000;

Interval iv_of(const rat& q) { return from_rat<Interval>(q); }

Interval intersect(const Interval& u, const Interval& v) {
  const double lo = std::max(u.lo, v.lo);
  const double hi = std::min(u.hi, v.hi);
  if (lo <= hi) return Interval(lo, hi);
  return u.width() <= v.width() ? u : v;
}

// enclosing interval of the exact cell [a, b]
Interval cell_hull(const rat& a, const rat& b) {
  return Interval(iv_of(a).lo, iv_of(b).hi);
}

rat parse_rat_field(const nlohmann::ordered_json& v, const char* key) {
  if (v.is_number_integer())
    return rat(static_cast<long>(v.get<std::int64_t>()));
  if (!v.is_string())
    throw argument_error(std::string("grid manifest: ") + key +
                         " must be an integer or an exact rational/decimal "
                         "string (doubles are not exact)");
  const std::string s = v.get<std::string>();
  try {
    const auto slash = s.find('/');
    // reject a zero denominator before parse_decimal canonicalizes (GMP
    // aborts on q/0)
    if (slash != std::string::npos &&
        mpz_class(s.substr(slash + 1), 10) == 0)
      throw std::domain_error("zero denominator");
    return parse_decimal(s);
  } catch (const std::exception&) {
    throw argument_error(std::string("grid manifest: cannot parse ") + key +
                         " value \"" + s + "\"");
  }
}

struct CellCtx {
  FnId fn;
  bool diagonal;  // tail scan: evaluate on the diagonal with centered form
  int max_depth;
  int depth_used = 0;
  std::uint64_t index = 0;  // top-level cell currently being processed
  bool min_valid = false;
  std::uint64_t min_cell = 0;
  Interval min_value = Interval::invalid();

  // min_lower_bound tracks the enclosures certification actually rests on:
  // cells (or sub-cells) that were not subdivided further.
  void note_leaf(const Interval& v) {
    if (!min_valid || v.lo < min_value.lo) {
      min_valid = true;
      min_value = v;
      min_cell = index;
    }
  }
};

// Enclosure used to certify one (sub)cell [a, b].
Interval cell_value(const CellCtx& ctx, const rat& a, const rat& b) {
  const bool bivariate = fn_info(ctx.fn).arity == 2;
  if (!ctx.diagonal)
    return eval_bivariate(ctx.fn, iv_of(a), iv_of(b));
  const Interval X = cell_hull(a, b);
  const DualInterval dx = DualInterval::variable(X);
  const DualInterval f =
      bivariate ? eval_bivariate(ctx.fn, dx, dx) : eval_univariate(ctx.fn, dx);
  const rat mq = (a + b) / 2;
  const Interval m = iv_of(mq);
  const Interval fm = bivariate ? eval_bivariate(ctx.fn, m, m)
                                : eval_univariate(ctx.fn, m);
  return intersect(f.v, fm + f.d * (X - m));
}

// Certify F >= 0 on [a, b]; on failure leaves the blocking enclosure in
// fail_value (hi < 0: definite, straddle: depth limit reached).
bool certify(CellCtx& ctx, const rat& a, const rat& b, int depth,
             Interval& fail_value) {
  const Interval v = cell_value(ctx, a, b);
  if (v.lo >= 0.0) {
    ctx.note_leaf(v);
    return true;
  }
  if (v.hi < 0.0 || depth >= ctx.max_depth) {
    ctx.note_leaf(v);
    fail_value = v;
    return false;
  }
  ctx.depth_used = std::max(ctx.depth_used, depth + 1);
  const rat m = (a + b) / 2;
  return certify(ctx, a, m, depth + 1, fail_value) &&
         certify(ctx, m, b, depth + 1, fail_value);
}

void record_cell(GridReport& rep, CellCtx& ctx, std::uint64_t index,
                 const rat& a, const rat& b) {
  ctx.index = index;
  ++rep.cells_checked;
  const Interval v = cell_value(ctx, a, b);
  if (v.lo >= 0.0) {
    ctx.note_leaf(v);
    return;
  }

  bool ok = false;
  Interval fv = v;
  if (v.hi >= 0.0 && ctx.max_depth > 0) {
    ++rep.refined;
    ctx.depth_used = std::max(ctx.depth_used, 1);
    const rat m = (a + b) / 2;
    ok = certify(ctx, a, m, 1, fv) && certify(ctx, m, b, 1, fv);
  } else {
    ctx.note_leaf(v);
  }
  if (ok) return;
  ++rep.failure_count;
  if (fv.hi >= 0.0) ++rep.indeterminate_failure_count;
  if (rep.failures.size() < kFailureCap)
    rep.failures.push_back(GridFailure{index, fv});
}

}  // namespace

const std::vector<GridSpec>& paper_grids() {
  static const std::vector<GridSpec> grids = [] {
    std::vector<GridSpec> g;
    const auto add = [&g](const char* name, FnId fn, const char* start,
                          const char* step, std::uint64_t cells) {
      GridSpec s;
      s.name = name;
      s.fn = fn;
      s.x_start = parse_decimal(start);
      s.step = parse_decimal(step);
      s.cells = cells;
      g.push_back(std::move(s));
    };
    add("paper:g1", FnId::g1, "0", "0.00001", 700000);
    add("paper:h1", FnId::h1, "0", "0.000001", 8000000);
    add("paper:alpha", FnId::alpha, "3.05", "0.00001", 395000);
    add("paper:beta", FnId::beta, "3.05", "0.00001", 395000);
    add("paper:gamma", FnId::gamma, "3.05", "0.00001", 395000);
    add("paper:r", FnId::r, "0.7", "0.001", 2800);
    return g;
  }();
  return grids;
}

const GridSpec* paper_grid(const std::string& name) {
  for (const GridSpec& g : paper_grids())
    if (g.name == name) return &g;
  return nullptr;
}

GridReport run_grid(const GridSpec& spec) {
  if (fn_info(spec.fn).arity != 2)
    throw argument_error("run_grid: " + fn_name(spec.fn) +
                         " is not a bivariate bracket function");
  if (spec.step <= 0 || spec.cells == 0)
    throw argument_error("run_grid: need step > 0 and cells >= 1");
  if (spec.max_depth < 0 || spec.max_depth > 30)
    throw argument_error("run_grid: max_depth out of range");
  const auto t_start = std::chrono::steady_clock::now();

  GridReport rep;
  rep.grid = spec.name.empty() ? fn_name(spec.fn) : spec.name;
  CellCtx ctx{spec.fn, /*diagonal=*/false, spec.max_depth};
  rat a = spec.x_start;
  for (std::uint64_t i = 0; i < spec.cells; ++i) {
    const rat b = a + spec.step;
    record_cell(rep, ctx, i, a, b);
    a = b;
  }
  rep.max_depth_used = ctx.depth_used;
  rep.min_cell = ctx.min_cell;
  rep.min_lower_bound = ctx.min_value;
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

GridReport tail_scan(FnId fn, const rat& x_lo, const rat& x_hi,
                     const rat& step, int max_depth) {
  const int arity = fn_info(fn).arity;
  if (arity != 1 && arity != 2)
    throw argument_error("tail_scan: " + fn_name(fn) +
                         " is neither univariate nor bivariate");
  if (x_lo >= x_hi || step <= 0)
    throw argument_error("tail_scan: need x_lo < x_hi and step > 0");
  if (x_hi > 135)
    throw argument_error(
        "tail_scan: x_hi above 135 would overflow the e^{5x} terms");
  if ((x_hi - x_lo) / step > 1000000000)
    throw argument_error("tail_scan: more than 1e9 cells requested");
  if (max_depth < 0 || max_depth > 30)
    throw argument_error("tail_scan: max_depth out of range");
  const auto t_start = std::chrono::steady_clock::now();

  GridReport rep;
  rep.grid = "tail:" + fn_name(fn) + " [" + x_lo.get_str() + ", " +
             x_hi.get_str() + "]";
  CellCtx ctx{fn, /*diagonal=*/true, max_depth};
  rat a = x_lo;
  for (std::uint64_t i = 0; a < x_hi; ++i) {
    rat b = a + step;
    if (b > x_hi) b = x_hi;
    record_cell(rep, ctx, i, a, b);
    a = b;
  }
  rep.max_depth_used = ctx.depth_used;
  rep.min_cell = ctx.min_cell;
  rep.min_lower_bound = ctx.min_value;
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

std::string grid_manifest_json() {
  nlohmann::ordered_json j;
  j["version"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GridSpec& g : paper_grids()) {
    arr.push_back({{"name", g.name},
                   {"fn", fn_name(g.fn)},
                   {"x_start", g.x_start.get_str()},
                   {"step", g.step.get_str()},
                   {"cells", g.cells},
                   {"max_depth", g.max_depth}});
  }
  j["grids"] = std::move(arr);
  return j.dump(2);
}

std::vector<GridSpec> grid_specs_from_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw argument_error(std::string("grid manifest: invalid JSON: ") +
                         e.what());
  }
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  if (doc.is_array())
    entries = doc;
  else if (doc.is_object() && doc.contains("grids"))
    entries = doc["grids"];
  else if (doc.is_object())
    entries.push_back(doc);
  else
    throw argument_error("grid manifest: expected an object or an array");

  std::vector<GridSpec> specs;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("fn") || !e.contains("x_start") ||
        !e.contains("step") || !e.contains("cells"))
      throw argument_error(
          "grid manifest: each grid needs fn, x_start, step, cells");
    GridSpec s;
    s.name = e.value("name", std::string());
    const std::string fn = e["fn"].get<std::string>();
    if (!fn_id_from_name(fn, s.fn))
      throw argument_error("grid manifest: unknown function " + fn);
    s.x_start = parse_rat_field(e["x_start"], "x_start");
    s.step = parse_rat_field(e["step"], "step");
    s.cells = e["cells"].get<std::uint64_t>();
    s.max_depth = e.value("max_depth", 8);
    specs.push_back(std::move(s));
  }
  return specs;
}

std::string grid_report_json(const GridReport& r) {
  nlohmann::ordered_json j;
  j["grid"] = r.grid;
  j["cells_checked"] = r.cells_checked;
  j["failure_count"] = r.failure_count;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const GridFailure& f : r.failures)
    fails.push_back({{"cell", f.cell},
                     {"lo", f.value.lo},
                     {"hi", f.value.hi},
                     {"definite", f.definite()}});
  j["failures"] = std::move(fails);
  j["min_lower_bound"] = {{"cell", r.min_cell},
                          {"lo", r.min_lower_bound.lo},
                          {"hi", r.min_lower_bound.hi}};
  j["refined"] = r.refined;
  j["max_depth_used"] = r.max_depth_used;
  j["passed"] = r.passed();
  j["inconclusive"] = r.inconclusive();
  j["wall_time_s"] = r.wall_time_s;
  return j.dump(2);
}

}  // namespace primebounds
