#pragma once
// Grid certification for the bivariate bracket functions (g1, h1, alpha,
// beta, gamma, r): cell [t0, t1] is certified nonnegative on the diagonal by
// the single evaluation F(t0, t1), relying on the declared bracket property
// that F is nondecreasing in its first argument and nonincreasing in its
// second, so F(x, x) >= F(t0, t1) whenever t0 <= x <= t1.  Cells are
// evaluated with outward-rounded interval arithmetic; straddling cells are
// subdivided at exact rational midpoints up to a depth limit.
//
// tail_scan runs the same cell scheme on the diagonal (or on a univariate
// function) with centered-form enclosures; its result is a bounded-tail
// numeric check over [x_lo, x_hi], not a statement about all x.

#include <cstdint>
#include <string>
#include <vector>

#include "primebounds/functions.hpp"
#include "primebounds/interval.hpp"
#include "primebounds/rational.hpp"

namespace primebounds {

struct GridSpec {
  std::string name;
  FnId fn = FnId::g1;  // must be bivariate for run_grid
  rat x_start;         // exact cell origin
  rat step;            // exact cell width, > 0
  std::uint64_t cells = 0;
  int max_depth = 8;  // subdivision depth limit for straddling cells
};

struct GridFailure {
  std::uint64_t cell = 0;
  // Best enclosure at the deepest split; hi < 0 is a definite bracket
  // failure, a straddle means the depth limit was exhausted (inconclusive).
  Interval value = Interval::invalid();
  bool definite() const { return value.valid() && value.hi < 0.0; }
};

struct GridReport {
  std::string grid;
  std::uint64_t cells_checked = 0;
  std::vector<GridFailure> failures;  // ascending by cell, capped
  std::uint64_t failure_count = 0;    // true count, preserved past the cap
  std::uint64_t indeterminate_failure_count = 0;  // straddles at depth limit
  // Smallest leaf enclosure certification rests on (cells or sub-cells that
  // were not subdivided further), keyed by top-level cell index.
  std::uint64_t min_cell = 0;
  Interval min_lower_bound = Interval::invalid();
  std::uint64_t refined = 0;  // top-level cells that needed subdivision
  int max_depth_used = 0;
  double wall_time_s = 0.0;  // excluded from determinism guarantees
  bool passed() const { return failure_count == 0; }
  // Inconclusive: no definite counterexample, but some cell could not be
  // settled within the depth limit.
  bool inconclusive() const {
    return indeterminate_failure_count > 0 &&
           indeterminate_failure_count == failure_count;
  }
};

// The six literature grids, keyed "paper:g1", "paper:h1", "paper:alpha",
// "paper:beta", "paper:gamma", "paper:r".
const std::vector<GridSpec>& paper_grids();
const GridSpec* paper_grid(const std::string& name);  // nullptr if unknown

GridReport run_grid(const GridSpec& spec);

// Nonnegativity scan of F(x, x) (bivariate fn) or F(x) (univariate fn) over
// [x_lo, x_hi]; the final cell is clipped to x_hi.  Cells use the
// intersection of the direct enclosure with the centered form
// F(m) + F'(X) (X - m), the derivative coming from forward-mode dual
// intervals.  x_hi <= 135 keeps every exponential inside double range (the
// steepest integrand grows like e^{5x}).
GridReport tail_scan(FnId fn, const rat& x_lo, const rat& x_hi,
                     const rat& step, int max_depth = 8);

// Versioned manifest of the six paper grids / parse one manifest document
// (either a single spec object or {"version":1,"grids":[...]}).
std::string grid_manifest_json();
std::vector<GridSpec> grid_specs_from_json(const std::string& text);
std::string grid_report_json(const GridReport& r);

}  // namespace primebounds
