// Python bindings for the primebounds core: prime/theta queries, bound and
// predicate evaluation with outward-rounded enclosures, range verification,
// threshold search, and grid certification.
//
// Interval results cross the boundary as (lo, hi) tuples; structured reports
// reuse the library's canonical JSON schemas and arrive as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "primebounds/bounds.hpp"
#include "primebounds/engine.hpp"
#include "primebounds/grid.hpp"
#include "primebounds/predicates.hpp"
#include "primebounds/theta.hpp"
#include "primebounds/verify.hpp"

namespace py = pybind11;
using namespace primebounds;

namespace {

py::object json_loads(const std::string& s) {
  return py::module_::import("json").attr("loads")(s);
}

py::tuple iv_tuple(const Interval& v) { return py::make_tuple(v.lo, v.hi); }

PrecisionMode precision_from(const std::string& s) {
  if (s == "standard") return PrecisionMode::standard;
  if (s == "escalating") return PrecisionMode::escalating;
  throw argument_error("precision must be \"standard\" or \"escalating\"");
}

VerifyOptions make_opts(const std::string& precision, std::uint64_t chunk_size,
                        int workers, const std::string& checkpoint_dir,
                        bool resume) {
  VerifyOptions o;
  o.precision = precision_from(precision);
  o.chunk_size = chunk_size;
  o.workers = workers;
  o.checkpoint_dir = checkpoint_dir;
  o.resume = resume;
  return o;
}

py::dict outcome_dict(const CheckOutcome& out) {
  py::dict d;
  d["verdict"] = std::string(verdict_name(out.verdict));
  d["margin"] = iv_tuple(out.margin);
  d["escalations"] = out.escalations;
  return d;
}

Interval theta_at(const PrimeEngine& eng, std::uint64_t n) {
  if (n == 0) throw argument_error("prime index must be >= 1");
  if (n == 1) {
    ThetaAccumulator acc;
    acc.add_term(std::log(2.0));
    return acc.enclosure();
  }
  Interval th;
  eng.stream_points(n, n, [&](const PrimePoint& pt) {
    th = pt.theta;
    return true;
  });
  return th;
}

rat rat_arg(const std::string& s, const char* what) {
  try {
    return parse_decimal(s);
  } catch (const std::exception& e) {
    throw argument_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_primebounds, m) {
  m.doc() =
      "Explicit bounds for the n-th prime and theta(p_n): verified "
      "enclosures, exhaustive range verification, and grid certification.";

  py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<PrimeEngine>(m, "Engine",
                          "Segmented sieve with a verified theta accumulator; "
                          "all queries are bounded by the configured ceiling.")
      .def(py::init<std::uint64_t, std::size_t>(),
           py::arg("ceiling") = kDefaultCeiling,
           py::arg("segment_bytes") = std::size_t{256 * 1024})
      .def_property_readonly("ceiling", &PrimeEngine::ceiling)
      .def("nth_prime", &PrimeEngine::nth_prime, py::arg("n"),
           "p_n, the n-th prime (1-based).")
      .def("prime_count", &PrimeEngine::prime_count, py::arg("x"),
           "pi(x), the number of primes <= x.")
      .def(
          "theta",
          [](const PrimeEngine& eng, std::uint64_t n) {
            return iv_tuple(theta_at(eng, n));
          },
          py::arg("n"),
          "Enclosure (lo, hi) of theta(p_n) = sum of log p over the first n "
          "primes.")
      .def(
          "point",
          [](const PrimeEngine& eng, std::uint64_t n) {
            const Interval th = theta_at(eng, n);
            const PrimePoint pt = make_point(n, eng.nth_prime(n));
            py::dict d;
            d["n"] = pt.n;
            d["p"] = pt.p;
            d["y"] = iv_tuple(pt.y);
            d["w"] = iv_tuple(pt.w);
            d["z"] = iv_tuple(pt.z);
            d["theta"] = iv_tuple(th);
            return d;
          },
          py::arg("n"),
          "All derived quantities at index n: p, y = log n, w = log log n, "
          "z = log p, and the theta enclosure.");

  // registries
  m.def("bounds", [] { return json_loads(bounds_registry_json()); },
        "The bound registry as a dict (schema: data/bounds.json).");
  m.def("predicates", [] { return json_loads(predicates_registry_json()); },
        "The predicate registry as a dict.");
  m.def("grid_manifest", [] { return json_loads(grid_manifest_json()); },
        "The built-in certification grids as a dict "
        "(schema: data/grid_manifest.json).");

  // pointwise evaluation
  m.def(
      "eval_bound",
      [](const std::string& id, std::uint64_t n) {
        return iv_tuple(eval_bound(id, n));
      },
      py::arg("id"), py::arg("n"),
      "Outward-rounded enclosure (lo, hi) of the bound's right-hand side at "
      "index n.");
  m.def(
      "eval_bound",
      [](const std::string& id, std::uint64_t n, std::uint64_t p) {
        return iv_tuple(eval_bound_z(id, n, p));
      },
      py::arg("id"), py::arg("n"), py::arg("p"),
      "Enclosure of a z-form right-hand side, which needs p_n as well.");
  m.def(
      "check_bound",
      [](const std::string& id, std::uint64_t n, std::uint64_t p,
         const std::string& precision) {
        return outcome_dict(
            check_bound(id, make_point(n, p), precision_from(precision)));
      },
      py::arg("id"), py::arg("n"), py::arg("p"),
      py::arg("precision") = "escalating",
      "Verdict + signed margin for one bound at the point (n, p_n).");
  m.def(
      "check_predicate",
      [](const std::string& id, std::uint64_t n, std::uint64_t p,
         const std::string& precision) {
        return outcome_dict(
            check_predicate(id, make_point(n, p), precision_from(precision)));
      },
      py::arg("id"), py::arg("n"), py::arg("p"),
      py::arg("precision") = "escalating",
      "Verdict + signed margin for one predicate at the point (n, p_n).");

  // range verification
  m.def(
      "verify_range",
      [](const PrimeEngine& eng, const std::string& subject, std::uint64_t n_lo,
         std::uint64_t n_hi, const std::string& precision,
         std::uint64_t chunk_size, int workers,
         const std::string& checkpoint_dir, bool resume) {
        const VerifyOptions o =
            make_opts(precision, chunk_size, workers, checkpoint_dir, resume);
        VerificationReport rep;
        {
          py::gil_scoped_release rel;
          rep = verify_range(eng, subject, n_lo, n_hi, o);
        }
        return json_loads(report_json(rep));
      },
      py::arg("engine"), py::arg("subject"), py::arg("n_lo"), py::arg("n_hi"),
      py::arg("precision") = "escalating",
      py::arg("chunk_size") = std::uint64_t{1} << 20, py::arg("workers") = 1,
      py::arg("checkpoint_dir") = "", py::arg("resume") = false,
      "Check a bound or predicate at every index in [n_lo, n_hi]; returns the "
      "verification report as a dict.");
  m.def(
      "verify_theta",
      [](const PrimeEngine& eng, const std::string& subject, std::uint64_t n_lo,
         std::uint64_t n_hi, const std::string& precision,
         std::uint64_t chunk_size, int workers,
         const std::string& checkpoint_dir, bool resume) {
        const VerifyOptions o =
            make_opts(precision, chunk_size, workers, checkpoint_dir, resume);
        VerificationReport rep;
        {
          py::gil_scoped_release rel;
          rep = verify_theta(eng, subject, n_lo, n_hi, o);
        }
        return json_loads(report_json(rep));
      },
      py::arg("engine"), py::arg("subject"), py::arg("n_lo"), py::arg("n_hi"),
      py::arg("precision") = "escalating",
      py::arg("chunk_size") = std::uint64_t{1} << 20, py::arg("workers") = 1,
      py::arg("checkpoint_dir") = "", py::arg("resume") = false,
      "verify_range for a theta bound, plus the |theta - p| envelope tally.");
  m.def(
      "find_min_threshold",
      [](const PrimeEngine& eng, const std::string& subject,
         std::uint64_t n_hi, const std::string& precision,
         std::uint64_t chunk_size, int workers) {
        VerifyOptions o;
        o.precision = precision_from(precision);
        o.chunk_size = chunk_size;
        o.workers = workers;
        py::gil_scoped_release rel;
        return find_min_threshold(eng, subject, n_hi, o);
      },
      py::arg("engine"), py::arg("subject"), py::arg("n_hi"),
      py::arg("precision") = "escalating",
      py::arg("chunk_size") = std::uint64_t{1} << 20, py::arg("workers") = 1,
      "Least N such that the subject holds at every index in [N, n_hi].");

  // grids
  m.def(
      "run_grid",
      [](const std::string& name) {
        const GridSpec* g = paper_grid(name);
        if (!g) throw argument_error("unknown grid: " + name);
        GridReport rep;
        {
          py::gil_scoped_release rel;
          rep = run_grid(*g);
        }
        return json_loads(grid_report_json(rep));
      },
      py::arg("name"),
      "Run one of the built-in certification grids (see grid_manifest()).");
  m.def(
      "run_grid",
      [](const std::string& name, const std::string& fn,
         const std::string& x_start, const std::string& step,
         std::uint64_t cells, int max_depth) {
        GridSpec spec;
        spec.name = name;
        FnId id;
        if (!fn_id_from_name(fn, id))
          throw argument_error("unknown function: " + fn);
        spec.fn = id;
        spec.x_start = rat_arg(x_start, "x_start");
        spec.step = rat_arg(step, "step");
        spec.cells = cells;
        spec.max_depth = max_depth;
        GridReport rep;
        {
          py::gil_scoped_release rel;
          rep = run_grid(spec);
        }
        return json_loads(grid_report_json(rep));
      },
      py::arg("name"), py::arg("fn"), py::arg("x_start"), py::arg("step"),
      py::arg("cells"), py::arg("max_depth") = 8,
      "Run an ad-hoc grid; x_start and step are exact decimal or p/q "
      "strings.");
  m.def(
      "tail_scan",
      [](const std::string& fn, const std::string& x_lo,
         const std::string& x_hi, const std::string& step, int max_depth) {
        FnId id;
        if (!fn_id_from_name(fn, id))
          throw argument_error("unknown function: " + fn);
        const rat lo = rat_arg(x_lo, "x_lo");
        const rat hi = rat_arg(x_hi, "x_hi");
        const rat st = rat_arg(step, "step");
        GridReport rep;
        {
          py::gil_scoped_release rel;
          rep = tail_scan(id, lo, hi, st, max_depth);
        }
        return json_loads(grid_report_json(rep));
      },
      py::arg("fn"), py::arg("x_lo"), py::arg("x_hi"), py::arg("step"),
      py::arg("max_depth") = 8,
      "Certify fn >= 0 on [x_lo, x_hi] with centered-form enclosures "
      "(diagonal restriction for bivariate fn).");
}
