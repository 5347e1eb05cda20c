#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hvapprox/approximation.hpp"
#include "hvapprox/closed_form.hpp"
#include "hvapprox/errors.hpp"
#include "hvapprox/front.hpp"
#include "hvapprox/hypervolume.hpp"
#include "hvapprox/numeric.hpp"
#include "hvapprox/point_set.hpp"
#include "hvapprox/sweep.hpp"

namespace py = pybind11;
using namespace hvapprox;

namespace {

ReferencePoint as_ref(std::pair<double, double> r) { return {r.first, r.second}; }

SolverOptions options_from(int max_iters, double x_tol, double f_tol,
                           int multistart_count, unsigned long long seed,
                           bool verbose) {
  SolverOptions opts;
  opts.max_iters = max_iters;
  opts.x_tol = x_tol;
  opts.f_tol = f_tol;
  opts.multistart_count = multistart_count;
  opts.seed = seed;
  opts.verbose = verbose;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Optimal hypervolume and multiplicative-approximation distributions "
      "on bi-objective Pareto fronts";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<DegenerateReferenceError>(
      m, "DegenerateReferenceError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError",
                                           PyExc_ValueError);

  py::class_<Front>(m, "Front")
      .def_static("linear", &Front::linear, py::arg("c"), py::arg("d"))
      .def_static("reciprocal", &Front::reciprocal, py::arg("c"))
      .def_static("power", &Front::power, py::arg("p"), py::arg("x1"),
                  py::arg("y1"), py::arg("xmu"), py::arg("ymu"))
      .def_static("parse",
                  static_cast<Front (*)(const std::string&)>(&parse_front),
                  py::arg("spec"))
      .def("eval", &Front::eval, py::arg("x"))
      .def("inverse", &Front::inverse, py::arg("y"))
      .def("slope", &Front::slope, py::arg("x"))
      .def("domain", &Front::domain)
      .def_property_readonly("x_min", &Front::x_min)
      .def_property_readonly("x_max", &Front::x_max)
      .def_property_readonly("y_min", &Front::y_min)
      .def_property_readonly("y_max", &Front::y_max)
      .def("__repr__", [](const Front& f) {
        return "Front(" + f.describe() + ")";
      });

  m.def(
      "hyp2d",
      [](const Front& f, const std::vector<double>& xs,
         std::pair<double, double> ref) {
        return hyp2d(f, PointSet(f, xs), as_ref(ref));
      },
      py::arg("front"), py::arg("points"), py::arg("ref"),
      "Exact 2-D hypervolume of the points relative to the reference point");

  m.def(
      "contributions",
      [](const Front& f, const std::vector<double>& xs,
         std::pair<double, double> ref) {
        return contributions(f, PointSet(f, xs), as_ref(ref));
      },
      py::arg("front"), py::arg("points"), py::arg("ref"),
      "Per-point exclusive hypervolume");

  m.def(
      "ratio",
      [](const Front& f, const std::vector<double>& xs) {
        const ApproxResult r = ratio(f, PointSet(f, xs));
        py::list terms;
        for (const auto& t : r.per_interval)
          terms.append(py::make_tuple(t.index, t.worst_x, t.ratio));
        return py::dict(py::arg("delta") = r.delta,
                        py::arg("witness_x") = r.witness_x,
                        py::arg("per_interval") = terms);
      },
      py::arg("front"), py::arg("points"),
      "Approximation ratio with witness and per-interval breakdown");

  m.def(
      "interval_worst_point",
      [](const Front& f, double xi, double xj) {
        const WorstPoint wp = interval_worst_point(f, xi, xj);
        return py::make_tuple(wp.x, wp.ratio);
      },
      py::arg("front"), py::arg("xi"), py::arg("xj"));

  m.def(
      "check_certificate",
      [](const Front& f, const std::vector<double>& xs,
         const std::vector<double>& zs, double delta, bool fixed_endpoints) {
        Certificate cert{zs, delta,
                         fixed_endpoints ? CertificateMode::fixed_endpoints
                                         : CertificateMode::free_endpoints};
        return check_certificate(f, PointSet(f, xs), cert);
      },
      py::arg("front"), py::arg("points"), py::arg("zs"), py::arg("delta"),
      py::arg("fixed_endpoints") = false);

  m.def("linear_hyp_dist", [](double c, double d, int mu) {
    return linear_hyp_dist(c, d, mu).xs();
  });
  m.def("linear_hyp_ratio_fixed", &linear_hyp_ratio_fixed);
  m.def("convex_hyp_dist",
        [](double c, int mu) { return convex_hyp_dist(c, mu).xs(); });
  m.def("convex_hyp_ratio_fixed", &convex_hyp_ratio_fixed);
  m.def("linear_opt_app_dist", [](double c, double d, int mu) {
    const OptApprox r = linear_opt_app_dist(c, d, mu);
    return py::make_tuple(r.points.xs(), r.delta);
  });
  m.def("convex_opt_app_dist", [](double c, int mu) {
    const OptApprox r = convex_opt_app_dist(c, mu);
    return py::make_tuple(r.points.xs(), r.delta);
  });
  m.def("linear_hyp_dist_ref",
        [](double c, double d, int mu, std::pair<double, double> ref) {
          const RefDist r = linear_hyp_dist_ref(c, d, mu, as_ref(ref));
          return py::make_tuple(r.points.xs(), to_string(r.regime.case_id));
        });
  m.def("linear_hyp_ratio_ref",
        [](double c, double d, int mu, std::pair<double, double> ref) {
          const RatioBreakdown b = linear_hyp_ratio_ref(c, d, mu, as_ref(ref));
          return py::dict(py::arg("left") = b.left,
                          py::arg("center") = b.center,
                          py::arg("right") = b.right,
                          py::arg("overall") = b.overall);
        });
  m.def("convex_hyp_dist_ref",
        [](double c, int mu, std::pair<double, double> ref) {
          const RefDist r = convex_hyp_dist_ref(c, mu, as_ref(ref));
          return py::make_tuple(r.points.xs(), to_string(r.regime.case_id));
        });
  m.def("convex_hyp_ratio_ref",
        [](double c, int mu, std::pair<double, double> ref) {
          const RatioBreakdown b = convex_hyp_ratio_ref(c, mu, as_ref(ref));
          return py::dict(py::arg("left") = b.left,
                          py::arg("center") = b.center,
                          py::arg("right") = b.right,
                          py::arg("overall") = b.overall);
        });

  m.def(
      "maximize_hypervolume",
      [](const Front& f, int mu, std::pair<double, double> ref,
         bool fixed_endpoints, int max_iters, double x_tol, double f_tol,
         int multistart_count, unsigned long long seed, bool verbose) {
        const MaximizeResult r = maximize_hypervolume(
            f, mu, as_ref(ref), fixed_endpoints,
            options_from(max_iters, x_tol, f_tol, multistart_count, seed,
                         verbose));
        return py::dict(py::arg("points") = r.points.xs(),
                        py::arg("objective") = r.objective,
                        py::arg("stationarity") = r.stationarity,
                        py::arg("iterations") = r.iterations,
                        py::arg("start_index") = r.start_index);
      },
      py::arg("front"), py::arg("mu"), py::arg("ref"),
      py::arg("fixed_endpoints") = false, py::arg("max_iters") = 10000,
      py::arg("x_tol") = 1e-10, py::arg("f_tol") = 1e-12,
      py::arg("multistart_count") = 8, py::arg("seed") = 0,
      py::arg("verbose") = false);

  m.def(
      "optimal_approximation",
      [](const Front& f, int mu, bool fixed_endpoints, int max_iters,
         double x_tol, double f_tol, int multistart_count,
         unsigned long long seed, bool verbose) {
        const OptimalApproximation r = optimal_approximation(
            f, mu, fixed_endpoints,
            options_from(max_iters, x_tol, f_tol, multistart_count, seed,
                         verbose));
        return py::dict(py::arg("points") = r.points.xs(),
                        py::arg("delta") = r.delta,
                        py::arg("zs") = r.certificate.zs,
                        py::arg("iterations") = r.iterations);
      },
      py::arg("front"), py::arg("mu"), py::arg("fixed_endpoints") = false,
      py::arg("max_iters") = 10000, py::arg("x_tol") = 1e-10,
      py::arg("f_tol") = 1e-12, py::arg("multistart_count") = 8,
      py::arg("seed") = 0, py::arg("verbose") = false);

  m.def(
      "brute_force_best",
      [](const Front& f, int mu, std::pair<double, double> ref,
         const std::string& objective, int grid_n) {
        const Objective obj =
            objective == "hyp" ? Objective::hyp : Objective::app;
        const BruteForceResult r =
            brute_force_best(f, mu, as_ref(ref), obj, grid_n);
        return py::make_tuple(r.points.xs(), r.objective);
      },
      py::arg("front"), py::arg("mu"), py::arg("ref"), py::arg("objective"),
      py::arg("grid_n"));

  m.attr("__version__") = "1.0.0";
}
