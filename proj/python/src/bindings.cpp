#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcc/certify.hpp"
#include "dcc/cli.hpp"
#include "dcc/counterexample.hpp"
#include "dcc/extremal.hpp"
#include "dcc/gorny.hpp"
#include "dcc/quasianalytic.hpp"
#include "dcc/sequences.hpp"

namespace py = pybind11;
using namespace dcc;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

WeightOracle oracle_named(const std::string& family, double s, long budget) {
  if (family == "power-n") return oracle_from_family(Gevrey{1.0}, budget);
  if (family == "gevrey") return oracle_from_family(Gevrey{s}, budget);
  if (family == "nlogn") return oracle_from_family(NLogN{}, budget);
  if (family == "double-exp") return double_exponential_oracle(budget);
  throw InvalidArgument("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Denjoy-Carleman class toolkit";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<HypothesisFailure>(m, "HypothesisFailure", base.ptr());

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("condition", &ConditionReport::condition)
      .def_readonly("holds", &ConditionReport::holds)
      .def_readonly("first_violation", &ConditionReport::first_violation)
      .def_readonly("margin", &ConditionReport::margin)
      .def("__bool__", [](const ConditionReport& r) { return r.holds; })
      .def("__repr__", [](const ConditionReport& r) {
        return "<ConditionReport " + (r.holds ? r.condition + " holds" : describe(r)) + ">";
      });

  py::class_<LogSequence>(m, "LogSequence")
      .def(py::init<std::vector<double>>(), py::arg("logs"))
      .def_property_readonly("n_max", &LogSequence::n_max)
      .def_property_readonly("logs", [](const LogSequence& s) { return to_vector(s.logs()); })
      .def("__getitem__", [](const LogSequence& s, int n) {
        if (n < 0 || n > s.n_max()) throw py::index_error();
        return s[n];
      })
      .def("__len__", [](const LogSequence& s) { return s.n_max() + 1; });

  m.def("gevrey", [](double s, int n_max) { return build_sequence(Gevrey{s}, n_max); },
        py::arg("s"), py::arg("n_max"));
  m.def("nlogn", [](int n_max) { return build_sequence(NLogN{}, n_max); }, py::arg("n_max"));
  m.def("explicit", [](std::vector<double> logs, int n_max) {
        return build_sequence(Explicit{std::move(logs)}, n_max);
      },
        py::arg("logs"), py::arg("n_max"));
  m.def("rescale", &rescale, py::arg("seq"), py::arg("log_factor"));
  m.def("ratios", &ratios, py::arg("seq"));
  m.def("check_log_convex", &check_log_convex, py::arg("seq"));
  m.def("check_condition_A", &check_condition_A, py::arg("seq"), py::arg("m0"));
  m.def("fit_analytic_constant", &fit_analytic_constant, py::arg("seq"));

  m.def("vanishing_radius", &vanishing_radius, py::arg("c"));
  m.def("taylor_vanishing_bound", &taylor_vanishing_bound, py::arg("c"), py::arg("dist"), py::arg("d"));

  m.def("gorny_bound",
        [](double log_G0, double log_Gm, int mm, int k, double length) {
          return gorny_bound({.log_G0 = log_G0, .log_Gm = log_Gm, .m = mm, .k = k, .length = length});
        },
        py::arg("log_G0"), py::arg("log_Gm"), py::arg("m"), py::arg("k"), py::arg("length"));
  py::class_<GornyCheck>(m, "GornyCheck")
      .def_readonly("lhs", &GornyCheck::lhs)
      .def_readonly("rhs", &GornyCheck::rhs)
      .def_readonly("holds", &GornyCheck::holds);
  m.def("corpus_ids", &corpus_ids);
  m.def("verify_gorny_empirical", &verify_gorny_empirical, py::arg("fn"), py::arg("a"), py::arg("b"),
        py::arg("m"), py::arg("k"), py::arg("grid") = 10000);

  py::class_<EnvelopeEntry>(m, "EnvelopeEntry")
      .def_readonly("order", &EnvelopeEntry::order)
      .def_readonly("log_bound", &EnvelopeEntry::log_bound)
      .def_readonly("log_simplified", &EnvelopeEntry::log_simplified);
  py::class_<Certificate>(m, "Certificate")
      .def_readonly("c0", &Certificate::c0)
      .def_readonly("c", &Certificate::c)
      .def_readonly("log_C1", &Certificate::log_C1)
      .def_readonly("log_K", &Certificate::log_K)
      .def_readonly("envelope", &Certificate::envelope)
      .def_readonly("full_coverage", &Certificate::full_coverage)
      .def_readonly("c1_dominates", &Certificate::c1_dominates);
  m.def("log_c1", &log_c1, py::arg("c0"), py::arg("c"), py::arg("length"), py::arg("log_M_c0"));
  m.def("certify_membership",
        [](const LogSequence& M, std::vector<long> orders, std::vector<double> log_F, double length,
           double m0, std::vector<double> small) {
          if (orders.size() != log_F.size()) throw InvalidArgument("orders and log_F differ in length");
          SparseBounds F;
          for (std::size_t t = 0; t < orders.size(); ++t) F.entries.emplace_back(orders[t], log_F[t]);
          return certify_membership(M, GapSequence(std::move(orders)), F, length, m0, small);
        },
        py::arg("M"), py::arg("orders"), py::arg("log_F"), py::arg("length"), py::arg("m0"),
        py::arg("small_order_log_bounds") = std::vector<double>{});

  py::class_<CounterexampleCert>(m, "CounterexampleCert")
      .def_readonly("log_N", &CounterexampleCert::log_N)
      .def_readonly("d", &CounterexampleCert::d)
      .def_readonly("i", &CounterexampleCert::i)
      .def_readonly("log_m", &CounterexampleCert::log_m);
  m.def("construct_counterexample",
        [](const std::string& family, long i0, int rounds, double s, long budget) {
          return construct_counterexample(oracle_named(family, s, budget), i0, rounds);
        },
        py::arg("family"), py::arg("i0"), py::arg("rounds"), py::arg("s") = 1.0,
        py::arg("budget") = 1'000'000);
  m.def("verify_counterexample",
        [](const CounterexampleCert& cert, const std::string& family, double s) {
          return verify_counterexample(cert, oracle_named(family, s, 1'000'000));
        },
        py::arg("cert"), py::arg("family"), py::arg("s") = 1.0);

  py::class_<ExtremalSeries>(m, "ExtremalSeries")
      .def(py::init<std::vector<double>, double, double, int>(), py::arg("log_N"), py::arg("a"),
           py::arg("b"), py::arg("k_trunc"))
      .def_property_readonly("n_max", &ExtremalSeries::n_max)
      .def_property_readonly("k_trunc", &ExtremalSeries::k_trunc)
      .def_property_readonly("center", &ExtremalSeries::center);
  m.def("build_extremal", &build_extremal, py::arg("N"), py::arg("a"), py::arg("b"),
        py::arg("k_trunc") = 0);
  m.def("eval_derivative",
        [](const ExtremalSeries& s, int n, double x) { return eval_derivative(s, n, x).value; },
        py::arg("series"), py::arg("n"), py::arg("x"));
  m.def("check_upper_bound",
        [](const ExtremalSeries& s, int n, int grid) {
          const auto r = check_upper_bound(s, n, grid);
          return py::make_tuple(r.holds, r.log_sup_sampled, r.log_bound);
        },
        py::arg("series"), py::arg("n"), py::arg("grid") = 1024);
  m.def("check_midpoint_lower",
        [](const ExtremalSeries& s, int n) {
          const auto r = check_midpoint_lower(s, n);
          return py::make_tuple(r.holds, r.log_value, r.log_lower);
        },
        py::arg("series"), py::arg("n"));
  m.def("finite_difference_oracle", &finite_difference_oracle, py::arg("series"), py::arg("n"),
        py::arg("x"), py::arg("h"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
