#include "dcc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dcc/certify.hpp"
#include "dcc/counterexample.hpp"
#include "dcc/extremal.hpp"
#include "dcc/gorny.hpp"
#include "dcc/report.hpp"
#include "dcc/sequences.hpp"

namespace dcc::cli {

namespace {

using report::Json;
using report::number;

/// A check ran to completion and came out negative (exit code 2).
class Rejected : public Error {
 public:
  Rejected(const std::string& what, Json detail) : Error(what), detail_(std::move(detail)) {}
  const Json& detail() const { return detail_; }

 private:
  Json detail_;
};

struct Options {
  std::string family;
  double s = 1.0;
  int n_max = 100;
  std::string sequence_path;
  double m0 = 0.0;
  std::string output_path;

  // certify
  std::vector<long> orders;
  std::string bounds_path;
  double length = 1.0;

  // counterexample
  long i0 = 2;
  int rounds = 1;
  long budget = 1'000'000;
  std::string verify_path;

  // extremal
  std::string counterexample_path;
  int extend_to = 0;
  double a = -0.5;
  double b = 0.5;
  int k_trunc = 0;
  int grid = 1024;
  int max_order = -1;

  // gorny
  std::string fn_id;
  int m = 2;
  int k = 1;
  bool sweep = false;
};

report::SequenceSpec family_spec(const Options& o) {
  report::SequenceSpec spec{.n_max = o.n_max};
  if (o.family == "gevrey") {
    spec.family = Gevrey{o.s};
  } else if (o.family == "power-n") {
    spec.family = Gevrey{1.0};
  } else if (o.family == "nlogn") {
    spec.family = NLogN{};
  } else {
    throw InvalidArgument("unknown family '" + o.family + "' (expected gevrey, power-n or nlogn)");
  }
  return spec;
}

report::SequenceSpec resolve_spec(const Options& o) {
  if (!o.sequence_path.empty() && !o.family.empty()) {
    throw InvalidArgument("--sequence and --family are mutually exclusive");
  }
  if (!o.sequence_path.empty()) return report::sequence_spec_from_json(report::read_file(o.sequence_path));
  if (o.family.empty()) throw InvalidArgument("a weight sequence is required (--family or --sequence)");
  return family_spec(o);
}

Json cmd_check(const Options& o) {
  const auto spec = resolve_spec(o);
  const LogSequence seq = build_sequence(spec.family, spec.n_max);
  const ConditionReport convex = check_log_convex(seq);
  const ConditionReport inter = check_condition_A(seq, o.m0);
  const double c = fit_analytic_constant(seq);
  const QuasianalyticDiagnostic qa = quasianalytic_diagnostic(seq);

  Json j{{"command", "check"},
         {"sequence", report::to_json(spec)},
         {"m0", number(o.m0)},
         {"log_convexity", report::to_json(convex)},
         {"condition_A", report::to_json(inter)},
         {"condition_B", {{"c", number(c)}, {"holds", c > 0.0}}},
         {"quasianalytic",
          {{"partial_sum", number(qa.partial_sum)},
           {"verdict", qa.quasianalytic ? Json(*qa.quasianalytic) : Json(nullptr)}}}};
  if (!convex.holds) throw Rejected(describe(convex), j);
  if (!inter.holds) throw Rejected(describe(inter), j);
  return j;
}

Json cmd_certify(const Options& o) {
  const auto spec = resolve_spec(o);
  const LogSequence seq = build_sequence(spec.family, spec.n_max);
  if (o.bounds_path.empty()) throw InvalidArgument("--bounds is required");
  const auto all = report::bounds_from_json(report::read_file(o.bounds_path));

  std::map<long, double> by_order;
  for (const auto& [order, value] : all) {
    if (!by_order.emplace(order, value).second) {
      throw InvalidArgument("duplicate bound for order " + std::to_string(order));
    }
  }
  std::vector<long> orders = o.orders;
  if (orders.empty()) {
    for (const auto& [order, value] : by_order) orders.push_back(order);
  }
  const GapSequence d(orders);

  SparseBounds F;
  for (long order : d.orders()) {
    const auto it = by_order.find(order);
    if (it == by_order.end()) {
      throw InvalidArgument("no bound supplied for order " + std::to_string(order));
    }
    F.entries.emplace_back(order, it->second);
  }
  std::vector<double> small;
  for (long ell = 0; ell < d.front(); ++ell) {
    const auto it = by_order.find(ell);
    if (it == by_order.end()) {
      small.clear();
      break;
    }
    small.push_back(it->second);
  }

  try {
    const Certificate cert = certify_membership(seq, d, F, o.length, o.m0, small);
    return Json{{"command", "certify"},
                {"sequence", report::to_json(spec)},
                {"orders", orders},
                {"certificate", report::to_json(cert)}};
  } catch (const HypothesisFailure& e) {
    throw Rejected(e.what(), Json{{"hypotheses", report::to_json(e.report())}});
  }
}

WeightOracle counterexample_oracle(const std::string& family, double s, long budget) {
  if (family == "power-n") return oracle_from_family(Gevrey{1.0}, budget);
  if (family == "gevrey") return oracle_from_family(Gevrey{s}, budget);
  if (family == "nlogn") return oracle_from_family(NLogN{}, budget);
  if (family == "double-exp") return double_exponential_oracle(budget);
  throw InvalidArgument("unknown counterexample family '" + family +
                        "' (expected power-n, gevrey, nlogn or double-exp)");
}

Json cmd_counterexample(const Options& o) {
  if (!o.verify_path.empty()) {
    const Json doc = report::read_file(o.verify_path);
    const Json& body = doc.contains("certificate") ? doc.at("certificate") : doc;
    std::string family = o.family;
    double s = o.s;
    if (family.empty() && doc.contains("family")) {
      family = doc.at("family").get<std::string>();
      if (doc.contains("s")) s = report::read_number(doc.at("s"));
    }
    if (family.empty()) throw InvalidArgument("--family is required to re-verify a certificate");
    const WeightOracle oracle = counterexample_oracle(family, s, o.budget);
    const CounterexampleCert cert = report::counterexample_from_json(body);
    const ConditionReport rep = verify_counterexample(cert, oracle);
    Json j{{"command", "counterexample"},
           {"mode", "verify"},
           {"family", family},
           {"s", number(s)},
           {"verification", report::to_json(rep)}};
    if (!rep.holds) throw Rejected(describe(rep), j);
    return j;
  }

  if (o.family.empty()) throw InvalidArgument("--family is required");
  const WeightOracle oracle = counterexample_oracle(o.family, o.s, o.budget);
  const CounterexampleCert cert = construct_counterexample(oracle, o.i0, o.rounds);
  const ConditionReport rep = verify_counterexample(cert, oracle);
  Json j{{"command", "counterexample"},
         {"mode", "construct"},
         {"family", o.family},
         {"s", number(o.s)},
         {"i0", o.i0},
         {"rounds", o.rounds},
         {"certificate", report::to_json(cert)},
         {"verification", report::to_json(rep)}};
  if (!rep.holds) throw Rejected(describe(rep), j);
  return j;
}

Json cmd_extremal(const Options& o) {
  std::vector<double> log_N;
  Json source;
  if (!o.counterexample_path.empty()) {
    const Json doc = report::read_file(o.counterexample_path);
    const Json& body = doc.contains("certificate") ? doc.at("certificate") : doc;
    log_N = report::counterexample_from_json(body).log_N;
    source = Json{{"counterexample", o.counterexample_path}};
  } else {
    const auto spec = resolve_spec(o);
    const LogSequence seq = build_sequence(spec.family, spec.n_max);
    log_N.assign(seq.logs().begin(), seq.logs().end());
    source = report::to_json(spec);
  }
  if (o.extend_to > 0) log_N = extend_constant_ratio(log_N, o.extend_to);

  const int n_max = static_cast<int>(log_N.size()) - 1;
  const ExtremalSeries series(log_N, o.a, o.b, o.k_trunc > 0 ? o.k_trunc : n_max);
  const int top = o.max_order >= 0 ? o.max_order : std::min(20, n_max);
  if (top > n_max) throw InvalidArgument("--max-order exceeds the stored prefix");

  Json rows = Json::array();
  bool all_hold = true;
  for (int n = 0; n <= top; ++n) {
    const MidpointCheck mid = check_midpoint_lower(series, n);
    const UpperBoundCheck up = check_upper_bound(series, n, o.grid);
    all_hold = all_hold && mid.holds && up.holds;
    rows.push_back(Json::array({n, number(mid.log_value), number(mid.log_lower),
                                number(up.log_sup_sampled), number(up.log_bound), mid.holds,
                                up.holds}));
  }
  Json j{{"command", "extremal"},
         {"source", source},
         {"a", number(o.a)},
         {"b", number(o.b)},
         {"n_max", n_max},
         {"k_trunc", series.k_trunc()},
         {"grid", o.grid},
         {"columns", {"n", "log_midpoint", "log_lower", "log_sup_sampled", "log_upper",
                      "midpoint_holds", "upper_holds"}},
         {"rows", rows}};
  if (!all_hold) throw Rejected("extremal bound check failed", j);
  return j;
}

Json cmd_gorny(const Options& o) {
  std::vector<std::string> fns;
  if (!o.fn_id.empty()) {
    fns.push_back(o.fn_id);
  } else if (o.sweep) {
    fns = corpus_ids();
  } else {
    throw InvalidArgument("--fn or --sweep is required");
  }

  Json rows = Json::array();
  bool all_hold = true;
  auto add = [&](const std::string& fn, int m, int k) {
    const GornyCheck chk = verify_gorny_empirical(fn, o.a, o.b, m, k);
    all_hold = all_hold && chk.holds;
    Json row = report::to_json(chk);
    row["fn"] = fn;
    row["m"] = m;
    row["k"] = k;
    rows.push_back(row);
  };
  for (const auto& fn : fns) {
    if (o.sweep) {
      for (int m = 2; m <= o.m; ++m) {
        for (int k = 1; k < m; ++k) add(fn, m, k);
      }
    } else {
      add(fn, o.m, o.k);
    }
  }
  Json j{{"command", "gorny"}, {"a", number(o.a)}, {"b", number(o.b)}, {"rows", rows}};
  if (!all_hold) throw Rejected("Cartan-Gorny bound violated", j);
  return j;
}

void add_sequence_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "Built-in weight family (gevrey, power-n, nlogn)");
  sub->add_option("--s", o.s, "Gevrey index s >= 1");
  sub->add_option("--n-max", o.n_max, "Length of the weight prefix");
  sub->add_option("--sequence", o.sequence_path, "Sequence spec document");
}

Json diagnostic(const char* kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Denjoy-Carleman class toolkit", "dcclass"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output_path, "Write the report to this file");

  auto* check = app.add_subcommand("check", "Check log-convexity, (A) and (B) for a weight sequence");
  add_sequence_flags(check, o);
  check->add_option("--m0", o.m0, "Threshold for condition (A)");

  auto* certify = app.add_subcommand("certify", "Certify C^M membership from sparse derivative bounds");
  add_sequence_flags(certify, o);
  certify->add_option("--orders", o.orders, "Anchor orders, comma separated")->delimiter(',');
  certify->add_option("--bounds", o.bounds_path, "Bounds document ([order, log_F] pairs)");
  certify->add_option("--length", o.length, "Interval length b - a");
  certify->add_option("--m0", o.m0, "Threshold for condition (A)");

  auto* counter = app.add_subcommand("counterexample", "Build or re-verify a counterexample sequence");
  counter->add_option("--family", o.family, "power-n, gevrey, nlogn or double-exp");
  counter->add_option("--s", o.s, "Gevrey index s >= 1");
  counter->add_option("--i0", o.i0, "First excess order");
  counter->add_option("--rounds", o.rounds, "Number of construction rounds");
  counter->add_option("--budget", o.budget, "Index budget per threshold search");
  counter->add_option("--verify", o.verify_path, "Re-verify a previously emitted certificate");

  auto* extremal = app.add_subcommand("extremal", "Evaluate the extremal series and its bounds");
  add_sequence_flags(extremal, o);
  extremal->add_option("--counterexample", o.counterexample_path,
                       "Use N from a counterexample report");
  extremal->add_option("--extend-to", o.extend_to, "Extend N with its last ratio up to this index");
  extremal->add_option("--a", o.a, "Left end of the interval");
  extremal->add_option("--b", o.b, "Right end of the interval");
  extremal->add_option("--k-trunc", o.k_trunc, "Number of series terms retained");
  extremal->add_option("--grid", o.grid, "Grid points for the sup sampling");
  extremal->add_option("--max-order", o.max_order, "Highest derivative order reported");

  auto* gorny = app.add_subcommand("gorny", "Check the Cartan-Gorny bound on corpus functions");
  gorny->add_option("--fn", o.fn_id, "Corpus function id");
  gorny->add_flag("--sweep", o.sweep, "All corpus functions, all m <= --m, all k");
  gorny->add_option("--a", o.a, "Left end of the interval");
  gorny->add_option("--b", o.b, "Right end of the interval");
  gorny->add_option("--m", o.m, "Top derivative order m >= 2");
  gorny->add_option("--k", o.k, "Intermediate order 1 <= k <= m-1");

  std::vector<std::string> argv_storage{"dcclass"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // Parsed defaults for the extremal interval differ from gorny's.
  if (gorny->parsed()) {
    if (gorny->count("--a") == 0) o.a = 0.0;
    if (gorny->count("--b") == 0) o.b = 1.0;
  }

  try {
    Json result;
    if (check->parsed()) result = cmd_check(o);
    else if (certify->parsed()) result = cmd_certify(o);
    else if (counter->parsed()) result = cmd_counterexample(o);
    else if (extremal->parsed()) result = cmd_extremal(o);
    else result = cmd_gorny(o);

    const std::string text = report::dump(result);
    if (o.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output_path);
      if (!file) throw InvalidArgument("cannot write '" + o.output_path + "'");
      file << text;
    }
    return kOk;
  } catch (const Rejected& e) {
    Json d = diagnostic("verification", e.what());
    d["detail"] = e.detail();
    err << report::dump(d);
    return kVerificationFailed;
  } catch (const InvalidArgument& e) {
    err << report::dump(diagnostic("usage", e.what()));
    return kUsage;
  } catch (const RangeError& e) {
    err << report::dump(diagnostic("range", e.what()));
    return kNumericFailure;
  } catch (const BudgetExceeded& e) {
    err << report::dump(diagnostic("budget", e.what()));
    return kNumericFailure;
  } catch (const Error& e) {
    err << report::dump(diagnostic("error", e.what()));
    return kNumericFailure;
  }
}

}  // namespace dcc::cli
