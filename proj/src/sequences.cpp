#include "dcc/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dcc {

namespace {

double gevrey_log(double s, long n) {
  if (n <= 1) return 0.0;
  const double x = static_cast<double>(n);
  return x * s * std::log(x);
}

double nlogn_log(long n) {
  if (n <= 1) return 0.0;
  const double x = static_cast<double>(n);
  return x * std::log(x * std::log(x));
}

void check_gevrey(const Gevrey& g) {
  if (!(g.s >= 1.0) || !std::isfinite(g.s)) {
    throw InvalidArgument("Gevrey index s must be a finite number >= 1, got " + std::to_string(g.s));
  }
}

}  // namespace

double family_log_weight(const FamilySpec& spec, long n) {
  if (n < 0) throw InvalidArgument("negative sequence index");
  return std::visit(
      [n](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Gevrey>) {
          check_gevrey(fam);
          return gevrey_log(fam.s, n);
        } else if constexpr (std::is_same_v<T, NLogN>) {
          return nlogn_log(n);
        } else {
          if (static_cast<std::size_t>(n) >= fam.logs.size()) {
            throw RangeError("explicit sequence has no entry at index " + std::to_string(n));
          }
          return fam.logs[static_cast<std::size_t>(n)] - fam.logs.front();
        }
      },
      spec);
}

LogSequence::LogSequence(std::vector<double> logs) : logs_(std::move(logs)) {
  if (logs_.size() < 3) throw InvalidArgument("a weight sequence needs n_max >= 2");
  if (logs_.front() != 0.0) throw InvalidArgument("weight sequence must satisfy M_0 = 1");
  for (std::size_t n = 0; n < logs_.size(); ++n) {
    if (!std::isfinite(logs_[n])) {
      throw InvalidArgument("non-finite log weight at index " + std::to_string(n));
    }
  }
}

LogSequence LogSequence::normalized(std::vector<double> logs) {
  if (logs.empty()) throw InvalidArgument("empty weight sequence");
  const double base = logs.front();
  if (!std::isfinite(base)) throw InvalidArgument("non-finite log weight at index 0");
  for (double& v : logs) v -= base;
  return LogSequence(std::move(logs));
}

LogSequence build_sequence(const FamilySpec& spec, int n_max) {
  if (n_max < 2) throw InvalidArgument("n_max must be >= 2");
  if (const auto* ex = std::get_if<Explicit>(&spec)) {
    if (ex->logs.size() < static_cast<std::size_t>(n_max) + 1) {
      throw InvalidArgument("explicit sequence shorter than n_max + 1 entries");
    }
    std::vector<double> logs(ex->logs.begin(), ex->logs.begin() + n_max + 1);
    return LogSequence::normalized(std::move(logs));
  }
  if (const auto* g = std::get_if<Gevrey>(&spec)) check_gevrey(*g);

  std::vector<double> logs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) logs[static_cast<std::size_t>(n)] = family_log_weight(spec, n);
  LogSequence seq(std::move(logs));
  seq.family_ = spec;
  return seq;
}

LogSequence rescale(const LogSequence& seq, double log_factor) {
  std::vector<double> logs(seq.logs().begin(), seq.logs().end());
  for (std::size_t n = 0; n < logs.size(); ++n) logs[n] += static_cast<double>(n) * log_factor;
  return LogSequence(std::move(logs));
}

std::vector<double> ratios(const LogSequence& seq) {
  std::vector<double> out(static_cast<std::size_t>(seq.n_max()));
  for (int n = 0; n < seq.n_max(); ++n) out[static_cast<std::size_t>(n)] = seq[n + 1] - seq[n];
  return out;
}

ConditionReport check_log_convex(const LogSequence& seq) {
  ConditionReport rep{.condition = "log-convexity"};
  for (int n = 1; n < seq.n_max(); ++n) {
    const double slack = seq[n - 1] + seq[n + 1] - 2.0 * seq[n];
    rep.margin = std::min(rep.margin, slack);
    if (slack < -kCompareTolerance && rep.holds) {
      rep.holds = false;
      rep.first_violation = std::vector<long>{n};
    }
  }
  return rep;
}

ConditionReport check_condition_A(const LogSequence& seq, double m0) {
  if (!(m0 >= 0.0) || !(m0 < seq.n_max())) {
    throw InvalidArgument("condition (A) threshold m0 must satisfy 0 <= m0 < n_max");
  }
  ConditionReport rep{.condition = "(A)"};
  const int n_max = seq.n_max();
  const int lo = static_cast<int>(std::floor(m0)) + 1;  // first index strictly above m0
  for (int i = lo; i <= n_max; ++i) {
    const double per_i = seq[i] / i;
    for (int j = i + 1; j <= n_max; ++j) {
      const int k_first = std::max(lo, j / i + 1);
      for (int k = k_first; k <= n_max; ++k) {
        const double rhs = j * (seq[k] / k + per_i);
        const double slack = rhs - seq[j];
        if (slack < rep.margin) rep.margin = slack;
        if (slack < -kCompareTolerance) {
          rep.holds = false;
          rep.first_violation = std::vector<long>{i, j, k};
          return rep;
        }
      }
    }
  }
  return rep;
}

double fit_analytic_constant(const LogSequence& seq) {
  double best = kPosInf;
  for (int n = 1; n <= seq.n_max(); ++n) {
    best = std::min(best, seq[n] / n - std::log(static_cast<double>(n)));
  }
  return std::exp(best);
}

QuasianalyticDiagnostic quasianalytic_diagnostic(const LogSequence& seq) {
  QuasianalyticDiagnostic out;
  for (int n = 1; n <= seq.n_max(); ++n) out.partial_sum += std::exp(seq[n - 1] - seq[n]);
  if (const auto& fam = seq.family()) {
    if (const auto* g = std::get_if<Gevrey>(&*fam)) {
      // sum 1/(e n)^s-ish terms: diverges exactly when s = 1.
      out.quasianalytic = g->s <= 1.0;
    } else if (std::holds_alternative<NLogN>(*fam)) {
      out.quasianalytic = true;
    }
  }
  return out;
}

}  // namespace dcc
