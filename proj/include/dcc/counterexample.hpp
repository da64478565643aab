#pragma once

// Inductive construction of a log-convex N that agrees with M at anchor
// orders d_n and exceeds it by a factor 2^(2^{i_n}) at excess orders i_n.
// Combined with the extremal series this yields a function with F_{d_n}
// controlled by M_{d_n} that is not in C^M.

#include <functional>
#include <string>
#include <vector>

#include "dcc/common.hpp"
#include "dcc/sequences.hpp"

namespace dcc {

/// ln M_n at any index the construction asks for.
struct WeightOracle {
  std::function<double(long)> log_weight;
  long index_budget = 1'000'000;
  std::string name;

  double operator()(long n) const { return log_weight(n); }
};

WeightOracle oracle_from_family(const FamilySpec& spec, long index_budget = 1'000'000);

/// M_n = 2^(2^n). Grows fast enough that several rounds stay at small
/// indices; answers up to n = 1000.
WeightOracle double_exponential_oracle(long index_budget = 1'000'000);

/// Smallest n in [start, start + budget) with predicate(n); throws
/// BudgetExceeded naming `step` otherwise.
long search_threshold_index(const WeightOracle& oracle, long start,
                            const std::function<bool(long)>& predicate,
                            const std::string& step = "search");

struct CounterexampleCert {
  std::vector<double> log_N;  ///< ln N_0 .. ln N_{d.back()}
  std::vector<long> d;        ///< anchor orders
  std::vector<long> i;        ///< excess orders
  std::vector<double> log_m;  ///< ln m_j, j = 0 .. d.back()-1

  LogSequence N() const { return LogSequence(log_N); }
};

/// Runs `rounds` rounds (round 0 fixes i0 and d0). Every "large enough"
/// choice is the smallest index satisfying the displayed sufficient
/// inequality.
CounterexampleCert construct_counterexample(const WeightOracle& M, long i0, int rounds);

/// Re-derives N from log_m and checks interleaving, monotone ratios,
/// anchors and excesses independently of the construction.
ConditionReport verify_counterexample(const CounterexampleCert& cert, const WeightOracle& M);

}  // namespace dcc
