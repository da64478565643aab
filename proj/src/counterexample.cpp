#include "dcc/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcc {

namespace {

const double kLn2 = std::numbers::ln2;

// ln 2^(2^i) = 2^i ln 2.
double log_excess(long i) {
  if (i > kMaxExcessOrder) {
    throw RangeError("excess order " + std::to_string(i) + " beyond the log-domain cap " +
                     std::to_string(kMaxExcessOrder));
  }
  return std::ldexp(kLn2, static_cast<int>(i));
}

// a >= b up to the comparison tolerance, scaled to the operands.
bool at_least(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a >= b - kCompareTolerance * scale;
}

bool close(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kCompareTolerance * scale;
}

}  // namespace

WeightOracle oracle_from_family(const FamilySpec& spec, long index_budget) {
  if (index_budget < 2) throw InvalidArgument("index budget must be >= 2");
  std::string name = std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gevrey>) return "gevrey(s=" + std::to_string(f.s) + ")";
        if constexpr (std::is_same_v<T, NLogN>) return "nlogn";
        return "explicit";
      },
      spec);
  family_log_weight(spec, 0);  // validates parameters up front
  return {[spec](long n) { return family_log_weight(spec, n); }, index_budget, std::move(name)};
}

WeightOracle double_exponential_oracle(long index_budget) {
  return {[](long n) {
            if (n > 1000) throw RangeError("double-exponential oracle answers up to n = 1000");
            return n == 0 ? 0.0 : std::ldexp(kLn2, static_cast<int>(n));
          },
          index_budget, "double-exponential"};
}

long search_threshold_index(const WeightOracle& oracle, long start,
                            const std::function<bool(long)>& predicate, const std::string& step) {
  if (start < 1) throw InvalidArgument("search start must be >= 1");
  if (oracle.index_budget < 1) throw InvalidArgument("index budget must be positive");
  for (long n = start; n - start < oracle.index_budget; ++n) {
    if (predicate(n)) return n;
  }
  throw BudgetExceeded(step, start, oracle.index_budget);
}

CounterexampleCert construct_counterexample(const WeightOracle& M, long i0, int rounds) {
  if (i0 < 1) throw InvalidArgument("i0 must be a positive integer");
  if (rounds < 1) throw InvalidArgument("rounds must be >= 1");

  CounterexampleCert cert;
  auto fill = [&cert](long from, long to, double value) {
    cert.log_m.resize(static_cast<std::size_t>(to), value);
    std::fill(cert.log_m.begin() + from, cert.log_m.end(), value);
  };

  // Round 0: m_0 = .. = m_{i0-1} = (2^(2^i0) M_i0)^{1/i0}, then a constant
  // ratio up to d0 chosen with M_d0^{1/d0} >= that value.
  const double peak0 = log_excess(i0) + M(i0);
  const double first_ratio = peak0 / static_cast<double>(i0);
  const long d0 = search_threshold_index(
      M, i0 + 1,
      [&](long d) { return at_least(M(d) / static_cast<double>(d), first_ratio); },
      "round 0: anchor d0");
  fill(0, i0, first_ratio);
  fill(i0, d0, (M(d0) - peak0) / static_cast<double>(d0 - i0));
  cert.i.push_back(i0);
  cert.d.push_back(d0);

  for (int round = 1; round < rounds; ++round) {
    const long prev = cert.d.back();
    const double anchor = M(prev);
    const double last_ratio = cert.log_m.back();
    const std::string tag = "round " + std::to_string(round);

    const long i = search_threshold_index(
        M, prev + 1,
        [&](long n) {
          return at_least(log_excess(n) + M(n),
                          anchor + static_cast<double>(n - prev) * last_ratio);
        },
        tag + ": excess order");
    const double peak = log_excess(i) + M(i);
    const double rise = static_cast<double>(i - prev);

    const long d = search_threshold_index(
        M, i + 1,
        [&](long n) {
          const double target = (static_cast<double>(n - prev) / rise) * peak -
                                (static_cast<double>(n - i) / rise) * anchor;
          return at_least(M(n), target);
        },
        tag + ": anchor order");

    fill(prev, i, (peak - anchor) / rise);
    fill(i, d, (M(d) - peak) / static_cast<double>(d - i));
    cert.i.push_back(i);
    cert.d.push_back(d);
  }

  cert.log_N.assign(cert.log_m.size() + 1, 0.0);
  for (std::size_t j = 0; j < cert.log_m.size(); ++j) {
    cert.log_N[j + 1] = cert.log_N[j] + cert.log_m[j];
  }
  return cert;
}

ConditionReport verify_counterexample(const CounterexampleCert& cert, const WeightOracle& M) {
  ConditionReport rep{.condition = "shape"};
  auto fail = [&rep](std::string what, std::vector<long> where) {
    rep.condition = std::move(what);
    rep.holds = false;
    rep.first_violation = std::move(where);
    return rep;
  };

  if (cert.d.empty() || cert.d.size() != cert.i.size() ||
      cert.log_m.size() != static_cast<std::size_t>(cert.d.back())) {
    return fail("shape", {});
  }

  rep.condition = "interleaving";
  long last = 0;
  for (std::size_t k = 0; k < cert.d.size(); ++k) {
    if (!(cert.i[k] > last && cert.d[k] > cert.i[k])) {
      return fail("interleaving", {static_cast<long>(k)});
    }
    last = cert.d[k];
  }

  rep.condition = "log-convexity";
  for (std::size_t j = 0; j + 1 < cert.log_m.size(); ++j) {
    const double slack = cert.log_m[j + 1] - cert.log_m[j];
    rep.margin = std::min(rep.margin, slack);
    if (!at_least(cert.log_m[j + 1], cert.log_m[j])) {
      return fail("log-convexity", {static_cast<long>(j)});
    }
  }

  // Recompute N from the ratios rather than trusting cert.log_N.
  std::vector<double> log_N(cert.log_m.size() + 1, 0.0);
  for (std::size_t j = 0; j < cert.log_m.size(); ++j) log_N[j + 1] = log_N[j] + cert.log_m[j];

  for (long d : cert.d) {
    if (!close(log_N[static_cast<std::size_t>(d)], M(d))) return fail("anchor", {d});
  }
  for (long i : cert.i) {
    if (!close(log_N[static_cast<std::size_t>(i)] - M(i), log_excess(i))) {
      return fail("excess", {i});
    }
  }
  rep.condition = "counterexample";
  return rep;
}

}  // namespace dcc
