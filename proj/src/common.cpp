#include "dcc/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dcc {

BudgetExceeded::BudgetExceeded(std::string step, long start, long budget)
    : Error("search budget exceeded in step '" + step + "' (start " + std::to_string(start) +
            ", budget " + std::to_string(budget) + ")"),
      step_(std::move(step)) {}

std::string describe(const ConditionReport& report) {
  std::ostringstream os;
  os << report.condition;
  if (report.holds) {
    os << " holds";
    return os.str();
  }
  os << " violated";
  if (report.first_violation) {
    const auto& idx = *report.first_violation;
    if (idx.size() == 1) {
      os << " at order " << idx.front();
    } else {
      os << " at (";
      for (std::size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t];
      os << ")";
    }
  }
  return os.str();
}

HypothesisFailure::HypothesisFailure(ConditionReport report)
    : Error(describe(report)), report_(std::move(report)) {}

double log_factorial(long n) {
  if (n < 0) throw InvalidArgument("log_factorial: negative argument");
  double acc = 0.0;
  for (long j = 2; j <= n; ++j) acc += std::log(static_cast<double>(j));
  return acc;
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace dcc
