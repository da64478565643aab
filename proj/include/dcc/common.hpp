#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcc {

/// Absolute slack allowed in every log-domain inequality check.
inline constexpr double kCompareTolerance = 1e-9;

/// Largest excess order i for which 2^i * ln 2 is still a comfortable double.
inline constexpr long kMaxExcessOrder = 900;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Error hierarchy. The CLI maps each class onto an exit code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or argument violation (usage error).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A log-domain quantity left the representable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A threshold search ran out of indices.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string step, long start, long budget);

  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// Outcome of an inequality check over a finite index set.
///
/// `margin` is the smallest observed slack in the log domain (negative once
/// something fails). `first_violation` holds the offending index tuple.
struct ConditionReport {
  std::string condition;
  bool holds = true;
  std::optional<std::vector<long>> first_violation;
  double margin = kPosInf;
};

/// Human readable one-liner, e.g. "(C) violated at order 4".
std::string describe(const ConditionReport& report);

/// Raised when a pipeline's hypotheses are not met.
class HypothesisFailure : public Error {
 public:
  explicit HypothesisFailure(ConditionReport report);

  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

/// ln(n!) by direct summation of ln j.
double log_factorial(long n);

/// ln(exp(a) + exp(b)) without overflow.
double log_add(double a, double b);

}  // namespace dcc
