#pragma once

// Weight sequences M_n held as natural logarithms, plus the structural
// checks (log-convexity, the interpolation condition (A), analytic
// inclusion (B)) that the certification pipeline relies on.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dcc/common.hpp"

namespace dcc {

/// Gevrey class G^s: M_n = n^{n s}.
struct Gevrey {
  double s = 1.0;
};

/// M_0 = M_1 = 1, M_n = (n ln n)^n for n >= 2.
struct NLogN {};

/// Caller-supplied ln M_n values.
struct Explicit {
  std::vector<double> logs;
};

using FamilySpec = std::variant<Gevrey, NLogN, Explicit>;

/// ln M_n of a family at an arbitrary index. Explicit families answer only
/// inside their stored range.
double family_log_weight(const FamilySpec& spec, long n);

/// Finite prefix M_0..M_{n_max} in the log domain, with M_0 = 1.
class LogSequence {
 public:
  /// Requires logs[0] == 0, every entry finite and at least three entries.
  explicit LogSequence(std::vector<double> logs);

  /// Divides every M_n by M_0 before validating.
  static LogSequence normalized(std::vector<double> logs);

  int n_max() const { return static_cast<int>(logs_.size()) - 1; }
  double operator[](int n) const { return logs_[static_cast<std::size_t>(n)]; }
  std::span<const double> logs() const { return logs_; }

  /// Set only when the sequence was produced from Gevrey or NLogN.
  const std::optional<FamilySpec>& family() const { return family_; }

 private:
  friend LogSequence build_sequence(const FamilySpec&, int);

  std::vector<double> logs_;
  std::optional<FamilySpec> family_;
};

LogSequence build_sequence(const FamilySpec& spec, int n_max);

/// M_n -> K^n M_n, i.e. logs[n] + n * log_factor. Same class C^M.
LogSequence rescale(const LogSequence& seq, double log_factor);

/// ln m_n = logs[n+1] - logs[n], n = 0..n_max-1.
std::vector<double> ratios(const LogSequence& seq);

/// M_n^2 <= M_{n-1} M_{n+1} for 1 <= n <= n_max-1.
ConditionReport check_log_convex(const LogSequence& seq);

/// Condition (A): M_j <= M_k^{j/k} M_i^{j/i} for i,k > m0, i < j, j/i < k.
/// Exhaustive O(n_max^3) scan; stops at the first violation.
ConditionReport check_condition_A(const LogSequence& seq, double m0);

/// Largest c with M_n >= c^n n^n on the stored prefix (condition (B)).
double fit_analytic_constant(const LogSequence& seq);

struct QuasianalyticDiagnostic {
  /// sum_{n=1}^{n_max} M_{n-1}/M_n
  double partial_sum = 0.0;
  /// Closed-form verdict for built-in families only.
  std::optional<bool> quasianalytic;
};

QuasianalyticDiagnostic quasianalytic_diagnostic(const LogSequence& seq);

}  // namespace dcc
