#pragma once

// Membership certification from sparse derivative bounds.
//
// Given bounds F_{d_n} <= M_{d_n} at orders d_n with d_{n+1}/d_n <= c0, every
// intermediate order is bounded by interpolating between consecutive anchors
// with the Cartan-Gorny inequality. The result is an explicit envelope on
// F_ell together with constants C1 and K such that F_ell <= C1^ell M_ell and
// F_ell <= K^{ell+1} M_ell over the covered range.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dcc/common.hpp"
#include "dcc/sequences.hpp"

namespace dcc {

/// Strictly increasing positive derivative orders.
class GapSequence {
 public:
  explicit GapSequence(std::vector<long> orders);

  std::span<const long> orders() const { return d_; }
  std::size_t size() const { return d_.size(); }
  long operator[](std::size_t n) const { return d_[n]; }
  long front() const { return d_.front(); }
  long back() const { return d_.back(); }

 private:
  std::vector<long> d_;
};

/// (order, ln F_order) pairs, one per anchor order.
struct SparseBounds {
  std::vector<std::pair<long, double>> entries;
};

/// max_n d[n+1]/d[n].
double gap_ratio(const GapSequence& d);

/// Log-convexity, (A) above m0, (B), and F <= M at every anchor order.
/// The report's `condition` names the first hypothesis that fails.
ConditionReport check_hypotheses(const LogSequence& M, const GapSequence& d,
                                 const SparseBounds& F, double m0);

/// ln C1 = ln 2 + (c0 - 1) + ln(2 (c0 - 1)/(c length) + M_{c0}^{1/c0}).
double log_c1(long c0, double c, double length, double log_M_c0);

/// Per-order bound between two anchors dn < ell < dn1. Anchor values enter as
/// min(ln F, ln M). `c0` must be >= dn1/dn; when omitted, max(2, dn1/dn).
double intermediate_envelope(const LogSequence& M, long dn, long dn1, long ell, double log_F_dn,
                             double log_F_dn1, double length,
                             std::optional<double> c0 = std::nullopt);

struct EnvelopeEntry {
  long order = 0;
  double log_bound = 0.0;
  /// ell * ln C1 + ln M_ell; absent for caller-supplied orders below d[0].
  std::optional<double> log_simplified;
};

struct Certificate {
  long c0 = 0;
  double c = 0.0;
  double length = 0.0;
  double m0 = 0.0;
  double log_C1 = 0.0;
  double log_K = 0.0;
  std::vector<EnvelopeEntry> envelope;
  /// False when orders below d[0] were not supplied and are not covered.
  bool full_coverage = false;
  /// envelope <= ell ln C1 + ln M_ell at every order >= d[0].
  bool c1_dominates = false;
};

/// Runs the hypothesis checks and builds the envelope on orders
/// [0 or d[0], d.back()]. `small_order_log_bounds`, when non-empty, supplies
/// ln F_0 .. ln F_{d[0]-1}. Throws HypothesisFailure on a failed hypothesis.
Certificate certify_membership(const LogSequence& M, const GapSequence& d, const SparseBounds& F,
                               double length, double m0,
                               std::span<const double> small_order_log_bounds = {});

}  // namespace dcc
