#pragma once

// The extremal function of a log-convex sequence N:
//
//   g(x) = sum_k N_k / (2 m_k)^k (cos(2 m_k x) + sin(2 m_k x)),  m_k = N_{k+1}/N_k,
//
// shifted to the midpoint of [a, b]. Its derivatives satisfy
// |g^{(n)}| <= 2^{n+2} N_n everywhere and |g^{(n)}(center)| >= N_n.
//
// Only a prefix of N is stored; k >= K_trunc is never summed, and every
// evaluation carries a bound on the discarded tail.

#include <span>
#include <vector>

#include "dcc/sequences.hpp"

namespace dcc {

class ExtremalSeries {
 public:
  /// `log_N` need not be normalized (N_0 may differ from 1) but must be
  /// log-convex with at least three entries.
  ExtremalSeries(std::vector<double> log_N, double a, double b, int k_trunc);

  int n_max() const { return static_cast<int>(log_N_.size()) - 1; }
  int k_trunc() const { return k_trunc_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double center() const { return 0.5 * (a_ + b_); }
  std::span<const double> log_N() const { return log_N_; }
  std::span<const double> log_m() const { return log_m_; }

  /// ln of the k-th coefficient magnitude after n differentiations:
  /// ln N_k + (n - k)(ln 2 + ln m_k).
  double log_term(int k, int n) const;

 private:
  std::vector<double> log_N_;
  std::vector<double> log_m_;
  double a_;
  double b_;
  int k_trunc_;
};

/// Continues ln N past its last entry with the last ratio held constant, up
/// to index n_max. Keeps log-convexity.
std::vector<double> extend_constant_ratio(std::span<const double> log_N, int n_max);

/// k_trunc <= 0 selects the default, N.n_max().
ExtremalSeries build_extremal(const LogSequence& N, double a, double b, int k_trunc = 0);

struct EvalResult {
  double value = 0.0;
  double log_tail_bound = 0.0;  ///< ln of a bound on |exact - value|
  int terms_used = 0;
};

/// g^{(n)}(x) via the phase-shift form of each trigonometric term.
EvalResult eval_derivative(const ExtremalSeries& s, int n, double x);

struct UpperBoundCheck {
  double sup_sampled = 0.0;
  double bound = 0.0;
  double log_sup_sampled = 0.0;
  double log_bound = 0.0;
  bool holds = false;
};

/// max over a uniform grid on [a, b] of |g^{(n)}| plus tail, against 2^{n+2} N_n.
UpperBoundCheck check_upper_bound(const ExtremalSeries& s, int n, int grid_size);

struct MidpointCheck {
  double value = 0.0;
  double lower = 0.0;
  double log_value = 0.0;
  double log_lower = 0.0;
  bool holds = false;
};

/// |g^{(n)}(center)| = sum_k N_k (2 m_k)^{n-k} (truncated) against N_n.
MidpointCheck check_midpoint_lower(const ExtremalSeries& s, int n);

/// Central finite difference of order n (1..4, fourth-order accurate
/// stencils) applied to g itself.
double finite_difference_oracle(const ExtremalSeries& s, int n, double x, double h);

}  // namespace dcc
