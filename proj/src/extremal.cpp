#include "dcc/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace dcc {

namespace {

const double kLn2 = std::numbers::ln2;

// Terms this far below the largest one are dropped and charged to the tail.
constexpr double kUnderflowGap = 745.0;

struct ScaledSum {
  double sum = 0.0;        // value / exp(log_scale)
  double log_scale = 0.0;
  double log_tail = kNegInf;
  int terms_used = 0;
};

// n-th derivative of cos(w x) + sin(w x) divided by w^n.
double trig_phase(int n, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (n % 4) {
    case 0: return c + s;
    case 1: return c - s;
    case 2: return -c - s;
    default: return s - c;
  }
}

void check_order(const ExtremalSeries& s, int n) {
  if (n < 0 || n > s.n_max()) {
    throw InvalidArgument("derivative order " + std::to_string(n) + " outside the stored prefix 0.." +
                          std::to_string(s.n_max()));
  }
}

double truncation_tail(const ExtremalSeries& s, int n) {
  // sum_{k >= K} 2 N_n 2^{n-k} = N_n 2^{n-K+2}
  return s.log_N()[static_cast<std::size_t>(n)] + (n - s.k_trunc() + 2) * kLn2;
}

ScaledSum scaled_eval(const ExtremalSeries& s, int n, double x) {
  check_order(s, n);
  if (!std::isfinite(x)) throw InvalidArgument("evaluation point must be finite");
  const int K = s.k_trunc();
  ScaledSum out;
  out.log_tail = truncation_tail(s, n);
  out.log_scale = kNegInf;
  for (int k = 0; k < K; ++k) out.log_scale = std::max(out.log_scale, s.log_term(k, n));

  const double shifted = x - s.center();
  for (int k = 0; k < K; ++k) {
    const double lt = s.log_term(k, n);
    if (lt < out.log_scale - kUnderflowGap) {
      out.log_tail = log_add(out.log_tail, lt + kLn2);
      continue;
    }
    const double freq = 2.0 * std::exp(s.log_m()[static_cast<std::size_t>(k)]);
    out.sum += std::exp(lt - out.log_scale) * trig_phase(n, freq * shifted);
    ++out.terms_used;
  }
  return out;
}

}  // namespace

ExtremalSeries::ExtremalSeries(std::vector<double> log_N, double a, double b, int k_trunc)
    : log_N_(std::move(log_N)), a_(a), b_(b), k_trunc_(k_trunc) {
  if (log_N_.size() < 3) throw InvalidArgument("extremal series needs at least three terms");
  if (!(b_ > a_) || !std::isfinite(a_) || !std::isfinite(b_)) {
    throw InvalidArgument("extremal series needs a finite interval a < b");
  }
  for (double v : log_N_) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite entry in N");
  }
  log_m_.resize(log_N_.size() - 1);
  for (std::size_t k = 0; k + 1 < log_N_.size(); ++k) log_m_[k] = log_N_[k + 1] - log_N_[k];
  for (std::size_t k = 0; k + 1 < log_m_.size(); ++k) {
    const double scale = std::max({1.0, std::abs(log_m_[k]), std::abs(log_m_[k + 1])});
    if (log_m_[k + 1] < log_m_[k] - kCompareTolerance * scale) {
      throw InvalidArgument("N is not log-convex: ratio decreases at index " + std::to_string(k + 1));
    }
  }
  if (k_trunc_ < 2 || k_trunc_ > n_max()) {
    throw InvalidArgument("K_trunc must lie in [2, n_max]");
  }
}

double ExtremalSeries::log_term(int k, int n) const {
  const auto kk = static_cast<std::size_t>(k);
  return log_N_[kk] + static_cast<double>(n - k) * (kLn2 + log_m_[kk]);
}

std::vector<double> extend_constant_ratio(std::span<const double> log_N, int n_max) {
  if (log_N.size() < 2) throw InvalidArgument("need at least two entries to extend");
  std::vector<double> out(log_N.begin(), log_N.end());
  const double last = out.back() - out[out.size() - 2];
  while (static_cast<int>(out.size()) <= n_max) out.push_back(out.back() + last);
  return out;
}

ExtremalSeries build_extremal(const LogSequence& N, double a, double b, int k_trunc) {
  std::vector<double> logs(N.logs().begin(), N.logs().end());
  return ExtremalSeries(std::move(logs), a, b, k_trunc > 0 ? k_trunc : N.n_max());
}

EvalResult eval_derivative(const ExtremalSeries& s, int n, double x) {
  const ScaledSum r = scaled_eval(s, n, x);
  return {.value = r.sum * std::exp(r.log_scale), .log_tail_bound = r.log_tail,
          .terms_used = r.terms_used};
}

UpperBoundCheck check_upper_bound(const ExtremalSeries& s, int n, int grid_size) {
  check_order(s, n);
  if (grid_size < 2) throw InvalidArgument("grid_size must be >= 2");
  UpperBoundCheck out;
  out.log_bound = (n + 2) * kLn2 + s.log_N()[static_cast<std::size_t>(n)];

  // Work relative to the bound so large orders stay finite.
  double ratio = 0.0;
  const double h = (s.b() - s.a()) / (grid_size - 1);
  for (int t = 0; t < grid_size; ++t) {
    const ScaledSum r = scaled_eval(s, n, s.a() + t * h);
    const double v = std::abs(r.sum) * std::exp(r.log_scale - out.log_bound) +
                     std::exp(r.log_tail - out.log_bound);
    ratio = std::max(ratio, v);
  }
  out.log_sup_sampled = std::log(ratio) + out.log_bound;
  out.sup_sampled = std::exp(out.log_sup_sampled);
  out.bound = std::exp(out.log_bound);
  const double scale = std::max(1.0, std::abs(out.log_bound));
  out.holds = out.log_sup_sampled <= out.log_bound + kCompareTolerance * scale;
  return out;
}

MidpointCheck check_midpoint_lower(const ExtremalSeries& s, int n) {
  check_order(s, n);
  MidpointCheck out;
  out.log_value = kNegInf;
  for (int k = 0; k < s.k_trunc(); ++k) out.log_value = log_add(out.log_value, s.log_term(k, n));
  out.log_lower = s.log_N()[static_cast<std::size_t>(n)];
  out.value = std::exp(out.log_value);
  out.lower = std::exp(out.log_lower);
  const double scale = std::max(1.0, std::abs(out.log_lower));
  out.holds = out.log_value >= out.log_lower - kCompareTolerance * scale;
  return out;
}

double finite_difference_oracle(const ExtremalSeries& s, int n, double x, double h) {
  if (n < 1 || n > 4) throw InvalidArgument("finite_difference_oracle supports orders 1..4");
  if (!(h > 0.0)) throw InvalidArgument("finite_difference_oracle: step h must be > 0");
  auto f = [&](int offset) { return eval_derivative(s, 0, x + offset * h).value; };
  switch (n) {
    case 1:
      return (-f(2) + 8.0 * f(1) - 8.0 * f(-1) + f(-2)) / (12.0 * h);
    case 2:
      return (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * h * h);
    case 3:
      return (-f(3) + 8.0 * f(2) - 13.0 * f(1) + 13.0 * f(-1) - 8.0 * f(-2) + f(-3)) /
             (8.0 * h * h * h);
    default:
      return (-f(3) + 12.0 * f(2) - 39.0 * f(1) + 56.0 * f(0) - 39.0 * f(-1) + 12.0 * f(-2) -
              f(-3)) /
             (6.0 * h * h * h * h);
  }
}

}  // namespace dcc
