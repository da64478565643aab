#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "dcc/sequences.hpp"

using namespace dcc;

namespace {

std::vector<double> gevrey_logs(double s, int n_max) {
  std::vector<double> v(n_max + 1, 0.0);
  for (int n = 2; n <= n_max; ++n) v[n] = s * n * std::log(static_cast<double>(n));
  return v;
}

}  // namespace

TEST_CASE("build_sequence: closed-form families") {
  const LogSequence g = build_sequence(Gevrey{1.0}, 3);
  CHECK(g.n_max() == 3);
  CHECK(g[0] == 0.0);
  CHECK(g[3] == doctest::Approx(std::log(27.0)).epsilon(1e-14));
  CHECK(g[3] == doctest::Approx(3.29584).epsilon(1e-5));

  const LogSequence nl = build_sequence(NLogN{}, 2);
  CHECK(nl[0] == 0.0);
  CHECK(nl[1] == 0.0);
  CHECK(nl[2] == doctest::Approx(0.65327).epsilon(1e-4));
  CHECK(nl[2] == doctest::Approx(2.0 * std::log(2.0 * std::log(2.0))).epsilon(1e-14));

  for (int n_max : {2, 17, 200}) CHECK(build_sequence(Gevrey{1.0}, n_max)[0] == 0.0);
  CHECK(build_sequence(Gevrey{2.5}, 5).family().has_value());
}

TEST_CASE("build_sequence: rejects bad input") {
  CHECK_THROWS_AS(build_sequence(Gevrey{0.5}, 10), InvalidArgument);
  CHECK_THROWS_AS(build_sequence(Gevrey{1.0}, 1), InvalidArgument);
  CHECK_THROWS_AS(build_sequence(Explicit{{0.0, 1.0, NAN}}, 2), InvalidArgument);
  CHECK_THROWS_AS(build_sequence(Explicit{{0.0, 1.0, INFINITY}}, 2), InvalidArgument);
  CHECK_THROWS_AS(build_sequence(Explicit{{0.0, 1.0}}, 2), InvalidArgument);
}

TEST_CASE("build_sequence: explicit input is normalized to M_0 = 1") {
  const LogSequence e = build_sequence(Explicit{{2.0, 3.0, 5.0, 9.0}}, 3);
  CHECK(e[0] == 0.0);
  CHECK(e[1] == 1.0);
  CHECK(e[3] == 7.0);
  CHECK_FALSE(e.family().has_value());
  // Truncates to the requested prefix.
  CHECK(build_sequence(Explicit{{0.0, 1.0, 2.0, 3.0, 4.0}}, 2).n_max() == 2);
}

TEST_CASE("ratios") {
  const auto r = ratios(build_sequence(Gevrey{1.0}, 6));
  CHECK(r.size() == 6);
  CHECK(r[1] == doctest::Approx(std::log(4.0)));
  CHECK(r[1] == doctest::Approx(1.38629).epsilon(1e-5));

  const auto flat = ratios(LogSequence({0.0, 0.0, 0.0, 0.0}));
  for (double v : flat) CHECK(v == 0.0);

  const auto nl = ratios(build_sequence(NLogN{}, 5));
  CHECK(nl[1] == doctest::Approx(0.65327).epsilon(1e-4));

  // Products of the ratios recover M_{n_max}.
  const LogSequence seq = build_sequence(Gevrey{1.7}, 40);
  double acc = 0.0;
  for (double v : ratios(seq)) acc += v;
  CHECK(acc == doctest::Approx(seq[40]).epsilon(1e-12));
}

TEST_CASE("check_log_convex") {
  const LogSequence g = build_sequence(Gevrey{1.0}, 10);
  // 2 ln 4 <= ln 1 + ln 27 at n = 2.
  CHECK(2.0 * std::log(4.0) <= std::log(27.0));
  CHECK(check_log_convex(g).holds);

  const auto flat = check_log_convex(LogSequence({0.0, 0.0, 0.0, 0.0}));
  CHECK(flat.holds);
  CHECK(flat.margin == 0.0);
  CHECK_FALSE(flat.first_violation.has_value());

  const auto bad = check_log_convex(build_sequence(Explicit{{0.0, 2.0, 2.0, 2.0}}, 3));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_violation.has_value());
  CHECK(*bad.first_violation == std::vector<long>{1});
  CHECK(bad.margin == doctest::Approx(-2.0));
}

TEST_CASE("check_condition_A") {
  // Direct evaluation of the (2,3,4) triple for M_n = n^n.
  const double lhs = 27.0;
  const double rhs = std::pow(256.0, 3.0 / 4.0) * std::pow(4.0, 3.0 / 2.0);
  CHECK(rhs == doctest::Approx(512.0));
  CHECK(lhs <= rhs);

  CHECK(check_condition_A(build_sequence(Gevrey{1.0}, 50), 1.0).holds);
  CHECK(check_condition_A(build_sequence(NLogN{}, 50), std::exp(2.0)).holds);

  // NLogN needs the threshold: with i = 3 allowed a triple fails.
  const auto low = check_condition_A(build_sequence(NLogN{}, 50), 2.0);
  CHECK_FALSE(low.holds);
  REQUIRE(low.first_violation.has_value());
  CHECK(low.first_violation->size() == 3);

  CHECK_THROWS_AS(check_condition_A(build_sequence(Gevrey{1.0}, 5), 5.0), InvalidArgument);
  CHECK_THROWS_AS(check_condition_A(build_sequence(Gevrey{1.0}, 5), -1.0), InvalidArgument);
}

TEST_CASE("fit_analytic_constant") {
  CHECK(fit_analytic_constant(build_sequence(Gevrey{1.0}, 30)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit_analytic_constant(build_sequence(Gevrey{2.0}, 10)) == doctest::Approx(1.0).epsilon(1e-12));

  // Brute-force minimum of M_n^{1/n}/n over the prefix.
  const LogSequence nl = build_sequence(NLogN{}, 50);
  double best = 1e300;
  for (int n = 1; n <= 50; ++n) best = std::min(best, std::exp(nl[n] / n) / n);
  CHECK(fit_analytic_constant(nl) == doctest::Approx(best).epsilon(1e-12));
  CHECK(fit_analytic_constant(nl) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("quasianalytic_diagnostic") {
  CHECK(quasianalytic_diagnostic(build_sequence(Gevrey{1.0}, 50)).quasianalytic == true);
  CHECK(quasianalytic_diagnostic(build_sequence(NLogN{}, 50)).quasianalytic == true);

  const auto g2 = quasianalytic_diagnostic(build_sequence(Gevrey{2.0}, 100));
  CHECK(g2.quasianalytic == false);
  double sum = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double prev = n == 1 ? 0.0 : 2.0 * (n - 1) * std::log(n - 1.0);
    sum += std::exp(prev - 2.0 * n * std::log(static_cast<double>(n)));
  }
  CHECK(g2.partial_sum == doctest::Approx(sum).epsilon(1e-12));

  CHECK_FALSE(quasianalytic_diagnostic(build_sequence(Explicit{gevrey_logs(1.0, 20)}, 20))
                  .quasianalytic.has_value());
}

// Property checks with a fixed-seed generator.

TEST_CASE("property: Gevrey sequences are log-convex") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> s_dist(1.0, 6.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double s = trial == 0 ? 1.0 : s_dist(rng);
    for (int n_max : {2, 3, 50, 500}) {
      CHECK(check_log_convex(build_sequence(Gevrey{s}, n_max)).holds);
    }
  }
  for (int n_max : {2, 9, 500}) CHECK(check_log_convex(build_sequence(NLogN{}, n_max)).holds);
}

TEST_CASE("property: condition (A) is monotone in m0") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> noise(-0.4, 0.4);
  for (int trial = 0; trial < 30; ++trial) {
    auto logs = gevrey_logs(1.0, 30);
    for (std::size_t n = 1; n < logs.size(); ++n) logs[n] += noise(rng);
    const LogSequence seq = build_sequence(Explicit{logs}, 30);
    bool seen = false;
    for (double m0 = 0.0; m0 < 30.0; m0 += 0.5) {
      const bool holds = check_condition_A(seq, m0).holds;
      if (seen) CHECK(holds);
      seen = seen || holds;
    }
  }
}

TEST_CASE("property: ratios of log-convex sequences are non-decreasing") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> step(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    // Build from non-decreasing increments, then read them back.
    std::vector<double> logs{0.0};
    double slope = step(rng) - 1.0;
    for (int n = 0; n < 40; ++n) {
      slope += step(rng);
      logs.push_back(logs.back() + slope);
    }
    const LogSequence seq(logs);
    REQUIRE(check_log_convex(seq).holds);
    const auto r = ratios(seq);
    for (std::size_t n = 0; n + 1 < r.size(); ++n) CHECK(r[n] <= r[n + 1] + kCompareTolerance);
  }
}

TEST_CASE("property: rescaling by K^n") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logk(-3.0, 3.0);
  for (const FamilySpec& fam : {FamilySpec{Gevrey{1.0}}, FamilySpec{Gevrey{2.3}}, FamilySpec{NLogN{}}}) {
    const LogSequence seq = build_sequence(fam, 60);
    for (int trial = 0; trial < 10; ++trial) {
      const double lk = logk(rng);
      const LogSequence scaled = rescale(seq, lk);
      CHECK(scaled[7] == doctest::Approx(seq[7] + 7.0 * lk));
      CHECK(check_log_convex(scaled).holds == check_log_convex(seq).holds);
      CHECK(fit_analytic_constant(scaled) ==
            doctest::Approx(fit_analytic_constant(seq) * std::exp(lk)).epsilon(1e-12));
    }
  }
  const auto bad = build_sequence(Explicit{{0.0, 2.0, 2.0, 2.0}}, 3);
  CHECK_FALSE(check_log_convex(rescale(bad, 1.5)).holds);
}
