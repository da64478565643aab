#include <cmath>
#include <numbers>

#include "doctest.h"

#include "dcc/common.hpp"
#include "dcc/quasianalytic.hpp"

using namespace dcc;

TEST_CASE("vanishing_radius") {
  CHECK(vanishing_radius(1.0) == doctest::Approx(0.36788).epsilon(1e-5));
  CHECK(vanishing_radius(1.0 / std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(vanishing_radius(10.0) == doctest::Approx(0.036788).epsilon(1e-5));
  CHECK_THROWS_AS(vanishing_radius(0.0), InvalidArgument);
  CHECK_THROWS_AS(vanishing_radius(-2.0), InvalidArgument);
}

TEST_CASE("taylor_vanishing_bound") {
  CHECK(taylor_vanishing_bound(1.0, 0.1, 10) == doctest::Approx(10.0 * (1.0 - std::log(10.0))));
  CHECK(taylor_vanishing_bound(1.0, 0.1, 10) == doctest::Approx(-13.0259).epsilon(1e-5));
  for (long d : {1L, 7L, 1000L}) {
    CHECK(std::abs(taylor_vanishing_bound(1.0, 1.0 / std::numbers::e, d)) < 1e-12 * d);
  }
  CHECK(taylor_vanishing_bound(1.0, 0.5, 20) == doctest::Approx(20.0 * std::log(std::numbers::e / 2)));
  CHECK(taylor_vanishing_bound(1.0, 0.5, 20) == doctest::Approx(6.137).epsilon(1e-3));
  CHECK(taylor_vanishing_bound(3.0, 0.0, 5) == kIdenticallyZeroBound);
}

TEST_CASE("property: Taylor bound decays in d exactly inside the radius") {
  for (double c : {0.05, 0.5, 1.0, 4.0, 30.0}) {
    const double r = vanishing_radius(c);
    for (double frac : {0.1, 0.5, 0.9, 0.999, 1.001, 1.5, 3.0}) {
      const double dist = frac * r;
      const bool decreasing =
          taylor_vanishing_bound(c, dist, 101) < taylor_vanishing_bound(c, dist, 100);
      CHECK(decreasing == (dist < r));
    }
  }
}

TEST_CASE("propagation_plan") {
  const PropagationPlan p = propagation_plan(0.0, 1.0, 1.0);
  CHECK(p.radius == doctest::Approx(0.36788).epsilon(1e-5));
  CHECK(p.steps == 6);
  CHECK(p.base_point(p.steps) == 1.0);

  CHECK(propagation_plan(0.0, 0.1, 1.0).steps == 1);
  CHECK(propagation_plan(0.0, 1.0, 1e-6).steps == 1);
  CHECK_THROWS_AS(propagation_plan(1.0, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(propagation_plan(0.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("property: half-radius steps cover the interval") {
  for (double c : {0.01, 0.3, 1.0, 2.7, 50.0}) {
    for (double len : {1e-3, 0.2, 1.0, 7.5, 100.0}) {
      const PropagationPlan p = propagation_plan(-1.0, -1.0 + len, c);
      CHECK(p.steps * p.radius / 2.0 >= len);
      CHECK((p.steps - 1) * p.radius / 2.0 < len);
    }
  }
}
