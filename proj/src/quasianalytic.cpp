#include "dcc/quasianalytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dcc/common.hpp"

namespace dcc {

double vanishing_radius(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("vanishing_radius: c must be > 0");
  return 1.0 / (c * std::numbers::e);
}

double taylor_vanishing_bound(double c, double dist, long d) {
  if (!(c > 0.0)) throw InvalidArgument("taylor_vanishing_bound: c must be > 0");
  if (!(dist >= 0.0)) throw InvalidArgument("taylor_vanishing_bound: dist must be >= 0");
  if (d < 1) throw InvalidArgument("taylor_vanishing_bound: d must be positive");
  if (dist == 0.0) return kIdenticallyZeroBound;
  return static_cast<double>(d) * (std::log(c) + 1.0 + std::log(dist));
}

double PropagationPlan::base_point(long step) const {
  return std::min(b, a + static_cast<double>(step) * radius / 2.0);
}

PropagationPlan propagation_plan(double a, double b, double c) {
  if (!(b > a)) throw InvalidArgument("propagation_plan: need b > a");
  PropagationPlan plan{.a = a, .b = b, .c = c, .radius = vanishing_radius(c)};
  const double half = plan.radius / 2.0;
  plan.steps = std::max(1L, static_cast<long>(std::ceil((b - a) / half)));
  // Guard against ceil landing one short through rounding.
  while (static_cast<double>(plan.steps) * half < b - a) ++plan.steps;
  return plan;
}

}  // namespace dcc
