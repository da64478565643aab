#pragma once

#include <limits>

namespace dcc {

/// Returned by taylor_vanishing_bound at distance 0: the Taylor remainder is
/// identically zero there.
inline constexpr double kIdenticallyZeroBound = std::numeric_limits<double>::lowest();

/// Radius 1/(c e) inside which the bound (c e |x - x0|)^{d} tends to zero.
double vanishing_radius(double c);

/// ln of (c e dist)^d, the Taylor bound on |f(x)| at distance `dist` from a
/// point of infinite-order vanishing when F_d <= c^d d^d.
double taylor_vanishing_bound(double c, double dist, long d);

/// Covering of [a, b] by half-radius steps.
struct PropagationPlan {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double radius = 0.0;
  long steps = 1;

  /// Base point reached after `step` steps from a (clamped to b).
  double base_point(long step) const;
};

PropagationPlan propagation_plan(double a, double b, double c);

}  // namespace dcc
