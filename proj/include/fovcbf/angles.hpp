#pragma once

#include <cmath>

namespace fovcbf {

/// Normalize an angle to (-pi, pi].
inline double wrap_angle(double angle) {
  const double two_pi = 2.0 * M_PI;
  double a = std::fmod(angle + M_PI, two_pi);
  if (a <= 0.0) a += two_pi;
  return a - M_PI;
}

/// Difference a - b wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

}  // namespace fovcbf
