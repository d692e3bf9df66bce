#pragma once

#include <span>
#include <utility>

namespace ptmathieu {

/// q(delta) = a_coef * delta^(-alpha), fitted in log-log space.
struct FitResult {
  double a_coef = 0.0;
  double alpha = 0.0;
  double residual_rms = 0.0; ///< RMS of ln q residuals
  std::pair<double, double> delta_range{0.0, 0.0};
  int n_points = 0;
};

struct FitPoint {
  double delta = 0.0;
  double q_crit = 0.0;
};

/// Ordinary least squares of ln q on ln delta over the points whose delta
/// lies in [range.first, range.second]. Throws std::invalid_argument for
/// fewer than 3 points in range or nonpositive values among them.
FitResult power_law_fit(std::span<const FitPoint> points, std::pair<double, double> range);

} // namespace ptmathieu
