#include "ptmathieu/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptmathieu {

FitResult power_law_fit(std::span<const FitPoint> points, std::pair<double, double> range) {
  if (!(range.first <= range.second)) {
    throw std::invalid_argument("power_law_fit: empty delta range");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const FitPoint& p : points) {
    if (p.delta < range.first || p.delta > range.second) {
      continue;
    }
    if (!(p.delta > 0.0) || !(p.q_crit > 0.0)) {
      throw std::invalid_argument("power_law_fit: nonpositive value in range at delta=" +
                                  std::to_string(p.delta));
    }
    xs.push_back(std::log(p.delta));
    ys.push_back(std::log(p.q_crit));
  }
  const auto n = xs.size();
  if (n < 3) {
    throw std::invalid_argument("power_law_fit: need at least 3 points in range, got " +
                                std::to_string(n));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("power_law_fit: all points share one delta");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }

  FitResult out;
  out.alpha = -slope;
  out.a_coef = std::exp(intercept);
  out.residual_rms = std::sqrt(ss / static_cast<double>(n));
  out.delta_range = range;
  out.n_points = static_cast<int>(n);
  return out;
}

} // namespace ptmathieu
