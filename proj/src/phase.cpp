#include "ptmathieu/phase.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ptmathieu/parallel.hpp"

namespace ptmathieu {

namespace {

double magnitude(const CriticalValue& v) {
  return v ? std::abs(*v) : std::numeric_limits<double>::infinity();
}

void check_options(const PhaseOptions& opts) {
  if (!(opts.q_max > 0.0) || !(opts.tol_q > 0.0) || !(opts.scan_step > 0.0)) {
    throw std::invalid_argument("phase: q_max, tol_q and scan_step must be positive");
  }
  if (opts.k < 2) {
    throw std::invalid_argument("phase: k must be >= 2");
  }
  if (!(opts.tol_im > 0.0) || !(opts.jump_threshold > 0.0)) {
    throw std::invalid_argument("phase: tol_im and jump_threshold must be positive");
  }
}

bool unbroken(const ModelParams& p, int n, const PhaseOptions& opts) {
  return spectrum_at(p, n, opts.tol_im).lowest_all_real(opts.k);
}

// Scan start + step, start + 2 step, ... toward `limit`; `holds(start)` is
// assumed true.
CriticalValue first_failure_from(const std::function<bool(double)>& holds, double start,
                                 double step, double limit, double tol) {
  if (!(step > 0.0) || limit == 0.0 || !(tol > 0.0)) {
    throw std::invalid_argument("first_failure: step, tol must be positive and limit nonzero");
  }
  const double dir = limit > 0 ? 1.0 : -1.0;
  const double reach = std::abs(limit - start);
  const auto count = static_cast<long>(std::ceil(reach / step - 1e-9));
  double last_ok = start;
  for (long i = 1; i <= count; ++i) {
    const double x = start + dir * std::min(static_cast<double>(i) * step, reach);
    if (holds(x)) {
      last_ok = x;
      continue;
    }
    double lo = last_ok;
    double hi = x;
    while (std::abs(hi - lo) > tol) {
      const double mid = 0.5 * (lo + hi);
      (holds(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

// Runs the ray search at increasing truncation until the decision points
// (bracket ends, or the far end when Unbounded) agree at double truncation.
// Only the decision points are re-checked: a failure that disappears at
// double truncation is resumed from the bracket, one that moves toward the
// origin is resumed from the nearest point below it that holds, and an
// Unbounded result that fails at the limit restarts the scan from 0.
CriticalValue search_with_escalation(const std::function<ModelParams(double)>& at, double step,
                                     double limit, const PhaseOptions& opts) {
  const double dir = limit > 0 ? 1.0 : -1.0;
  double start = 0.0;
  for (int n = opts.truncation;; n *= 2) {
    auto holds = [&](double x) { return unbroken(at(x), n, opts); };
    const CriticalValue found = first_failure_from(holds, start, step, limit, opts.tol_q);
    if (2 * n > kMaxTruncation) {
      return found;
    }
    auto holds_fine = [&](double x) { return unbroken(at(x), 2 * n, opts); };
    if (!found) {
      if (holds_fine(limit)) {
        return found;
      }
      start = 0.0;
      continue;
    }
    const double inside = *found - dir * 0.5 * opts.tol_q;
    const double outside = *found + dir * 0.5 * opts.tol_q;
    if (!holds_fine(inside)) {
      // Walk back toward the origin until the fine truncation holds again.
      double back = inside;
      do {
        back -= dir * step;
      } while (dir * back > 0.0 && !holds_fine(back));
      start = dir * back > 0.0 ? back : 0.0;
    } else if (holds_fine(outside)) {
      if (dir * (limit - outside) <= 0.0) {
        return std::nullopt;
      }
      start = outside;
    } else {
      return found;
    }
  }
}

} // namespace

std::string_view to_string(Side s) { return s == Side::PositiveQ ? "positive" : "negative"; }

CriticalValue first_failure(const std::function<bool(double)>& holds, double step, double limit,
                            double tol) {
  return first_failure_from(holds, 0.0, step, limit, tol);
}

CriticalValue critical_q(double delta, int j, Boundary bc, Side side, const PhaseOptions& opts) {
  check_options(opts);
  const ModelParams base{0.0, delta, j, bc};
  validate(base);
  auto at = [&](double q) {
    ModelParams p = base;
    p.q = q;
    return p;
  };
  const double limit = side == Side::PositiveQ ? opts.q_max : -opts.q_max;
  return search_with_escalation(at, opts.scan_step, limit, opts);
}

CriticalValue critical_delta(double q, int j, Boundary bc, double delta_max, double delta_step,
                             const PhaseOptions& opts) {
  check_options(opts);
  if (!(delta_max > 0.0) || !(delta_step > 0.0)) {
    throw std::invalid_argument("critical_delta: delta_max and delta_step must be positive");
  }
  const ModelParams base{q, 0.0, j, bc};
  validate(base);
  auto at = [&](double delta) {
    ModelParams p = base;
    p.delta = delta;
    return p;
  };
  return search_with_escalation(at, delta_step, delta_max, opts);
}

bool is_jump(const CriticalValue& before, const CriticalValue& after, double threshold) {
  if (before.has_value() != after.has_value()) {
    return true;
  }
  if (!before) {
    return false;
  }
  return std::abs(*after - *before) > threshold * std::max(1.0, std::abs(*before));
}

ExceptionalLine trace_exceptional_line(std::span<const double> delta_grid, int j, Boundary bc,
                                       Side side, const PhaseOptions& opts) {
  check_options(opts);
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (delta_grid[i] < 0.0 || (i > 0 && !(delta_grid[i] > delta_grid[i - 1]))) {
      throw std::invalid_argument(
          "trace_exceptional_line: delta grid must be nonnegative and strictly ascending");
    }
  }
  ExceptionalLine line;
  line.j = j;
  line.bc = bc;
  line.k = opts.k;
  line.side = side;
  line.points.resize(delta_grid.size());
  parallel_for(delta_grid.size(), opts.workers, [&](std::size_t i) {
    line.points[i] = {delta_grid[i], critical_q(delta_grid[i], j, bc, side, opts)};
  });
  for (std::size_t i = 1; i < line.points.size(); ++i) {
    if (is_jump(line.points[i - 1].q_crit, line.points[i].q_crit, opts.jump_threshold)) {
      line.jumps.push_back(line.points[i].delta);
    }
  }
  return line;
}

std::vector<DominanceViolation> compare_bc_stability(const ExceptionalLine& line_a,
                                                     const ExceptionalLine& line_b) {
  if (line_a.j != line_b.j || line_a.side != line_b.side ||
      line_a.points.size() != line_b.points.size()) {
    throw std::invalid_argument("compare_bc_stability: lines differ in j, side or grid size");
  }
  std::vector<DominanceViolation> out;
  for (std::size_t i = 0; i < line_a.points.size(); ++i) {
    const auto& a = line_a.points[i];
    const auto& b = line_b.points[i];
    if (a.delta != b.delta) {
      throw std::invalid_argument("compare_bc_stability: delta grids differ at index " +
                                  std::to_string(i));
    }
    if (magnitude(b.q_crit) < magnitude(a.q_crit)) {
      out.push_back({a.delta, a.q_crit, b.q_crit});
    }
  }
  return out;
}

} // namespace ptmathieu
