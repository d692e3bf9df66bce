#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ptmathieu/eig.hpp"

namespace ptmathieu {

// The PT-unbroken region connected to q = 0 and its boundary, the
// exceptional line q*(delta). Recovery intervals past the first breaking
// point are not searched.

enum class Side { PositiveQ, NegativeQ };

std::string_view to_string(Side s);

/// nullopt encodes "Unbounded": no breaking found before q_max.
using CriticalValue = std::optional<double>;

struct PhaseOptions {
  int k = 6;
  double q_max = 20.0;
  double tol_q = 1e-4;
  double scan_step = 0.02;
  double jump_threshold = 0.25;
  double tol_im = kDefaultTolIm;
  int truncation = kDefaultTruncation;
  int workers = 1;
};

/// First point along a ray from 0 where `holds` fails, bisected to `tol`.
/// Scans 0 + step, 0 + 2 step, ... up to `limit` (signed; |limit| > 0).
/// `holds(0)` is assumed true.
CriticalValue first_failure(const std::function<bool(double)>& holds, double step, double limit,
                            double tol);

/// Edge of the unbroken region on one side of q = 0: the predicate is "the k
/// lowest levels are all real". Bracket endpoints are re-checked at double
/// truncation and the search repeats at higher truncation on disagreement.
CriticalValue critical_q(double delta, int j, Boundary bc, Side side,
                         const PhaseOptions& opts = {});

/// The same predicate scanned in delta >= 0 at fixed q, up to delta_max.
CriticalValue critical_delta(double q, int j, Boundary bc, double delta_max, double delta_step,
                             const PhaseOptions& opts = {});

struct LinePoint {
  double delta = 0.0;
  CriticalValue q_crit;
};

struct ExceptionalLine {
  int j = 1;
  Boundary bc = Boundary::Neumann;
  int k = 6;
  Side side = Side::PositiveQ;
  std::vector<LinePoint> points;
  /// Grid values delta_{i+1} following a discontinuity of the line.
  std::vector<double> jumps;
};

/// Discontinuity between consecutive points: relative change above the
/// threshold, or a switch between bounded and Unbounded.
bool is_jump(const CriticalValue& before, const CriticalValue& after, double threshold);

ExceptionalLine trace_exceptional_line(std::span<const double> delta_grid, int j, Boundary bc,
                                       Side side, const PhaseOptions& opts = {});

struct DominanceViolation {
  double delta = 0.0;
  CriticalValue q_a;
  CriticalValue q_b;
};

/// Pointwise check that line_b's unbroken region contains line_a's:
/// |q_b| >= |q_a| with Unbounded treated as infinite. Returns violations.
std::vector<DominanceViolation> compare_bc_stability(const ExceptionalLine& line_a,
                                                     const ExceptionalLine& line_b);

} // namespace ptmathieu
