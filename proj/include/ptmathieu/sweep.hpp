#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ptmathieu/eig.hpp"

namespace ptmathieu {

/// One eigenvalue branch followed along a sweep. `label` is the branch's rank
/// by level order at the first grid point.
struct LevelCurve {
  SweepParam sweep_param = SweepParam::Q;
  std::vector<double> grid;
  std::vector<Complex> values;
  int label = 0;
};

struct SweepOptions {
  /// Starting truncation; raised when the endpoint convergence check fails.
  int truncation = kDefaultTruncation;
  double convergence_tol = 1e-6;
  double tol_im = kDefaultTolIm;
  /// Candidates beyond the k tracked levels offered to the matcher, so a
  /// branch may follow a level that drifts out of the k lowest.
  int extra_candidates = 2;
  int workers = 1;
};

struct Sweep {
  ModelParams base;
  SweepParam param = SweepParam::Q;
  int k = 0;
  SweepOptions options;
  int n_used = 0;
  std::vector<LevelCurve> curves;
  /// Matching steps where two assignments tied within 1e-9.
  int ambiguities = 0;
};

/// Spectra on every grid point at a common truncation (the one the endpoint
/// convergence check selects), then nearest-neighbour branch matching
/// between adjacent points, greedy on sorted complex distances.
Sweep sweep_levels(const ModelParams& base, SweepParam param, std::span<const double> grid, int k,
                   const SweepOptions& opts = {});

enum class Direction { RealToComplex, ComplexToReal };

std::string_view to_string(Direction d);

/// A point where two branches meet on the real axis. `direction` is
/// oriented along increasing |parameter|, i.e. away from the undeformed
/// (q = 0 or delta = 0) origin.
struct CoalescenceEvent {
  double param_value = 0.0;
  int branch_a = 0;
  int branch_b = 0;
  double a_star = 0.0;
  Direction direction = Direction::RealToComplex;
  /// False when the transition lies outside the grid on the origin side.
  bool bracketed = true;
};

inline constexpr double kEventWidth = 1e-6;

std::vector<CoalescenceEvent> detect_coalescence(const Sweep& sweep, double tol_im);

struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Maximal runs of grid points where the curve is real, at grid resolution.
std::vector<ParamInterval> real_intervals(const LevelCurve& curve, double tol_im);

/// As above for branch `label` of the sweep, with interior endpoints refined
/// by the same bisection detect_coalescence uses.
std::vector<ParamInterval> real_intervals(const Sweep& sweep, int label, double tol_im);

} // namespace ptmathieu
