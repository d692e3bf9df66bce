#include "ptmathieu/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "ptmathieu/parallel.hpp"

namespace ptmathieu {

namespace {

constexpr double kTieWidth = 1e-9;

bool conjugate_partners(const Complex& a, const Complex& b, double tol_im) {
  if (is_real_level(a, tol_im) || is_real_level(b, tol_im)) {
    return false;
  }
  return std::abs(a - std::conj(b)) <= 1e-8 * std::max(1.0, std::abs(a.real()));
}

enum class PairState { TwoReal, Conjugate, Other };

PairState pair_state(const Complex& a, const Complex& b, double tol_im) {
  if (is_real_level(a, tol_im) && is_real_level(b, tol_im)) {
    return PairState::TwoReal;
  }
  if (conjugate_partners(a, b, tol_im)) {
    return PairState::Conjugate;
  }
  return PairState::Other;
}

// Real and complex ends of a cell are known; bisect on "the two eigenvalues
// nearest `center` are both real". Returns (param, a_star).
std::pair<double, double> bisect_transition(const Sweep& sweep, double lo, double hi,
                                            bool lo_is_real, double center, double tol_im) {
  auto nearest_two = [&](double value) {
    const auto s = spectrum_at(with_param(sweep.base, sweep.param, value), sweep.n_used,
                               sweep.options.tol_im);
    std::vector<Complex> ev = s.eigenvalues;
    std::partial_sort(ev.begin(), ev.begin() + 2, ev.end(), [center](Complex x, Complex y) {
      const double dx = std::abs(x - center);
      const double dy = std::abs(y - center);
      return dx != dy ? dx < dy : level_less(x, y);
    });
    return std::pair{ev[0], ev[1]};
  };
  while (hi - lo > kEventWidth) {
    const double mid = 0.5 * (lo + hi);
    const auto [x, y] = nearest_two(mid);
    const bool real = is_real_level(x, tol_im) && is_real_level(y, tol_im);
    center = 0.5 * (x.real() + y.real());
    if (real == lo_is_real) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  const auto [x, y] = nearest_two(mid);
  return {mid, 0.5 * (x.real() + y.real())};
}

double cell_center(const Sweep& sweep, int a, int b, std::size_t i) {
  const auto& ca = sweep.curves[static_cast<std::size_t>(std::min(a, b))].values;
  const auto& cb = sweep.curves[static_cast<std::size_t>(std::max(a, b))].values;
  return 0.25 * (ca[i].real() + cb[i].real() + ca[i + 1].real() + cb[i + 1].real());
}

Direction orient(bool real_at_lower_param, double position) {
  // Ascending parameter moves away from the origin when position >= 0.
  const bool ascending_outward = position >= 0.0;
  const bool real_first = ascending_outward ? real_at_lower_param : !real_at_lower_param;
  return real_first ? Direction::RealToComplex : Direction::ComplexToReal;
}

} // namespace

std::string_view to_string(Direction d) {
  return d == Direction::RealToComplex ? "real_to_complex" : "complex_to_real";
}

Sweep sweep_levels(const ModelParams& base, SweepParam param, std::span<const double> grid, int k,
                   const SweepOptions& opts) {
  validate(base);
  if (k < 2) {
    throw std::invalid_argument("sweep_levels: k must be >= 2");
  }
  if (grid.empty()) {
    throw std::invalid_argument("sweep_levels: empty grid");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("sweep_levels: grid must be strictly ascending");
    }
  }
  const int pool = k + std::max(0, opts.extra_candidates);

  Sweep out;
  out.base = base;
  out.param = param;
  out.k = k;
  out.options = opts;

  // Common truncation: the coarser of the two truncations the convergence
  // check found equivalent, at the sweep endpoints.
  ConvergenceOptions conv;
  conv.n_start = opts.truncation;
  conv.tol_im = opts.tol_im;
  int n = opts.truncation;
  for (double end : {grid.front(), grid.back()}) {
    const auto s = converged_spectrum(with_param(base, param, end), k, opts.convergence_tol, conv);
    n = std::max(n, s.n_used / 2);
  }
  out.n_used = n;

  std::vector<std::vector<Complex>> levels(grid.size());
  parallel_for(grid.size(), opts.workers, [&](std::size_t i) {
    levels[i] = spectrum_at(with_param(base, param, grid[i]), n, opts.tol_im).lowest(pool);
  });

  out.curves.resize(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) {
    auto& c = out.curves[static_cast<std::size_t>(b)];
    c.sweep_param = param;
    c.grid.assign(grid.begin(), grid.end());
    c.label = b;
    c.values.reserve(grid.size());
    c.values.push_back(levels[0][static_cast<std::size_t>(b)]);
  }

  struct Link {
    double distance;
    int branch;
    int candidate;
  };
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto& cand = levels[i];
    std::vector<Link> links;
    for (int b = 0; b < k; ++b) {
      const Complex prev = out.curves[static_cast<std::size_t>(b)].values.back();
      for (int c = 0; c < static_cast<int>(cand.size()); ++c) {
        links.push_back({std::abs(cand[static_cast<std::size_t>(c)] - prev), b, c});
      }
    }
    std::vector<bool> branch_done(static_cast<std::size_t>(k), false);
    std::vector<bool> cand_used(cand.size(), false);
    std::vector<int> assignment(static_cast<std::size_t>(k), -1);
    for (int assigned = 0; assigned < k; ++assigned) {
      double best = std::numeric_limits<double>::infinity();
      for (const Link& l : links) {
        if (!branch_done[static_cast<std::size_t>(l.branch)] &&
            !cand_used[static_cast<std::size_t>(l.candidate)]) {
          best = std::min(best, l.distance);
        }
      }
      // Among near-equal links prefer the lowest label, then lowest candidate.
      const Link* chosen = nullptr;
      for (const Link& l : links) {
        if (branch_done[static_cast<std::size_t>(l.branch)] ||
            cand_used[static_cast<std::size_t>(l.candidate)] || l.distance > best + kTieWidth) {
          continue;
        }
        if (!chosen || l.branch < chosen->branch ||
            (l.branch == chosen->branch && l.candidate < chosen->candidate)) {
          chosen = &l;
        }
      }
      // A tie only matters when it competes for the same branch or candidate.
      int ties = 0;
      for (const Link& l : links) {
        if (branch_done[static_cast<std::size_t>(l.branch)] ||
            cand_used[static_cast<std::size_t>(l.candidate)] || l.distance > best + kTieWidth) {
          continue;
        }
        if ((l.branch == chosen->branch) != (l.candidate == chosen->candidate)) {
          ++ties;
        }
      }
      if (ties > 0) {
        ++out.ambiguities;
      }
      branch_done[static_cast<std::size_t>(chosen->branch)] = true;
      cand_used[static_cast<std::size_t>(chosen->candidate)] = true;
      assignment[static_cast<std::size_t>(chosen->branch)] = chosen->candidate;
    }
    for (int b = 0; b < k; ++b) {
      out.curves[static_cast<std::size_t>(b)].values.push_back(
          cand[static_cast<std::size_t>(assignment[static_cast<std::size_t>(b)])]);
    }
  }
  return out;
}

std::vector<CoalescenceEvent> detect_coalescence(const Sweep& sweep, double tol_im) {
  if (!(tol_im > 0.0)) {
    throw std::invalid_argument("detect_coalescence: tol_im must be positive");
  }
  std::vector<CoalescenceEvent> events;
  if (sweep.curves.empty()) {
    return events;
  }
  const auto& grid = sweep.curves.front().grid;
  for (const auto& c : sweep.curves) {
    if (c.grid != grid) {
      throw std::invalid_argument("detect_coalescence: curves do not share a grid");
    }
  }
  const int k = static_cast<int>(sweep.curves.size());
  auto value = [&](int b, std::size_t i) {
    return sweep.curves[static_cast<std::size_t>(b)].values[i];
  };

  // Pairs already complex at the grid end nearest the origin.
  std::optional<std::size_t> origin_end;
  if (grid.front() >= 0.0) {
    origin_end = 0;
  } else if (grid.back() <= 0.0) {
    origin_end = grid.size() - 1;
  }
  if (origin_end) {
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (pair_state(value(a, *origin_end), value(b, *origin_end), tol_im) ==
            PairState::Conjugate) {
          events.push_back({grid[*origin_end], a, b, value(a, *origin_end).real(),
                            Direction::RealToComplex, false});
        }
      }
    }
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const PairState s0 = pair_state(value(a, i), value(b, i), tol_im);
        const PairState s1 = pair_state(value(a, i + 1), value(b, i + 1), tol_im);
        const bool real_to_pair = s0 == PairState::TwoReal && s1 == PairState::Conjugate;
        const bool pair_to_real = s0 == PairState::Conjugate && s1 == PairState::TwoReal;
        if (!real_to_pair && !pair_to_real) {
          continue;
        }
        const auto [where, a_star] =
            bisect_transition(sweep, grid[i], grid[i + 1], real_to_pair,
                              cell_center(sweep, a, b, i), tol_im);
        events.push_back({where, a, b, a_star, orient(real_to_pair, where), true});
      }
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const CoalescenceEvent& x, const CoalescenceEvent& y) {
                     return x.param_value < y.param_value;
                   });
  return events;
}

std::vector<ParamInterval> real_intervals(const LevelCurve& curve, double tol_im) {
  std::vector<ParamInterval> out;
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const bool real = is_real_level(curve.values[i], tol_im);
    if (real && !start) {
      start = i;
    }
    if (!real && start) {
      out.push_back({curve.grid[*start], curve.grid[i - 1]});
      start.reset();
    }
  }
  if (start) {
    out.push_back({curve.grid[*start], curve.grid.back()});
  }
  return out;
}

std::vector<ParamInterval> real_intervals(const Sweep& sweep, int label, double tol_im) {
  if (label < 0 || label >= static_cast<int>(sweep.curves.size())) {
    throw std::invalid_argument("real_intervals: no branch with label " + std::to_string(label));
  }
  const auto& curve = sweep.curves[static_cast<std::size_t>(label)];
  const auto& grid = curve.grid;
  const int k = static_cast<int>(sweep.curves.size());

  // Transition in cell (i, i+1); `complex_at` is the complex end.
  auto refine = [&](std::size_t i, std::size_t complex_at) {
    const Complex z = curve.values[complex_at];
    int partner = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int b = 0; b < k; ++b) {
      if (b == label) {
        continue;
      }
      const double d = std::abs(sweep.curves[static_cast<std::size_t>(b)].values[complex_at] -
                                std::conj(z));
      if (d < best) {
        best = d;
        partner = b;
      }
    }
    double center = 0.0;
    if (partner >= 0 && conjugate_partners(z, sweep.curves[static_cast<std::size_t>(partner)]
                                                  .values[complex_at],
                                           tol_im)) {
      center = cell_center(sweep, label, partner, i);
    } else {
      // Partner untracked: the conjugate mirrors this branch.
      center = 0.5 * (curve.values[i].real() + curve.values[i + 1].real());
    }
    return bisect_transition(sweep, grid[i], grid[i + 1], complex_at == i + 1, center, tol_im)
        .first;
  };

  std::vector<ParamInterval> out = real_intervals(curve, tol_im);
  for (auto& interval : out) {
    const auto lo_idx = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), interval.lo) - grid.begin());
    const auto hi_idx = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), interval.hi) - grid.begin());
    if (lo_idx > 0) {
      interval.lo = refine(lo_idx - 1, lo_idx - 1);
    }
    if (hi_idx + 1 < grid.size()) {
      interval.hi = refine(hi_idx, hi_idx + 1);
    }
  }
  return out;
}

} // namespace ptmathieu
