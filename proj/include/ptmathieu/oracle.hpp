#pragma once

#include <span>
#include <vector>

#include "ptmathieu/eig.hpp"

namespace ptmathieu {

// Reference methods independent of the Galerkin route: a second-order
// finite-difference discretization and a complex shooting method.

/// Full spectrum of the central-difference discretization on m uniform
/// points over [0, pi] (m odd, m >= 51). Dirichlet eliminates the boundary
/// nodes; Neumann closes with mirrored ghost points. `k` is the number of
/// levels the caller intends to read through Spectrum::lowest and must not
/// exceed the matrix dimension.
Spectrum fd_spectrum(const ModelParams& params, int m, int k);

/// k lowest finite-difference levels extrapolated over grids of m, 2m-1,
/// 4m-3 points (grid spacing halves each time), eliminating the h^2 and h^4
/// error terms.
std::vector<Complex> fd_extrapolated_levels(const ModelParams& params, int k, int m = 201);

/// Eigenvalues of the complex symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (off.size() == diag.size() - 1), by implicit
/// QL iteration.
std::vector<Complex> symmetric_tridiagonal_eigenvalues(std::span<const Complex> diag,
                                                       std::span<const Complex> off);

/// Right-boundary mismatch of the solution launched from x = 0:
///   Neumann:   u(0) = 1, u'(0) = 0, returns u'(pi)
///   Dirichlet: u(0) = 0, u'(0) = 1, returns u(pi)
struct ShootResult {
  Complex a;
  Complex residual;
  ModelParams params;
};

ShootResult shoot(const ModelParams& params, Complex a);
Complex shoot_residual(const ModelParams& params, Complex a);

struct RefineOptions {
  double residual_tol = 1e-10;
  double trust_radius = 1.0;
  int max_iterations = 100;
};

/// Complex secant iteration on shoot_residual started at a_seed.
Complex refine_eigenvalue(const ModelParams& params, Complex a_seed,
                          const RefineOptions& opts = {});

/// Exceptional point located directly on the shooting residual f(a, p):
/// Gauss-Newton on f = 0 and df/da = 0 in (complex a, real p), where p is
/// the coordinate `param` of `base`.
struct ExceptionalPoint {
  double param = 0.0;
  Complex a;
  double residual = 0.0; ///< |f| + |df/da| at the solution
};

ExceptionalPoint refine_exceptional_point(const ModelParams& base, SweepParam param,
                                          double param_seed, Complex a_seed);

} // namespace ptmathieu
