#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace ptmathieu {

using Complex = std::complex<double>;

/// Boundary condition on [0, pi]. Neumann yields the a_n family, Dirichlet
/// the b_n family.
enum class Boundary { Neumann, Dirichlet };

std::string_view to_string(Boundary bc);
Boundary parse_boundary(std::string_view text);

/// One point of parameter space: the operator
///   H = -d^2/dx^2 + 2q (cos 2x + i delta sin 2jx)
/// on [0, pi] with boundary condition `bc`.
struct ModelParams {
  double q = 0.0;
  double delta = 0.0;
  int j = 1;
  Boundary bc = Boundary::Neumann;
};

/// Coordinate varied by one-parameter sweeps.
enum class SweepParam { Q, Delta };

std::string_view to_string(SweepParam p);
SweepParam parse_sweep_param(std::string_view text);

/// Returns `base` with the swept coordinate set to `value`.
ModelParams with_param(ModelParams base, SweepParam p, double value);

/// Throws std::invalid_argument unless j >= 1 and q, delta are finite.
void validate(const ModelParams& params);

/// Converts a real-valued frequency index to j, rejecting non-integers
/// (the half-integer graphene case lives on a different domain).
int frequency_index(double j);

/// V(x) = 2q (cos 2x + i delta sin 2jx), x in [0, pi].
Complex potential_value(const ModelParams& params, double x);

enum class Basis { CosineNormalized, SineNormalized, FiniteDifference };

inline constexpr int kDefaultTruncation = 64;
inline constexpr int kMinTruncation = 8;

/// Truncated matrix of H. For the Galerkin bases row/column i corresponds to
/// the basis index first_index(bc) + i.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  Basis basis = Basis::CosineNormalized;
  ModelParams params;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Lowest basis index: cos(0x) is admissible for Neumann, sin(0x) is not.
constexpr int first_index(Boundary bc) { return bc == Boundary::Neumann ? 0 : 1; }

/// Un-normalized integral of phi_m(x) cos(2x) phi_n(x) over [0, pi], with
/// phi_n = cos(nx) (Neumann) or sin(nx) (Dirichlet).
double cosine_coupling(int m, int n, Boundary bc);

/// Un-normalized integral of phi_m(x) sin(2jx) phi_n(x) over [0, pi].
/// Vanishes whenever m + n is even.
double sine_coupling(int m, int n, int j, Boundary bc);

/// L2 norm of phi_n on [0, pi].
double basis_norm(int n, Boundary bc);

/// H = diag(n^2) + 2q C + 2i q delta S in the orthonormal trigonometric basis
/// adapted to params.bc, truncated to n basis functions.
OperatorMatrix assemble_matrix(const ModelParams& params, int n = kDefaultTruncation);

} // namespace ptmathieu
