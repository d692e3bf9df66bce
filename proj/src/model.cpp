#include "ptmathieu/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptmathieu {

namespace {

using std::numbers::pi;

// Integral of cos(p x) over [0, pi] for integer p.
double cos_integral(int p) { return p == 0 ? pi : 0.0; }

// Integral of sin(k x) cos(p x) over [0, pi] for integers k, p.
double sin_cos_integral(int k, int p) {
  if (k * k == p * p) {
    return 0.0;
  }
  if (((k + p) % 2 + 2) % 2 == 0) {
    return 0.0;
  }
  return 2.0 * k / static_cast<double>(k * k - p * p);
}

void check_index(int m, int n, Boundary bc) {
  const int lo = first_index(bc);
  if (m < lo || n < lo) {
    throw std::invalid_argument("basis index below " + std::to_string(lo) + " for " +
                                std::string(to_string(bc)) + " basis: (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");
  }
}

// Product-to-sum sign: cos m cos n = (cos(m-n) + cos(m+n))/2,
// sin m sin n = (cos(m-n) - cos(m+n))/2.
double sum_sign(Boundary bc) { return bc == Boundary::Neumann ? 1.0 : -1.0; }

} // namespace

std::string_view to_string(Boundary bc) {
  return bc == Boundary::Neumann ? "neumann" : "dirichlet";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "neumann" || text == "Neumann" || text == "N") {
    return Boundary::Neumann;
  }
  if (text == "dirichlet" || text == "Dirichlet" || text == "D") {
    return Boundary::Dirichlet;
  }
  throw std::invalid_argument("unknown boundary condition '" + std::string(text) +
                              "' (expected neumann or dirichlet)");
}

std::string_view to_string(SweepParam p) { return p == SweepParam::Q ? "q" : "delta"; }

SweepParam parse_sweep_param(std::string_view text) {
  if (text == "q") {
    return SweepParam::Q;
  }
  if (text == "delta") {
    return SweepParam::Delta;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(text) +
                              "' (expected q or delta)");
}

ModelParams with_param(ModelParams base, SweepParam p, double value) {
  (p == SweepParam::Q ? base.q : base.delta) = value;
  return base;
}

void validate(const ModelParams& params) {
  if (params.j < 1) {
    throw std::invalid_argument("frequency index j must be >= 1, got " +
                                std::to_string(params.j));
  }
  if (!std::isfinite(params.q) || !std::isfinite(params.delta)) {
    throw std::invalid_argument("q and delta must be finite");
  }
}

int frequency_index(double j) {
  if (!std::isfinite(j) || j < 1.0 || j != std::floor(j) || j > 1e6) {
    throw std::invalid_argument("frequency index j must be a positive integer, got " +
                                std::to_string(j));
  }
  return static_cast<int>(j);
}

Complex potential_value(const ModelParams& params, double x) {
  return 2.0 * params.q *
         Complex(std::cos(2.0 * x), params.delta * std::sin(2.0 * params.j * x));
}

double cosine_coupling(int m, int n, Boundary bc) {
  check_index(m, n, bc);
  const double diff = cos_integral(m - n - 2) + cos_integral(m - n + 2);
  const double sum = cos_integral(m + n - 2) + cos_integral(m + n + 2);
  return 0.25 * (diff + sum_sign(bc) * sum);
}

double sine_coupling(int m, int n, int j, Boundary bc) {
  check_index(m, n, bc);
  if (j < 1) {
    throw std::invalid_argument("frequency index j must be >= 1");
  }
  const int k = 2 * j;
  return 0.5 * (sin_cos_integral(k, m - n) + sum_sign(bc) * sin_cos_integral(k, m + n));
}

double basis_norm(int n, Boundary bc) {
  check_index(n, n, bc);
  return (bc == Boundary::Neumann && n == 0) ? std::sqrt(pi) : std::sqrt(pi / 2.0);
}

OperatorMatrix assemble_matrix(const ModelParams& params, int n) {
  validate(params);
  if (n < kMinTruncation) {
    throw std::invalid_argument("truncation must be >= " + std::to_string(kMinTruncation) +
                                ", got " + std::to_string(n));
  }
  const Boundary bc = params.bc;
  const int lo = first_index(bc);

  Eigen::VectorXd inv_norm(n);
  for (int r = 0; r < n; ++r) {
    inv_norm(r) = 1.0 / basis_norm(lo + r, bc);
  }

  OperatorMatrix out;
  out.params = params;
  out.basis = bc == Boundary::Neumann ? Basis::CosineNormalized : Basis::SineNormalized;
  out.entries.setZero(n, n);
  const double cos_scale = 2.0 * params.q;
  const double sin_scale = 2.0 * params.q * params.delta;
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const int m = lo + r;
      const int k = lo + c;
      const double w = inv_norm(r) * inv_norm(c);
      const double re = cos_scale * (w * cosine_coupling(m, k, bc));
      const double im = (m + k) % 2 == 1 ? sin_scale * (w * sine_coupling(m, k, params.j, bc))
                                         : 0.0;
      out.entries(r, c) = Complex(re, im);
    }
    const double kin = static_cast<double>(lo + c);
    out.entries(c, c) += kin * kin;
  }
  return out;
}

} // namespace ptmathieu
