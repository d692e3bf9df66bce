#include "ptmathieu/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "ptmathieu/errors.hpp"

namespace ptmathieu {

namespace {

using std::numbers::pi;

} // namespace

std::vector<Complex> symmetric_tridiagonal_eigenvalues(std::span<const Complex> diag,
                                                       std::span<const Complex> off) {
  const std::size_t n = diag.size();
  if (n == 0) {
    return {};
  }
  if (off.size() + 1 != n) {
    throw std::invalid_argument("symmetric_tridiagonal_eigenvalues: off-diagonal size mismatch");
  }
  std::vector<Complex> d(diag.begin(), diag.end());
  std::vector<Complex> e(n, Complex(0.0));
  std::copy(off.begin(), off.end(), e.begin());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const int max_iter = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) {
          break;
        }
      }
      if (m == l) {
        break;
      }
      if (iter++ == max_iter) {
        throw NumericalError("symmetric_tridiagonal_eigenvalues: no convergence at index " +
                             std::to_string(l));
      }
      Complex g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      Complex r = std::sqrt(g * g + 1.0);
      const Complex denom = std::abs(g + r) >= std::abs(g - r) ? g + r : g - r;
      g = d[m] - d[l] + e[l] / denom;
      Complex s = 1.0;
      Complex c = 1.0;
      Complex p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const Complex f = s * e[i];
        const Complex b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (std::abs(r) <= std::numeric_limits<double>::min()) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) {
        continue;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

Spectrum fd_spectrum(const ModelParams& params, int m, int k) {
  validate(params);
  if (m < 51 || m % 2 == 0) {
    throw std::invalid_argument("fd_spectrum: grid size must be odd and >= 51, got " +
                                std::to_string(m));
  }
  const double h = pi / (m - 1);
  const double inv_h2 = 1.0 / (h * h);

  std::vector<Complex> diag;
  std::vector<Complex> off;
  if (params.bc == Boundary::Dirichlet) {
    for (int i = 1; i <= m - 2; ++i) {
      diag.push_back(2.0 * inv_h2 + potential_value(params, i * h));
    }
    off.assign(static_cast<std::size_t>(m - 3), Complex(-inv_h2));
  } else {
    // Ghost points u_{-1} = u_1 and u_m = u_{m-2}. The first and last rows get
    // a doubled coupling; the diagonal similarity sqrt(2) at both ends makes
    // the matrix symmetric with couplings -sqrt(2)/h^2 there.
    for (int i = 0; i <= m - 1; ++i) {
      diag.push_back(2.0 * inv_h2 + potential_value(params, i * h));
    }
    off.assign(static_cast<std::size_t>(m - 1), Complex(-inv_h2));
    off.front() = Complex(-std::sqrt(2.0) * inv_h2);
    off.back() = Complex(-std::sqrt(2.0) * inv_h2);
  }
  if (k < 1 || k > static_cast<int>(diag.size())) {
    throw std::invalid_argument("fd_spectrum: k out of range");
  }

  const auto raw = symmetric_tridiagonal_eigenvalues(diag, off);
  return make_spectrum(params, static_cast<int>(diag.size()), raw);
}

std::vector<Complex> fd_extrapolated_levels(const ModelParams& params, int k, int m) {
  const auto coarse = fd_spectrum(params, m, k).lowest(k);
  const auto middle = fd_spectrum(params, 2 * m - 1, k).lowest(k);
  const auto fine = fd_spectrum(params, 4 * m - 3, k).lowest(k);
  std::vector<Complex> out(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Complex r1_coarse = (4.0 * middle[i] - coarse[i]) / 3.0;
    const Complex r1_fine = (4.0 * fine[i] - middle[i]) / 3.0;
    out[i] = (16.0 * r1_fine - r1_coarse) / 15.0;
  }
  return out;
}

ShootResult shoot(const ModelParams& params, Complex a) {
  validate(params);
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw std::invalid_argument("shoot_residual: trial eigenvalue must be finite");
  }
  namespace odeint = boost::numeric::odeint;
  using State = std::array<Complex, 2>;

  auto rhs = [&params, a](const State& y, State& dydx, double x) {
    dydx[0] = y[1];
    dydx[1] = (potential_value(params, x) - a) * y[0];
  };

  State y = params.bc == Boundary::Neumann ? State{Complex(1.0), Complex(0.0)}
                                           : State{Complex(0.0), Complex(1.0)};
  auto stepper = odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_fehlberg78<State>());
  double x = 0.0;
  double dt = 1e-3;
  for (long attempts = 0; x < pi; ++attempts) {
    if (attempts > 1000000) {
      throw NumericalError("shoot_residual: step budget exhausted");
    }
    dt = std::min(dt, pi - x);
    if (stepper.try_step(rhs, y, x, dt) == odeint::fail && dt < 1e-14) {
      throw NumericalError("shoot_residual: step size underflow at x=" + std::to_string(x));
    }
  }
  if (!std::isfinite(std::abs(y[0])) || !std::isfinite(std::abs(y[1]))) {
    throw NumericalError("shoot_residual: solution overflowed");
  }
  return {a, params.bc == Boundary::Neumann ? y[1] : y[0], params};
}

Complex shoot_residual(const ModelParams& params, Complex a) { return shoot(params, a).residual; }

Complex refine_eigenvalue(const ModelParams& params, Complex a_seed, const RefineOptions& opts) {
  Complex a0 = a_seed;
  Complex f0 = shoot_residual(params, a0);
  if (std::abs(f0) < opts.residual_tol) {
    return a0;
  }
  Complex a1 = a_seed + 1e-6 * std::max(1.0, std::abs(a_seed));
  Complex f1 = shoot_residual(params, a1);
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (std::abs(f1) < opts.residual_tol) {
      return a1;
    }
    const Complex slope = (f1 - f0) / (a1 - a0);
    if (slope == Complex(0.0) || !std::isfinite(std::abs(slope))) {
      throw NumericalError("refine_eigenvalue: secant slope degenerate near a=" +
                           std::to_string(a1.real()) + "+" + std::to_string(a1.imag()) + "i");
    }
    const Complex a2 = a1 - f1 / slope;
    if (std::abs(a2 - a_seed) > opts.trust_radius) {
      throw NumericalError("refine_eigenvalue: iterate left trust radius around seed " +
                           std::to_string(a_seed.real()) + "+" +
                           std::to_string(a_seed.imag()) + "i");
    }
    const Complex f2 = shoot_residual(params, a2);
    // Secant stalled at the rounding floor of the residual.
    if (std::abs(a2 - a1) <= 8.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(1.0, std::abs(a2)) &&
        std::abs(f2) < 1e3 * opts.residual_tol) {
      return a2;
    }
    a0 = a1;
    f0 = f1;
    a1 = a2;
    f1 = f2;
  }
  throw NumericalError("refine_eigenvalue: no convergence after " +
                       std::to_string(opts.max_iterations) + " iterations");
}

ExceptionalPoint refine_exceptional_point(const ModelParams& base, SweepParam param,
                                          double param_seed, Complex a_seed) {
  constexpr double ha = 1e-4;
  constexpr double hp = 1e-6;
  struct Eval {
    Complex f;
    Complex fa;
    Complex faa;
  };
  auto eval = [&](double p, Complex a) {
    const ModelParams at = with_param(base, param, p);
    const Complex f0 = shoot_residual(at, a);
    const Complex fp = shoot_residual(at, a + ha);
    const Complex fm = shoot_residual(at, a - ha);
    return Eval{f0, (fp - fm) / (2.0 * ha), (fp - 2.0 * f0 + fm) / (ha * ha)};
  };

  double p = param_seed;
  Complex a = a_seed;
  for (int it = 0; it < 40; ++it) {
    const Eval e = eval(p, a);
    const Eval ep = eval(p + hp, a);
    const Complex df_dp = (ep.f - e.f) / hp;
    const Complex dfa_dp = (ep.fa - e.fa) / hp;

    Eigen::Vector4d r(e.f.real(), e.f.imag(), e.fa.real(), e.fa.imag());
    Eigen::Matrix<double, 4, 3> jac;
    // Columns: Re a, Im a, p. Analyticity gives d/dIm a = i d/da.
    const Complex i1(0.0, 1.0);
    jac << e.fa.real(), (i1 * e.fa).real(), df_dp.real(),
        e.fa.imag(), (i1 * e.fa).imag(), df_dp.imag(),
        e.faa.real(), (i1 * e.faa).real(), dfa_dp.real(),
        e.faa.imag(), (i1 * e.faa).imag(), dfa_dp.imag();
    const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) {
      throw NumericalError("refine_exceptional_point: singular Gauss-Newton system");
    }
    a += Complex(step(0), step(1));
    p += step(2);
    if (std::abs(a - a_seed) > 1.0 || std::abs(p - param_seed) > 0.5) {
      throw NumericalError("refine_exceptional_point: iterate escaped the seed neighbourhood");
    }
    if (step.norm() < 1e-11) {
      break;
    }
  }
  const Eval e = eval(p, a);
  return {p, a, std::abs(e.f) + std::abs(e.fa)};
}

} // namespace ptmathieu
