#include "ptmathieu/eig.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ptmathieu/errors.hpp"

extern "C" {
void zgeev_(const char* jobvl, const char* jobvr, const int* n, std::complex<double>* a,
            const int* lda, std::complex<double>* w, std::complex<double>* vl, const int* ldvl,
            std::complex<double>* vr, const int* ldvr, std::complex<double>* work,
            const int* lwork, double* rwork, int* info, std::size_t jobvl_len,
            std::size_t jobvr_len);
}

namespace ptmathieu {

namespace {

std::string format_values(std::span<const Complex> values) {
  std::ostringstream os;
  os.precision(12);
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? ", " : "") << values[i].real() << (values[i].imag() < 0 ? "" : "+")
       << values[i].imag() << 'i';
  }
  os << ']';
  return os.str();
}

} // namespace

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("eigenvalues: matrix must be square");
  }
  if (!matrix.allFinite()) {
    throw std::invalid_argument("eigenvalues: matrix has non-finite entries");
  }
  const int n = static_cast<int>(matrix.rows());
  if (n == 0) {
    return {};
  }
  // zgeev overwrites its input.
  Eigen::MatrixXcd work_matrix = matrix;
  std::vector<Complex> w(static_cast<std::size_t>(n));
  std::vector<double> rwork(2 * static_cast<std::size_t>(n));
  const char job = 'N';
  const int one = 1;
  int info = 0;

  int lwork = -1;
  Complex query;
  zgeev_(&job, &job, &n, work_matrix.data(), &n, w.data(), nullptr, &one, nullptr, &one, &query,
         &lwork, rwork.data(), &info, 1, 1);
  lwork = std::max(2 * n, static_cast<int>(query.real()));
  std::vector<Complex> work(static_cast<std::size_t>(lwork));
  zgeev_(&job, &job, &n, work_matrix.data(), &n, w.data(), nullptr, &one, nullptr, &one,
         work.data(), &lwork, rwork.data(), &info, 1, 1);
  if (info > 0) {
    throw NumericalError("eigenvalues: QR iteration failed to converge (" +
                         std::to_string(info) + " eigenvalues unresolved, N=" +
                         std::to_string(n) + ")");
  }
  if (info < 0) {
    throw std::logic_error("eigenvalues: zgeev argument " + std::to_string(-info) +
                           " invalid");
  }
  return w;
}

std::vector<Complex> eigenvalues(const OperatorMatrix& matrix) {
  return eigenvalues(matrix.entries);
}

bool level_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) {
    return a.real() < b.real();
  }
  return a.imag() < b.imag();
}

void sort_levels(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), level_less);
}

bool is_real_level(const Complex& z, double tol_im) {
  return std::abs(z.imag()) <= tol_im * std::max(1.0, std::abs(z.real()));
}

RealClassification classify_real(std::span<const Complex> raw, double tol_im) {
  if (!(tol_im > 0.0)) {
    throw std::invalid_argument("classify_real: tol_im must be positive");
  }
  RealClassification out;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const Complex& z : raw) {
    if (is_real_level(z, tol_im)) {
      out.real_levels.push_back(z.real());
    } else if (z.imag() > 0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }
  std::sort(out.real_levels.begin(), out.real_levels.end());

  struct Candidate {
    double distance;
    std::size_t u;
    std::size_t l;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(upper.size() * lower.size());
  for (std::size_t u = 0; u < upper.size(); ++u) {
    for (std::size_t l = 0; l < lower.size(); ++l) {
      candidates.push_back({std::abs(upper[u] - std::conj(lower[l])), u, l});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  std::vector<bool> used_u(upper.size(), false);
  std::vector<bool> used_l(lower.size(), false);
  for (const Candidate& c : candidates) {
    if (used_u[c.u] || used_l[c.l]) {
      continue;
    }
    used_u[c.u] = true;
    used_l[c.l] = true;
    out.complex_pairs.push_back({upper[c.u], lower[c.l]});
  }

  std::vector<Complex> leftover;
  for (std::size_t u = 0; u < upper.size(); ++u) {
    if (!used_u[u]) {
      leftover.push_back(upper[u]);
    }
  }
  for (std::size_t l = 0; l < lower.size(); ++l) {
    if (!used_l[l]) {
      leftover.push_back(lower[l]);
    }
  }
  if (!leftover.empty()) {
    throw NumericalError("classify_real: unpaired complex eigenvalues " +
                         format_values(leftover) + " at tol_im=" + std::to_string(tol_im));
  }
  std::sort(out.complex_pairs.begin(), out.complex_pairs.end(),
            [](const ConjugatePair& a, const ConjugatePair& b) {
              return level_less(a.lower, b.lower);
            });
  return out;
}

std::vector<Complex> Spectrum::lowest(int k) const {
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)),
                                           eigenvalues.size());
  return {eigenvalues.begin(), eigenvalues.begin() + static_cast<std::ptrdiff_t>(count)};
}

bool Spectrum::lowest_all_real(int k) const {
  const auto levels = lowest(k);
  return std::all_of(levels.begin(), levels.end(),
                     [this](const Complex& z) { return is_real_level(z, tol_im); });
}

Spectrum make_spectrum(const ModelParams& params, int n_used, std::span<const Complex> raw,
                       double tol_im) {
  Spectrum s;
  s.params = params;
  s.n_used = n_used;
  s.tol_im = tol_im;
  auto classes = classify_real(raw, tol_im);
  // Canonical form: real levels lose their imaginary noise and each pair is
  // made exactly conjugate, so level order inside a pair is deterministic.
  for (ConjugatePair& pair : classes.complex_pairs) {
    const double re = 0.5 * (pair.upper.real() + pair.lower.real());
    const double im = 0.5 * (pair.upper.imag() - pair.lower.imag());
    pair.upper = Complex(re, im);
    pair.lower = Complex(re, -im);
  }
  s.eigenvalues.reserve(raw.size());
  for (double re : classes.real_levels) {
    s.eigenvalues.emplace_back(re, 0.0);
  }
  for (const ConjugatePair& pair : classes.complex_pairs) {
    s.eigenvalues.push_back(pair.upper);
    s.eigenvalues.push_back(pair.lower);
  }
  sort_levels(s.eigenvalues);
  s.real_levels = std::move(classes.real_levels);
  s.complex_pairs = std::move(classes.complex_pairs);
  return s;
}

Spectrum spectrum_at(const ModelParams& params, int n, double tol_im) {
  const auto raw = eigenvalues(assemble_matrix(params, n));
  return make_spectrum(params, n, raw, tol_im);
}

Spectrum converged_spectrum(const ModelParams& params, int k, double tol,
                            const ConvergenceOptions& opts) {
  if (k < 1) {
    throw std::invalid_argument("converged_spectrum: k must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("converged_spectrum: tol must be positive");
  }
  int n = std::max(opts.n_start, kMinTruncation);
  while (n < k) {
    n *= 2;
  }
  Spectrum previous = spectrum_at(params, n, opts.tol_im);
  for (;;) {
    const int next = 2 * n;
    if (next > opts.n_max) {
      break;
    }
    Spectrum current = spectrum_at(params, next, opts.tol_im);
    const auto a = previous.lowest(k);
    const auto b = current.lowest(k);
    double moved = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      moved = std::max(moved, std::abs(a[i] - b[i]));
    }
    if (moved < tol) {
      return current;
    }
    previous = std::move(current);
    n = next;
  }
  // Report the last two iterates.
  const Spectrum coarse = spectrum_at(params, n / 2 >= kMinTruncation ? n / 2 : n, opts.tol_im);
  std::ostringstream os;
  os << "converged_spectrum: no convergence of " << k << " levels to tol=" << tol
     << " by N_max=" << opts.n_max << " (q=" << params.q << ", delta=" << params.delta
     << ", j=" << params.j << ", bc=" << to_string(params.bc) << "); N=" << coarse.n_used
     << ": " << format_values(coarse.lowest(k)) << "; N=" << previous.n_used << ": "
     << format_values(previous.lowest(k));
  throw NumericalError(os.str());
}

} // namespace ptmathieu
