#pragma once

#include <span>
#include <vector>

#include "ptmathieu/model.hpp"

namespace ptmathieu {

inline constexpr double kDefaultTolIm = 1e-7;
inline constexpr int kMaxTruncation = 512;

/// All eigenvalues of a dense complex matrix, with multiplicity, in no
/// particular order. Throws NumericalError if the QR iteration fails.
std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& matrix);
std::vector<Complex> eigenvalues(const OperatorMatrix& matrix);

/// Ascending real part, ties broken by ascending imaginary part.
bool level_less(const Complex& a, const Complex& b);
void sort_levels(std::vector<Complex>& values);

/// |Im z| <= tol_im * max(1, |Re z|).
bool is_real_level(const Complex& z, double tol_im);

struct ConjugatePair {
  Complex upper; ///< Im > 0 member
  Complex lower; ///< Im < 0 member
};

struct RealClassification {
  std::vector<double> real_levels; ///< ascending
  std::vector<ConjugatePair> complex_pairs;
};

/// Flags eigenvalues within tolerance of the real axis as real and pairs the
/// rest greedily by nearest conjugate distance. Throws NumericalError when a
/// complex value is left without a partner.
RealClassification classify_real(std::span<const Complex> raw, double tol_im);

struct Spectrum {
  ModelParams params;
  int n_used = 0;
  std::vector<Complex> eigenvalues; ///< canonical form, sorted with level_less
  std::vector<double> real_levels;
  std::vector<ConjugatePair> complex_pairs;
  double tol_im = kDefaultTolIm;

  /// The k lowest eigenvalues in level order.
  std::vector<Complex> lowest(int k) const;
  /// True when the k lowest eigenvalues are all real within tol_im.
  bool lowest_all_real(int k) const;
};

/// Classifies raw eigenvalues and stores them in canonical form: real levels
/// with zero imaginary part, conjugate pairs symmetrized about their mean
/// real part, everything sorted with level_less.
Spectrum make_spectrum(const ModelParams& params, int n_used, std::span<const Complex> raw,
                       double tol_im = kDefaultTolIm);

/// Eigensolve at a fixed truncation and classify.
Spectrum spectrum_at(const ModelParams& params, int n = kDefaultTruncation,
                     double tol_im = kDefaultTolIm);

struct ConvergenceOptions {
  int n_start = kDefaultTruncation;
  int n_max = kMaxTruncation;
  double tol_im = kDefaultTolIm;
};

/// Doubles the truncation from opts.n_start until each of the k lowest
/// levels moves by less than tol between consecutive truncations. Returns
/// the finer of the two spectra. Throws NumericalError past opts.n_max.
Spectrum converged_spectrum(const ModelParams& params, int k, double tol,
                            const ConvergenceOptions& opts = {});

} // namespace ptmathieu
