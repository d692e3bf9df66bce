#pragma once

#include <stdexcept>
#include <string>

namespace ptmathieu {

/// Raised when a numerical procedure fails to deliver a trustworthy result:
/// eigensolver or truncation non-convergence, unpaired complex eigenvalues,
/// integrator step underflow, or a diverging root refinement.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations are reported as std::invalid_argument.

} // namespace ptmathieu
