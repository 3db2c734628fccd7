#pragma once

#include <complex>
#include <vector>

#include "bivalg/numeric.hpp"

namespace bivalg {

struct RootOptions {
  unsigned max_iterations = 500;
  /// Leading coefficients below this fraction of the largest are dropped.
  double trim_tolerance = 1e-25;
};

struct RootResult {
  std::vector<Complex> roots;
  bool converged = true;
  bool identically_zero = false;  // every coefficient was (numerically) zero
  unsigned iterations = 0;
};

/// All complex roots of sum coeffs[k] z^k by Aberth-Ehrlich simultaneous
/// iteration. Start points and update order are fixed, so results are
/// reproducible. Roots of multiplicity > 1 converge only linearly and may
/// leave `converged` false while still being accurate to about half precision.
RootResult aberth_roots(std::vector<Complex> coeffs, const RootOptions& options = {});

struct RootResultDouble {
  std::vector<std::complex<double>> roots;
  bool converged = true;
  bool identically_zero = false;
};

/// Same iteration in double precision, for bulk sampling. Coefficients whose
/// modulus is at most `zero_floor` count as zero.
RootResultDouble aberth_roots_double(std::vector<std::complex<double>> coeffs, double zero_floor = 0.0,
                                     unsigned max_iterations = 200);

}  // namespace bivalg
