#pragma once

// Polynomials shared by the unit and acceptance tests.

#include <utility>

#include "bivalg/polynomial.hpp"

namespace bivalg::fixtures {

inline BivariatePolynomial one() { return BivariatePolynomial(Rational(1)); }
inline BivariatePolynomial x() { return BivariatePolynomial::x(); }
inline BivariatePolynomial y() { return BivariatePolynomial::y(); }

/// 1 - x - y
inline BivariatePolynomial multinomial_h() { return one() - x() - y(); }

/// 1 - 2x(1 + y) - x^2 (1 - y)^2
inline BivariatePolynomial coloring_h() {
  return one() - Rational(2) * x() * (one() + y()) - x() * x() * (one() - y()) * (one() - y());
}

/// 1 - x(1 + y)
inline BivariatePolynomial coloring_g() { return one() - x() * (one() + y()); }

/// (1 - 2x)(1 - 2y): every point with x = 1/2 or y = 1/2 is a zero.
inline BivariatePolynomial product_h() {
  return (one() - Rational(2) * x()) * (one() - Rational(2) * y());
}

/// (1 + x^2 - y) K(x) with K real and its roots just left of the segment from
/// 0 to p = i/sqrt(3); along t -> (tp, 2t/3) the phase turns 0.917 times
/// counterclockwise (checked by tests/oracles/winding_oracle.py).
inline BivariatePolynomial winding_h() {
  const auto k1 = x() * x() + Rational(1, 10) * x() + BivariatePolynomial(Rational(17, 400));
  const auto k2 = x() * x() + Rational(1, 10) * x() + BivariatePolynomial(Rational(13, 80));
  return (one() + x() * x() - y()) * k1 * k2;
}

// Smooth critical point of winding_h in direction 1:1.
inline std::pair<Complex, Complex> winding_point() {
  return {Complex(Real(0), Real(1) / sqrt(Real(3))), Complex(Rational(2, 3))};
}

}  // namespace bivalg::fixtures
