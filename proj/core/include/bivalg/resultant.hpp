#pragma once

#include <vector>

#include "bivalg/polynomial.hpp"

namespace bivalg {

/// Determinant of the Sylvester matrix of two univariate coefficient lists
/// (low degree first) taken at their formal degrees, so leading zeros count.
Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Res_v(p, q): eliminates `eliminate` and returns a polynomial in the other
/// variable. Computed exactly by evaluating at integer points and interpolating.
UnivariatePolynomial resultant(const BivariatePolynomial& p, const BivariatePolynomial& q, Var eliminate);

/// Unique polynomial of degree <= n through (k, values[k]) for k = 0..n.
UnivariatePolynomial interpolate_at_integers(const std::vector<Rational>& values);

}  // namespace bivalg
