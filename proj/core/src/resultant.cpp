#include "bivalg/resultant.hpp"

#include <utility>

namespace bivalg {

Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return 0;
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;

  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) mat[row][row + k] = a[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) mat[n + row][row + k] = b[n - k];
  }

  Rational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && mat[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (std::size_t row = col + 1; row < size; ++row) {
      if (mat[row][col] == 0) continue;
      const Rational f = mat[row][col] / mat[col][col];
      for (std::size_t k = col; k < size; ++k) mat[row][k] -= f * mat[col][k];
    }
  }
  return det;
}

UnivariatePolynomial interpolate_at_integers(const std::vector<Rational>& values) {
  // Newton divided differences on nodes 0, 1, ..., n.
  std::vector<Rational> dd = values;
  const std::size_t n = dd.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(level);
    }
  }
  UnivariatePolynomial result;
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - k) + dd[k]
    result = result * UnivariatePolynomial({Rational(-static_cast<long>(k)), Rational(1)}) +
             UnivariatePolynomial({dd[k]});
  }
  return result;
}

UnivariatePolynomial resultant(const BivariatePolynomial& p, const BivariatePolynomial& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) return {};
  const Var keep = eliminate == Var::kX ? Var::kY : Var::kX;
  const unsigned m = p.degree(eliminate);
  const unsigned n = q.degree(eliminate);
  const unsigned bound = n * p.degree(keep) + m * q.degree(keep);

  const auto pc = coefficients_in(p, eliminate);
  const auto qc = coefficients_in(q, eliminate);
  std::vector<Rational> values;
  values.reserve(bound + 1);
  std::vector<Rational> a(m + 1);
  std::vector<Rational> b(n + 1);
  for (unsigned k = 0; k <= bound; ++k) {
    const Rational t(k);
    for (unsigned i = 0; i <= m; ++i) a[i] = pc[i].eval(t);
    for (unsigned i = 0; i <= n; ++i) b[i] = qc[i].eval(t);
    values.push_back(sylvester_resultant(a, b));
  }
  return interpolate_at_integers(values);
}

}  // namespace bivalg
