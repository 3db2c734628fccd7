#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bivalg/numeric.hpp"

namespace bivalg {

enum class Var { kX, kY };

/// Exponent pair (i, j) of the monomial x^i y^j. Ordered lexicographically.
struct Exponent {
  unsigned i = 0;
  unsigned j = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse bivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so two equal polynomials compare equal.
class BivariatePolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(const Rational& constant);
  explicit BivariatePolynomial(Terms terms);

  static BivariatePolynomial x();
  static BivariatePolynomial y();
  static BivariatePolynomial monomial(unsigned i, unsigned j, const Rational& c);
  /// Builds from (i, j, coefficient) triples; repeated exponents are summed.
  static BivariatePolynomial from_triples(
      const std::vector<std::tuple<unsigned, unsigned, Rational>>& triples);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational coefficient(unsigned i, unsigned j) const;
  [[nodiscard]] Rational constant_term() const { return coefficient(0, 0); }
  [[nodiscard]] unsigned degree(Var v) const;
  [[nodiscard]] unsigned total_degree() const;
  /// Largest |coefficient|.
  [[nodiscard]] Rational max_coefficient() const;

  [[nodiscard]] BivariatePolynomial partial(Var v) const;
  [[nodiscard]] BivariatePolynomial swapped() const;  // p(y, x)

  [[nodiscard]] Complex eval(const Complex& x, const Complex& y) const;
  [[nodiscard]] std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
  [[nodiscard]] Rational eval(const Rational& x, const Rational& y) const;
  /// sum |c_ij| |x|^i |y|^j: the size of the terms being cancelled at (x, y).
  [[nodiscard]] Real eval_scale(const Complex& x, const Complex& y) const;

  /// Coefficients, low degree first, of p(x0, y) as a polynomial in y (or of
  /// p(x, y0) in x when `v` is kX with `at` the y value).
  [[nodiscard]] std::vector<Complex> specialize(Var v, const Complex& at) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Rational& c);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
  friend BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a) { return a *= c; }
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// Dense univariate polynomial over Q, low degree first, no trailing zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Complex eval(const Complex& x) const;
  [[nodiscard]] UnivariatePolynomial derivative() const;
  [[nodiscard]] UnivariatePolynomial monic() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Euclidean division; throws on division by zero.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                                      const UnivariatePolynomial& b);

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);
/// p / gcd(p, p'), monic: same roots, each simple.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

/// Views p as a polynomial in `main` whose coefficients are polynomials in
/// the other variable; returns those coefficients, lowest power of `main` first.
std::vector<UnivariatePolynomial> coefficients_in(const BivariatePolynomial& p, Var main);

}  // namespace bivalg
