#pragma once

#include <vector>

#include "bivalg/numeric.hpp"
#include "bivalg/polynomial.hpp"

namespace bivalg {

/// Inclusive truncation box: indices 0..r_max by 0..s_max.
struct Box {
  unsigned r_max = 0;
  unsigned s_max = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Dense table of the coefficients [x^r y^s] of a power series for all
/// r <= box.r_max, s <= box.s_max.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(Box box);
  static TruncatedSeries identity(Box box);
  static TruncatedSeries from_polynomial(const BivariatePolynomial& p, Box box);

  [[nodiscard]] Box box() const { return box_; }
  [[nodiscard]] const Rational& at(unsigned r, unsigned s) const;
  Rational& at(unsigned r, unsigned s);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  [[nodiscard]] std::size_t index(unsigned r, unsigned s) const;
  Box box_;
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to the common box; throws on box mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace bivalg
