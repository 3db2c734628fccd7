#pragma once

// Ground-truth coefficients of G(x,y) * H(x,y)^(-beta): an exact rational
// recurrence, a closed form for linear H, and trapezoid quadrature of the
// Cauchy integral over a torus.

#include <cmath>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bivalg/numeric.hpp"
#include "bivalg/polynomial.hpp"
#include "bivalg/series.hpp"

namespace bivalg {

/// base^exponent kept unevaluated; the principal branch is used when a
/// numeric value is needed.
struct SymbolicPower {
  Rational base = 1;
  Rational exponent = 0;

  /// The rational value when base^exponent is rational (real branch).
  [[nodiscard]] std::optional<Rational> exact() const;
  [[nodiscard]] LogComplex log_value() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const SymbolicPower&, const SymbolicPower&) = default;
};

enum class TableSource { kRecurrence, kClosedForm };

/// Exact coefficients: [x^r y^s] = prefactor * series.at(r, s).
struct CoefficientTable {
  TruncatedSeries series;
  Rational beta;
  TableSource source = TableSource::kRecurrence;
  SymbolicPower prefactor;

  [[nodiscard]] LogComplex log_entry(unsigned r, unsigned s) const;
  [[nodiscard]] Complex value(unsigned r, unsigned s) const;
};

/// Coefficients of G * H^(-beta) from the identity H F_x = -beta H_x F (and its
/// y-analogue on the first column). Entries of one anti-diagonal are
/// independent, so `threads > 1` fills them concurrently with identical results.
CoefficientTable coeff_recurrence(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                  const Rational& beta, Box box, unsigned threads = 1);

struct ClosedFormCoefficient {
  Rational rational_part;
  SymbolicPower prefactor;
};

/// [x^r y^s] (c0 + c1 x + c2 y)^(-beta) by the generalized binomial theorem.
ClosedFormCoefficient coeff_linear_closed_form(const Rational& c0, const Rational& c1,
                                               const Rational& c2, const Rational& beta,
                                               unsigned r, unsigned s);

/// Full closed-form table for a linear H; throws if H is not of degree 1.
CoefficientTable linear_closed_form_table(const BivariatePolynomial& h, const Rational& beta, Box box);

struct QuadratureConfig {
  double c1 = 0.0;
  double c2 = 0.0;
  unsigned n1 = 512;
  unsigned n2 = 512;
  /// Largest phase change of H tolerated between neighbouring nodes.
  double max_phase_step = std::numbers::pi / 2;
  unsigned radial_steps = 4096;
};

struct QuadratureEntry {
  Complex value;
  Real error;  // |N-grid minus N/2-grid|
  /// mean |G H^-beta| on the torus times c1^-r c2^-s: the size the sum starts from.
  Real scale;
};

class QuadratureTable {
 public:
  QuadratureTable(Box box, std::vector<QuadratureEntry> entries)
      : box_(box), entries_(std::move(entries)) {}
  [[nodiscard]] Box box() const { return box_; }
  [[nodiscard]] const QuadratureEntry& at(unsigned r, unsigned s) const {
    return entries_.at(static_cast<std::size_t>(r) * (box_.s_max + 1) + s);
  }

 private:
  Box box_;
  std::vector<QuadratureEntry> entries_;
};

QuadratureTable quadrature_table(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                 double beta, Box box, const QuadratureConfig& cfg);
QuadratureEntry cauchy_quadrature(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                  double beta, unsigned r, unsigned s, const QuadratureConfig& cfg);

/// |quadrature - exact| / |exact|; for an exact zero, |quadrature| / scale.
Real relative_discrepancy(const QuadratureEntry& q, const Complex& exact);

/// CSV export: prefactor comment line, header, one row per entry (r-major),
/// LF endings. With a quadrature table, adds numeric columns and a trailing
/// max-discrepancy comment.
void write_table_csv(std::ostream& os, const CoefficientTable& table,
                     const QuadratureTable* quadrature = nullptr);

}  // namespace bivalg
