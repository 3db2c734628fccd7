#pragma once

// Scalar types shared by every module: exact rationals, a working-precision
// real, and a small complex type built on top of it.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "bivalg/error.hpp"

namespace bivalg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Significand width, in bits, used for every Real created afterwards.
/// The setting is process-wide; call it once before building any values.
void set_working_precision(unsigned bits);
unsigned working_precision();

inline constexpr unsigned kDefaultPrecisionBits = 128;

Real pi();
Real to_real(const Rational& q);
Real to_real(const Integer& z);
Rational pow(const Rational& q, unsigned n);

/// Parses "n", "-n/d" or a decimal such as "0.25" / "-1.5e-3" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Scientific notation with `digits` significant digits.
std::string format_sci(const Real& x, int digits = 17);

bool is_finite(const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rational& q) : re(to_real(q)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(int v) : re(v), im(0) {}                       // NOLINT(google-explicit-constructor)
  Complex(double r, double i) : re(r), im(i) {}

  static Complex polar(const Real& modulus, const Real& angle);

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  [[nodiscard]] Complex conj() const { return {re, -im}; }
  [[nodiscard]] std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
  [[nodiscard]] bool finite() const { return is_finite(re) && is_finite(im); }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // principal, in (-pi, pi]
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z); // principal root
Complex pow(const Complex& z, unsigned n);

/// Maps an angle into (-pi, pi].
Real principal_angle(const Real& a);

std::string format_complex(const Complex& z, int digits = 17);

/// A complex number held as (log |z|, arg z) so that values far outside the
/// floating range of doubles can be combined. `zero` marks exact zero.
struct LogComplex {
  Real log_modulus;
  Real argument;
  bool zero = false;

  [[nodiscard]] Complex value() const;
  [[nodiscard]] Real log10_modulus() const;
  [[nodiscard]] LogComplex operator*(const LogComplex& o) const;
  [[nodiscard]] LogComplex operator/(const LogComplex& o) const;
  static LogComplex from(const Complex& z);
};

/// Sum in log space, largest modulus factored out; terms are added in the given order.
LogComplex log_sum(const std::vector<LogComplex>& terms);

/// Gamma function of a real argument (Lanczos, g = 7, with reflection below 1/2).
double gamma_real(double b);

struct LogGamma {
  double log_abs;
  int sign;
};
/// log|Gamma(b)| and the sign of Gamma(b); usable where Gamma itself overflows.
LogGamma log_gamma_real(double b);

}  // namespace bivalg
