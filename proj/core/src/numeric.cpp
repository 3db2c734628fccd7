#include "bivalg/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ios>
#include <numbers>
#include <regex>

#include <boost/math/constants/constants.hpp>

namespace bivalg {

namespace {

unsigned g_precision_bits = kDefaultPrecisionBits;

unsigned digits10_for_bits(unsigned bits) {
  const auto d = static_cast<unsigned>(std::floor(bits * std::log10(2.0)));
  return std::max(16u, d);
}

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(digits10_for_bits(kDefaultPrecisionBits)); }
} const g_precision_init;

}  // namespace

void set_working_precision(unsigned bits) {
  if (bits < 53) throw Error(ErrorKind::kConfiguration, "precision must be at least 53 bits");
  g_precision_bits = bits;
  Real::default_precision(digits10_for_bits(bits));
}

unsigned working_precision() { return g_precision_bits; }

Real pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Rational& q) { return Real(q); }
Real to_real(const Integer& z) { return Real(z); }

namespace {

// Boost reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string digits) {
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.erase(0, 1);
  }
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Integer z(digits);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$)");
  static const std::regex kDecimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(raw, m, kFraction)) {
    const Integer num = decimal_integer(m[1].str());
    const Integer den = decimal_integer(m[2].str());
    if (den == 0) throw Error(ErrorKind::kInvalidInput, "zero denominator in '" + raw + "'");
    return Rational(num, den);
  }
  if (std::regex_match(raw, m, kDecimal)) {
    const std::string whole = m[2].str();
    const std::string frac = m[3].matched ? m[3].str() : std::string();
    if (whole.empty() && frac.empty()) {
      throw Error(ErrorKind::kInvalidInput, "not a number: '" + raw + "'");
    }
    const Integer digits = decimal_integer(whole + frac);
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(frac.size());
    if (std::labs(exponent) > 100000) {
      throw Error(ErrorKind::kInvalidInput, "exponent out of range in '" + raw + "'");
    }
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
    return m[1].str() == "-" ? Rational(-q) : q;
  }
  throw Error(ErrorKind::kInvalidInput, "not a rational number: '" + raw + "'");
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_sci(const Real& x, int digits) {
  return x.str(std::max(1, digits - 1), std::ios_base::scientific);
}

bool is_finite(const Real& x) { return boost::multiprecision::isfinite(x); }

// ---------------------------------------------------------------- Complex

Complex Complex::polar(const Real& modulus, const Real& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw Error(ErrorKind::kNumerical, "complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) {
  if (z.re == 0 && z.im == 0) throw Error(ErrorKind::kNumerical, "logarithm of zero");
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return {};
  return Complex::polar(sqrt(abs(z)), arg(z) / 2);
}

Rational pow(const Rational& q, unsigned n) {
  return Rational(boost::multiprecision::pow(numerator(q), n), boost::multiprecision::pow(denominator(q), n));
}

Complex pow(const Complex& z, unsigned n) {
  Complex result(1);
  Complex base = z;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n != 0) base *= base;
  }
  return result;
}

Real principal_angle(const Real& a) {
  const Real two_pi = 2 * pi();
  Real r = a - two_pi * round(a / two_pi);
  if (r <= -pi()) r += two_pi;
  if (r > pi()) r -= two_pi;
  return r;
}

std::string format_complex(const Complex& z, int digits) {
  std::string out = format_sci(z.re, digits);
  out += z.im < 0 ? "-" : "+";
  out += format_sci(boost::multiprecision::abs(z.im), digits);
  out += "i";
  return out;
}

// ------------------------------------------------------------- LogComplex

Complex LogComplex::value() const {
  if (zero) return {};
  return Complex::polar(exp(log_modulus), argument);
}

Real LogComplex::log10_modulus() const { return log_modulus / log(Real(10)); }

LogComplex LogComplex::operator*(const LogComplex& o) const {
  if (zero || o.zero) return {Real(0), Real(0), true};
  return {log_modulus + o.log_modulus, principal_angle(argument + o.argument), false};
}

LogComplex LogComplex::operator/(const LogComplex& o) const {
  if (o.zero) throw Error(ErrorKind::kNumerical, "division by zero in log space");
  if (zero) return *this;
  return {log_modulus - o.log_modulus, principal_angle(argument - o.argument), false};
}

LogComplex LogComplex::from(const Complex& z) {
  if (z.re == 0 && z.im == 0) return {Real(0), Real(0), true};
  return {log(abs(z)), arg(z), false};
}

LogComplex log_sum(const std::vector<LogComplex>& terms) {
  bool any = false;
  Real top;
  for (const auto& t : terms) {
    if (t.zero) continue;
    if (!any || t.log_modulus > top) top = t.log_modulus;
    any = true;
  }
  if (!any) return {Real(0), Real(0), true};
  Complex acc;
  for (const auto& t : terms) {
    if (t.zero) continue;
    acc += Complex::polar(exp(t.log_modulus - top), t.argument);
  }
  // Cancellation down to rounding level counts as an exact zero.
  const Real floor = ldexp(Real(terms.size()), -static_cast<int>(working_precision()) + 4);
  if (abs(acc) <= floor) return {Real(0), Real(0), true};
  LogComplex s = LogComplex::from(acc);
  if (s.zero) return s;
  s.log_modulus += top;
  return s;
}

// ------------------------------------------------------------------ Gamma

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(double b) {
  if (!std::isfinite(b)) throw Error(ErrorKind::kInvalidInput, "gamma of non-finite argument");
  if (b <= 0 && b == std::floor(b)) throw Error(ErrorKind::kInvalidInput, "gamma pole");
}

// log Gamma(b) for b >= 1/2.
double lanczos_log_gamma(double b) {
  const double z = b - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

LogGamma log_gamma_real(double b) {
  check_pole(b);
  if (b < 0.5) {
    // Gamma(b) Gamma(1-b) = pi / sin(pi b)
    const double s = std::sin(std::numbers::pi * b);
    return {std::log(std::numbers::pi) - std::log(std::fabs(s)) - lanczos_log_gamma(1.0 - b),
            s < 0 ? -1 : 1};
  }
  return {lanczos_log_gamma(b), 1};
}

double gamma_real(double b) {
  const LogGamma lg = log_gamma_real(b);
  const double v = lg.sign * std::exp(lg.log_abs);
  if (!std::isfinite(v)) throw Error(ErrorKind::kNumerical, "gamma overflow");
  return v;
}

}  // namespace bivalg
