#include "bivalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace bivalg {

// --------------------------------------------------------- bivariate

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  add_term({0, 0}, constant);
}

BivariatePolynomial::BivariatePolynomial(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

BivariatePolynomial BivariatePolynomial::x() { return monomial(1, 0, 1); }
BivariatePolynomial BivariatePolynomial::y() { return monomial(0, 1, 1); }

BivariatePolynomial BivariatePolynomial::monomial(unsigned i, unsigned j, const Rational& c) {
  BivariatePolynomial p;
  p.add_term({i, j}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::from_triples(
    const std::vector<std::tuple<unsigned, unsigned, Rational>>& triples) {
  BivariatePolynomial p;
  for (const auto& [i, j, c] : triples) p.add_term({i, j}, c);
  return p;
}

void BivariatePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BivariatePolynomial::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.i == 0 && t.first.j == 0; });
}

Rational BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned BivariatePolynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::kX ? e.i : e.j);
  return d;
}

unsigned BivariatePolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
  return d;
}

Rational BivariatePolynomial::max_coefficient() const {
  Rational m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, Rational(abs(c)));
  return m;
}

BivariatePolynomial BivariatePolynomial::partial(Var v) const {
  BivariatePolynomial d;
  for (const auto& [e, c] : terms_) {
    const unsigned k = v == Var::kX ? e.i : e.j;
    if (k == 0) continue;
    const Exponent lowered = v == Var::kX ? Exponent{e.i - 1, e.j} : Exponent{e.i, e.j - 1};
    d.add_term(lowered, c * k);
  }
  return d;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial s;
  for (const auto& [e, c] : terms_) s.add_term({e.j, e.i}, c);
  return s;
}

namespace {

// Horner in x of Horner-in-y rows; rows are visited in ascending exponent order.
template <typename T, typename Convert>
T horner(const BivariatePolynomial::Terms& terms, const T& x, const T& y, Convert convert) {
  if (terms.empty()) return T(0);
  const unsigned dx = terms.rbegin()->first.i;
  std::vector<std::vector<std::pair<unsigned, const Rational*>>> rows(dx + 1);
  for (const auto& [e, c] : terms) rows[e.i].emplace_back(e.j, &c);
  T acc(0);
  for (unsigned i = dx + 1; i-- > 0;) {
    T row(0);
    if (!rows[i].empty()) {
      unsigned deg = rows[i].back().first;
      auto it = rows[i].rbegin();
      for (unsigned j = deg + 1; j-- > 0;) {
        row = row * y;
        if (it != rows[i].rend() && it->first == j) {
          row = row + convert(*it->second);
          ++it;
        }
      }
    }
    acc = acc * x + row;
  }
  return acc;
}

}  // namespace

Complex BivariatePolynomial::eval(const Complex& x, const Complex& y) const {
  Complex v = horner<Complex>(terms_, x, y, [](const Rational& c) { return Complex(c); });
  if (!v.finite()) throw Error(ErrorKind::kNumerical, "evaluation overflow");
  return v;
}

std::complex<double> BivariatePolynomial::eval(std::complex<double> x, std::complex<double> y) const {
  auto v = horner<std::complex<double>>(terms_, x, y, [](const Rational& c) {
    return std::complex<double>(c.convert_to<double>(), 0.0);
  });
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::kNumerical, "evaluation overflow");
  }
  return v;
}

Rational BivariatePolynomial::eval(const Rational& x, const Rational& y) const {
  return horner<Rational>(terms_, x, y, [](const Rational& c) { return c; });
}

Real BivariatePolynomial::eval_scale(const Complex& x, const Complex& y) const {
  const Real ax = abs(x);
  const Real ay = abs(y);
  Real s = 0;
  for (const auto& [e, c] : terms_) {
    s += abs(to_real(c)) * pow(ax, e.i) * pow(ay, e.j);
  }
  return s;
}

std::vector<Complex> BivariatePolynomial::specialize(Var v, const Complex& at) const {
  // v names the variable that stays free.
  const unsigned deg = degree(v);
  std::vector<Complex> out(is_zero() ? 0 : deg + 1);
  const unsigned other_deg = degree(v == Var::kX ? Var::kY : Var::kX);
  std::vector<Complex> powers(other_deg + 1);
  if (!powers.empty()) powers[0] = Complex(1);
  for (unsigned k = 1; k <= other_deg; ++k) powers[k] = powers[k - 1] * at;
  for (const auto& [e, c] : terms_) {
    const unsigned keep = v == Var::kX ? e.i : e.j;
    const unsigned fixed = v == Var::kX ? e.j : e.i;
    out[keep] += Complex(c) * powers[fixed];
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
  }
  return p;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && (e.i != 0 || e.j != 0);
    if (!unit) os << bivalg::to_string(mag);
    if (e.i != 0) os << (unit ? "" : "*") << "x" << (e.i > 1 ? "^" + std::to_string(e.i) : "");
    if (e.j != 0) {
      os << ((unit && e.i == 0) ? "" : "*") << "y" << (e.j > 1 ? "^" + std::to_string(e.j) : "");
    }
  }
  return os.str();
}

// -------------------------------------------------------- univariate

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex UnivariatePolynomial::eval(const Complex& x) const {
  Complex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Complex(*it);
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned>(k));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::kNumerical, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  if (a.degree() < b.degree()) return {UnivariatePolynomial(), a};
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + db] / b.coeffs_.back();
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs_[j];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << bivalg::to_string(coeffs_[k]) << ")";
    if (k > 0) os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = UnivariatePolynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const auto g = gcd(p, p.derivative());
  return UnivariatePolynomial::divmod(p, g).first.monic();
}

std::vector<UnivariatePolynomial> coefficients_in(const BivariatePolynomial& p, Var main) {
  const unsigned deg = p.degree(main);
  const Var other = main == Var::kX ? Var::kY : Var::kX;
  std::vector<std::vector<Rational>> raw(p.is_zero() ? 0 : deg + 1,
                                         std::vector<Rational>(p.degree(other) + 1));
  for (const auto& [e, c] : p.terms()) {
    const unsigned k = main == Var::kX ? e.i : e.j;
    const unsigned l = main == Var::kX ? e.j : e.i;
    raw[k][l] = c;
  }
  std::vector<UnivariatePolynomial> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

}  // namespace bivalg
