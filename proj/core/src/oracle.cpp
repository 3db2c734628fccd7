#include "bivalg/oracle.hpp"

#include <algorithm>
#include <complex>
#include <ostream>
#include <thread>

namespace bivalg {

namespace {

std::optional<Integer> exact_root(const Integer& v, unsigned long n) {
  if (v < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = exact_root(Integer(-v), n);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer out;
  if (mpz_root(out.backend().data(), v.backend().data(), n) == 0) return std::nullopt;
  return out;
}

}  // namespace

// ---------------------------------------------------------- SymbolicPower

std::optional<Rational> SymbolicPower::exact() const {
  if (exponent == 0 || base == 1) return Rational(1);
  if (base == 0) return exponent > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  const Integer& a = numerator(exponent);
  const Integer& b = denominator(exponent);
  if (b > 1000000 || abs(a) > 1000000) return std::nullopt;
  const auto n = b.convert_to<unsigned long>();
  auto num = exact_root(numerator(base), n);
  auto den = exact_root(denominator(base), n);
  if (!num || !den) return std::nullopt;
  Rational root(*num, *den);
  const auto k = abs(a).convert_to<unsigned>();
  Rational p = pow(root, k);
  return a < 0 ? Rational(1 / p) : p;
}

LogComplex SymbolicPower::log_value() const {
  if (base == 0) {
    if (exponent <= 0) throw Error(ErrorKind::kNumerical, "zero base with nonpositive exponent");
    return {Real(0), Real(0), true};
  }
  const Real e = to_real(exponent);
  const Real angle = base < 0 ? pi() : Real(0);
  return {e * log(abs(to_real(base))), principal_angle(e * angle), false};
}

std::string SymbolicPower::to_string() const {
  return "(" + bivalg::to_string(base) + ")^(" + bivalg::to_string(exponent) + ")";
}

// ------------------------------------------------------- CoefficientTable

LogComplex CoefficientTable::log_entry(unsigned r, unsigned s) const {
  const Rational& c = series.at(r, s);
  if (c == 0) return {Real(0), Real(0), true};
  LogComplex entry{log(abs(to_real(numerator(c)))) - log(to_real(denominator(c))),
                   c < 0 ? pi() : Real(0), false};
  return entry * prefactor.log_value();
}

Complex CoefficientTable::value(unsigned r, unsigned s) const {
  if (auto p = prefactor.exact()) return Complex(Rational(series.at(r, s) * *p));
  return log_entry(r, s).value();
}

// ------------------------------------------------------------- recurrence

namespace {

struct RecurrenceTerm {
  unsigned i;
  unsigned j;
  Rational h;  // normalized coefficient h_ij / h_00
};

Rational x_step(const std::vector<RecurrenceTerm>& terms, const Rational& beta,
                const TruncatedSeries& f, unsigned r, unsigned s) {
  // r f_{r,s} = -sum h_ij [(r - i) + beta i] f_{r-i, s-j}
  Rational acc = 0;
  for (const auto& t : terms) {
    if (t.i > r || t.j > s) continue;
    const Rational& prev = f.at(r - t.i, s - t.j);
    if (prev == 0) continue;
    acc += t.h * (Rational(r - t.i) + beta * t.i) * prev;
  }
  return -acc / r;
}

Rational y_step(const std::vector<RecurrenceTerm>& terms, const Rational& beta,
                const TruncatedSeries& f, unsigned s) {
  // s f_{0,s} = -sum_{j>=1} h_0j [(s - j) + beta j] f_{0, s-j}
  Rational acc = 0;
  for (const auto& t : terms) {
    if (t.i != 0 || t.j > s) continue;
    const Rational& prev = f.at(0, s - t.j);
    if (prev == 0) continue;
    acc += t.h * (Rational(s - t.j) + beta * t.j) * prev;
  }
  return -acc / s;
}

}  // namespace

CoefficientTable coeff_recurrence(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                  const Rational& beta, Box box, unsigned threads) {
  const Rational h00 = h.constant_term();
  if (h00 == 0) throw Error(ErrorKind::kInvalidInput, "singular at origin");

  std::vector<RecurrenceTerm> terms;
  for (const auto& [e, c] : h.terms()) {
    if (e.i == 0 && e.j == 0) continue;
    terms.push_back({e.i, e.j, c / h00});
  }

  TruncatedSeries f(box);
  f.at(0, 0) = 1;
  auto fill = [&](unsigned r, unsigned s) {
    f.at(r, s) = r == 0 ? y_step(terms, beta, f, s) : x_step(terms, beta, f, r, s);
  };

  const unsigned last = box.r_max + box.s_max;
  for (unsigned d = 1; d <= last; ++d) {
    const unsigned r_lo = d > box.s_max ? d - box.s_max : 0;
    const unsigned r_hi = std::min(d, box.r_max);
    const unsigned count = r_hi - r_lo + 1;
    if (threads <= 1 || count < 2 * threads) {
      for (unsigned r = r_lo; r <= r_hi; ++r) fill(r, d - r);
      continue;
    }
    // Each worker writes disjoint cells and reads only earlier diagonals.
    std::vector<std::jthread> pool;
    const unsigned chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const unsigned a = r_lo + w * chunk;
      const unsigned b = std::min(r_hi + 1, a + chunk);
      if (a >= b) break;
      pool.emplace_back([&, a, b] {
        for (unsigned r = a; r < b; ++r) fill(r, d - r);
      });
    }
  }

  CoefficientTable table;
  table.beta = beta;
  table.source = TableSource::kRecurrence;
  table.prefactor = {h00, Rational(-beta)};
  const bool unit_g = g.is_constant() && g.constant_term() == 1;
  table.series = unit_g ? std::move(f) : series_mul(TruncatedSeries::from_polynomial(g, box), f);
  return table;
}

// ------------------------------------------------------------ closed form

namespace {

Rational generalized_binomial(const Rational& top, unsigned n) {
  Rational c = 1;
  for (unsigned k = 0; k < n; ++k) c *= (top - k) / Rational(k + 1);
  return c;
}

}  // namespace

ClosedFormCoefficient coeff_linear_closed_form(const Rational& c0, const Rational& c1,
                                               const Rational& c2, const Rational& beta,
                                               unsigned r, unsigned s) {
  if (c0 == 0) throw Error(ErrorKind::kInvalidInput, "singular at origin");
  const unsigned n = r + s;
  Rational part = generalized_binomial(-beta, n) * generalized_binomial(Rational(n), r);
  part *= pow(c1, r) * pow(c2, s);
  part /= pow(c0, n);
  return {part, SymbolicPower{c0, Rational(-beta)}};
}

CoefficientTable linear_closed_form_table(const BivariatePolynomial& h, const Rational& beta, Box box) {
  if (h.total_degree() > 1) throw Error(ErrorKind::kInvalidInput, "closed form needs a linear H");
  CoefficientTable table;
  table.beta = beta;
  table.source = TableSource::kClosedForm;
  table.series = TruncatedSeries(box);
  const Rational c0 = h.coefficient(0, 0);
  const Rational c1 = h.coefficient(1, 0);
  const Rational c2 = h.coefficient(0, 1);
  for (unsigned r = 0; r <= box.r_max; ++r) {
    for (unsigned s = 0; s <= box.s_max; ++s) {
      auto cf = coeff_linear_closed_form(c0, c1, c2, beta, r, s);
      table.series.at(r, s) = cf.rational_part;
      table.prefactor = cf.prefactor;
    }
  }
  return table;
}

// ------------------------------------------------------------- quadrature

namespace {

using cd = std::complex<double>;

cd pairwise_sum(const cd* v, std::size_t n) {
  if (n <= 8) {
    cd s = 0;
    for (std::size_t k = 0; k < n; ++k) s += v[k];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

bool power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

double phase_step(cd from, cd to) { return std::arg(to / from); }

struct TorusSamples {
  unsigned n1;
  unsigned n2;
  std::vector<cd> values;  // G H^-beta, row j = angle index of x
  double mean_abs;
};

TorusSamples sample_torus(const BivariatePolynomial& h, const BivariatePolynomial& g, double beta,
                          const QuadratureConfig& cfg) {
  if (!(cfg.c1 > 0) || !(cfg.c2 > 0)) {
    throw Error(ErrorKind::kConfiguration, "quadrature radii must be positive");
  }
  if (cfg.n1 < 64 || cfg.n2 < 64 || !power_of_two(cfg.n1) || !power_of_two(cfg.n2)) {
    throw Error(ErrorKind::kConfiguration, "quadrature grid must be a power of two >= 64");
  }
  const double h00 = h.constant_term().convert_to<double>();
  if (h00 == 0) throw Error(ErrorKind::kInvalidInput, "singular at origin");

  auto fail = [] {
    throw Error(ErrorKind::kNumerical, "branch tracking failed; refine grid");
  };

  // Anchor: continue arg H radially from the origin to (c1, c2).
  double anchor = std::arg(cd(h00, 0));
  cd prev(h00, 0);
  for (unsigned k = 1; k <= cfg.radial_steps; ++k) {
    const double t = static_cast<double>(k) / cfg.radial_steps;
    const cd cur = h.eval(cd(t * cfg.c1, 0), cd(t * cfg.c2, 0));
    if (cur == cd(0)) fail();
    const double step = phase_step(prev, cur);
    if (std::fabs(step) > cfg.max_phase_step) fail();
    anchor += step;
    prev = cur;
  }

  const double two_pi = 2 * std::numbers::pi;
  std::vector<cd> xs(cfg.n1);
  std::vector<cd> ys(cfg.n2);
  for (unsigned j = 0; j < cfg.n1; ++j) xs[j] = std::polar(cfg.c1, two_pi * j / cfg.n1);
  for (unsigned k = 0; k < cfg.n2; ++k) ys[k] = std::polar(cfg.c2, two_pi * k / cfg.n2);

  // Phase along the x-circle at y = c2, then along each y-circle.
  std::vector<double> row_start(cfg.n1);
  cd last = h.eval(xs[0], ys[0]);
  double a = anchor;
  for (unsigned j = 0; j < cfg.n1; ++j) {
    const cd cur = h.eval(xs[j], ys[0]);
    if (cur == cd(0)) fail();
    const double step = phase_step(last, cur);
    if (std::fabs(step) > cfg.max_phase_step) fail();
    a += step;
    row_start[j] = a;
    last = cur;
  }

  TorusSamples out{cfg.n1, cfg.n2, std::vector<cd>(static_cast<std::size_t>(cfg.n1) * cfg.n2), 0};
  std::vector<double> mags(out.values.size());
  for (unsigned j = 0; j < cfg.n1; ++j) {
    double phase = row_start[j];
    cd before = h.eval(xs[j], ys[0]);
    for (unsigned k = 0; k < cfg.n2; ++k) {
      const cd hv = h.eval(xs[j], ys[k]);
      if (hv == cd(0)) fail();
      if (k > 0) {
        const double step = phase_step(before, hv);
        if (std::fabs(step) > cfg.max_phase_step) fail();
        phase += step;
      }
      before = hv;
      const cd power = std::exp(-beta * cd(std::log(std::abs(hv)), phase));
      const cd v = g.eval(xs[j], ys[k]) * power;
      out.values[static_cast<std::size_t>(j) * cfg.n2 + k] = v;
      mags[static_cast<std::size_t>(j) * cfg.n2 + k] = std::abs(v);
    }
  }
  double total = 0;
  {
    std::vector<cd> tmp(mags.begin(), mags.end());
    total = pairwise_sum(tmp.data(), tmp.size()).real();
  }
  out.mean_abs = total / static_cast<double>(mags.size());
  return out;
}

// Mean of samples times exp(-2 pi i (r j/n1 + s k/n2)) over the grid taken
// with the given stride; returns one value per (r, s) in the box.
std::vector<cd> trapezoid(const TorusSamples& t, Box box, unsigned stride) {
  const double two_pi = 2 * std::numbers::pi;
  const unsigned m1 = t.n1 / stride;
  const unsigned m2 = t.n2 / stride;
  std::vector<cd> tw1(m1);
  std::vector<cd> tw2(m2);
  for (unsigned k = 0; k < m1; ++k) tw1[k] = std::polar(1.0, -two_pi * k / m1);
  for (unsigned k = 0; k < m2; ++k) tw2[k] = std::polar(1.0, -two_pi * k / m2);

  // inner[s][j] = sum_k v[j,k] w2^{s k}
  std::vector<std::vector<cd>> inner(box.s_max + 1, std::vector<cd>(m1));
  std::vector<cd> buf(m2);
  for (unsigned j = 0; j < m1; ++j) {
    const cd* row = &t.values[static_cast<std::size_t>(j * stride) * t.n2];
    for (unsigned s = 0; s <= box.s_max; ++s) {
      for (unsigned k = 0; k < m2; ++k) {
        buf[k] = row[k * stride] * tw2[(static_cast<std::size_t>(s) * k) % m2];
      }
      inner[s][j] = pairwise_sum(buf.data(), m2);
    }
  }
  std::vector<cd> out(static_cast<std::size_t>(box.r_max + 1) * (box.s_max + 1));
  std::vector<cd> col(m1);
  const double norm = 1.0 / (static_cast<double>(m1) * m2);
  for (unsigned r = 0; r <= box.r_max; ++r) {
    for (unsigned s = 0; s <= box.s_max; ++s) {
      for (unsigned j = 0; j < m1; ++j) col[j] = inner[s][j] * tw1[(static_cast<std::size_t>(r) * j) % m1];
      out[static_cast<std::size_t>(r) * (box.s_max + 1) + s] = pairwise_sum(col.data(), m1) * norm;
    }
  }
  return out;
}

}  // namespace

QuadratureTable quadrature_table(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                 double beta, Box box, const QuadratureConfig& cfg) {
  const TorusSamples samples = sample_torus(h, g, beta, cfg);
  const auto full = trapezoid(samples, box, 1);
  const auto half = trapezoid(samples, box, 2);
  const Real log_c1 = log(Real(cfg.c1));
  const Real log_c2 = log(Real(cfg.c2));
  std::vector<QuadratureEntry> entries;
  entries.reserve(full.size());
  for (unsigned r = 0; r <= box.r_max; ++r) {
    for (unsigned s = 0; s <= box.s_max; ++s) {
      const std::size_t idx = static_cast<std::size_t>(r) * (box.s_max + 1) + s;
      const Real scale = exp(-(log_c1 * r) - log_c2 * s);
      const Complex v(Real(full[idx].real()), Real(full[idx].imag()));
      entries.push_back({v * Complex(scale), Real(std::abs(full[idx] - half[idx])) * scale,
                         Real(samples.mean_abs) * scale});
    }
  }
  return {box, std::move(entries)};
}

QuadratureEntry cauchy_quadrature(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                  double beta, unsigned r, unsigned s, const QuadratureConfig& cfg) {
  const TorusSamples samples = sample_torus(h, g, beta, cfg);
  // Only row r and column s are needed; reuse the table path on a box that
  // holds them.
  const Box box{r, s};
  const auto full = trapezoid(samples, box, 1);
  const auto half = trapezoid(samples, box, 2);
  const std::size_t idx = full.size() - 1;
  const Real scale = exp(-(log(Real(cfg.c1)) * r) - log(Real(cfg.c2)) * s);
  const Complex v(Real(full[idx].real()), Real(full[idx].imag()));
  return {v * Complex(scale), Real(std::abs(full[idx] - half[idx])) * scale,
          Real(samples.mean_abs) * scale};
}

Real relative_discrepancy(const QuadratureEntry& q, const Complex& exact) {
  const Real diff = abs(q.value - exact);
  const Real mag = abs(exact);
  if (mag == 0) return diff / q.scale;
  return diff / mag;
}

// -------------------------------------------------------------------- CSV

namespace {

std::string format_value(const Complex& z) {
  if (z.im == 0) return format_sci(z.re);
  return format_complex(z);
}

}  // namespace

void write_table_csv(std::ostream& os, const CoefficientTable& table, const QuadratureTable* quadrature) {
  const Box box = table.series.box();
  if (quadrature && !(quadrature->box() == box)) {
    throw Error(ErrorKind::kConfiguration, "quadrature box differs from table box");
  }
  os << "# prefactor: " << table.prefactor.to_string() << "\n";
  os << "r,s,numerator,denominator,value";
  if (quadrature) os << ",quadrature,quadrature_error,relative_discrepancy";
  os << "\n";
  Real worst = 0;
  for (unsigned r = 0; r <= box.r_max; ++r) {
    for (unsigned s = 0; s <= box.s_max; ++s) {
      const Rational& c = table.series.at(r, s);
      const Complex exact = table.value(r, s);
      os << r << "," << s << "," << numerator(c).str() << "," << denominator(c).str() << ","
         << format_value(exact);
      if (quadrature) {
        const auto& q = quadrature->at(r, s);
        const Real d = relative_discrepancy(q, exact);
        worst = std::max(worst, d);
        os << "," << format_value(q.value) << "," << format_sci(q.error) << "," << format_sci(d);
      }
      os << "\n";
    }
  }
  if (quadrature) os << "# max_relative_discrepancy: " << format_sci(worst) << "\n";
}

}  // namespace bivalg
