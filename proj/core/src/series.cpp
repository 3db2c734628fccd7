#include "bivalg/series.hpp"

#include <string>

namespace bivalg {

TruncatedSeries::TruncatedSeries(Box box)
    : box_(box), coeffs_(static_cast<std::size_t>(box.r_max + 1) * (box.s_max + 1)) {}

TruncatedSeries TruncatedSeries::identity(Box box) {
  TruncatedSeries t(box);
  t.at(0, 0) = 1;
  return t;
}

TruncatedSeries TruncatedSeries::from_polynomial(const BivariatePolynomial& p, Box box) {
  TruncatedSeries t(box);
  for (const auto& [e, c] : p.terms()) {
    if (e.i <= box.r_max && e.j <= box.s_max) t.at(e.i, e.j) = c;
  }
  return t;
}

std::size_t TruncatedSeries::index(unsigned r, unsigned s) const {
  if (r > box_.r_max || s > box_.s_max) {
    throw Error(ErrorKind::kConfiguration, "index (" + std::to_string(r) + "," + std::to_string(s) +
                                               ") outside truncation box");
  }
  return static_cast<std::size_t>(r) * (box_.s_max + 1) + s;
}

const Rational& TruncatedSeries::at(unsigned r, unsigned s) const { return coeffs_[index(r, s)]; }
Rational& TruncatedSeries::at(unsigned r, unsigned s) { return coeffs_[index(r, s)]; }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.box() == b.box())) throw Error(ErrorKind::kConfiguration, "series box mismatch");
  const Box box = a.box();
  TruncatedSeries out(box);
  for (unsigned i = 0; i <= box.r_max; ++i) {
    for (unsigned j = 0; j <= box.s_max; ++j) {
      const Rational& ca = a.at(i, j);
      if (ca == 0) continue;
      for (unsigned k = 0; i + k <= box.r_max; ++k) {
        for (unsigned l = 0; j + l <= box.s_max; ++l) {
          const Rational& cb = b.at(k, l);
          if (cb != 0) out.at(i + k, j + l) += ca * cb;
        }
      }
    }
  }
  return out;
}

}  // namespace bivalg
