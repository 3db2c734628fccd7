#include <algorithm>

#include "bivalg/critical.hpp"
#include "bivalg/resultant.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bivalg;
namespace fx = bivalg::fixtures;

namespace {

bool close(const Complex& a, const Complex& b, double tol) {
  return abs(a - b) <= Real(tol) * std::max(Real(1), abs(b));
}

bool contains(const std::vector<CriticalPoint>& pts, const Complex& p, const Complex& q, double tol = 1e-12) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const CriticalPoint& c) { return close(c.p, p, tol) && close(c.q, q, tol); });
}

CriticalPoint point(const Complex& p, const Complex& q) {
  CriticalPoint c;
  c.p = p;
  c.q = q;
  c.smooth = true;
  return c;
}

}  // namespace

TEST_CASE("Direction") {
  CHECK(Direction::parse("4:2") == Direction(2, 1));
  CHECK(Direction(6, 9).to_string() == "2:3");
  CHECK(Direction(2, 1).inverted() == Direction(1, 2));
  CHECK_THROWS_AS(Direction::parse("0:1"), Error);
  CHECK_THROWS_AS(Direction::parse("1:0"), Error);
  CHECK_THROWS_AS(Direction::parse("two"), Error);
}

TEST_CASE("critical_system") {
  SUBCASE("1 - x - y, direction 1:1") {
    const auto [f1, f2] = critical_system(fx::multinomial_h(), Direction(1, 1));
    CHECK(f1 == fx::multinomial_h());
    CHECK(f2 == fx::x() - fx::y());
  }
  SUBCASE("coloring example: the x-eliminant carries the cubic factor") {
    const auto [f1, f2] = critical_system(fx::coloring_h(), Direction(2, 1));
    const auto res = resultant(f1, f2, Var::kY);
    // 1 - 2 mu + mu^2 + (-4 - 2 mu^2 + 6 mu) x + (2 mu^2 - 4 mu + 3) x^2 + 2 x^3 at mu = 1/2
    const Rational mu(1, 2);
    const UnivariatePolynomial cubic(
        {1 - 2 * mu + mu * mu, -4 - 2 * mu * mu + 6 * mu, 2 * mu * mu - 4 * mu + 3, Rational(2)});
    const auto [quot, rem] = UnivariatePolynomial::divmod(res, cubic);
    CHECK(rem.is_zero());
    CHECK(quot.degree() >= 0);
  }
  SUBCASE("swapping x and y with the inverted direction swaps the roles") {
    const auto h = fx::one() - fx::x() - fx::y() - Rational(1, 3) * fx::x() * fx::y();
    const auto [a1, a2] = critical_system(h, Direction(3, 1));
    const auto [b1, b2] = critical_system(h.swapped(), Direction(1, 3));
    CHECK(b1 == a1.swapped());
    CHECK(b2 == Rational(-1) * a2.swapped());
  }
  SUBCASE("constant H") {
    CHECK_THROWS_WITH(critical_system(BivariatePolynomial(Rational(2)), Direction(1, 1)), "H must be nonconstant");
  }
}

TEST_CASE("solve_critical") {
  SUBCASE("1 - x - y has the single solution (1/2, 1/2)") {
    const auto pts = solve_critical(fx::multinomial_h(), Direction(1, 1));
    REQUIRE(pts.size() == 1);
    CHECK(close(pts[0].p, Complex(Real(0.5)), 1e-30));
    CHECK(close(pts[0].q, Complex(Real(0.5)), 1e-30));
    CHECK(pts[0].smooth);
  }
  SUBCASE("coloring example: three points including (1/4, 1)") {
    const auto pts = solve_critical(fx::coloring_h(), Direction(2, 1));
    REQUIRE(pts.size() == 3);
    const Real s3 = sqrt(Real(3));
    CHECK(contains(pts, Complex(Rational(1, 4)), Complex(1)));
    CHECK(contains(pts, Complex((s3 - 1) / 2), Complex(-(2 + s3))));
    CHECK(contains(pts, Complex(-(s3 + 1) / 2), Complex(-(2 - s3))));
    for (const auto& p : pts) {
      CHECK(p.residual_h < Real(1e-12));
      CHECK(p.residual_direction < Real(1e-12));
      CHECK(p.smooth);
    }
  }
  SUBCASE("the x-eliminant has exactly three distinct roots") {
    const auto [f1, f2] = critical_system(fx::coloring_h(), Direction(2, 1));
    auto sq = squarefree_part(resultant(f1, f2, Var::kY));
    // 8 x^4 (4x - 1)(2x^2 + 2x - 1): the root x = 0 gives no finite y.
    CHECK(sq.degree() == 4);
  }
  SUBCASE("eliminating x instead of y gives the same set") {
    for (const auto& [h, dir] : {std::pair{fx::coloring_h(), Direction(2, 1)},
                                 std::pair{fx::multinomial_h(), Direction(3, 2)},
                                 std::pair{fx::winding_h(), Direction(1, 1)}}) {
      SolveOptions opts;
      const auto a = solve_critical(h, dir, opts);
      opts.eliminate = Var::kX;
      const auto b = solve_critical(h, dir, opts);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(close(a[k].p, b[k].p, 1e-10));
        CHECK(close(a[k].q, b[k].q, 1e-10));
      }
    }
  }
  SUBCASE("scaling H changes nothing") {
    const auto h = fx::coloring_h();
    const auto a = analyze_critical(h, Direction(2, 1));
    const auto b = analyze_critical(Rational(-7, 3) * h, Direction(2, 1));
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t k = 0; k < a.points.size(); ++k) {
      CHECK(close(a.points[k].p, b.points[k].p, 1e-25));
      CHECK(close(a.points[k].q, b.points[k].q, 1e-25));
      CHECK(a.points[k].smooth == b.points[k].smooth);
      CHECK(a.points[k].minimality == b.points[k].minimality);
    }
  }
  SUBCASE("non-isolated critical set") {
    const auto h = fx::multinomial_h() * fx::multinomial_h();
    CHECK_THROWS_WITH(solve_critical(h, Direction(1, 1)), "non-isolated critical set");
  }
}

TEST_CASE("is_smooth") {
  CHECK(is_smooth(fx::multinomial_h(), Complex(Real(0.5)), Complex(Real(0.5))));
  CHECK(is_smooth(fx::coloring_h(), Complex(Real(0.25)), Complex(1)));
  const auto sq = fx::multinomial_h() * fx::multinomial_h();
  CHECK_FALSE(is_smooth(sq, Complex(Real(0.5)), Complex(Real(0.5))));
}

TEST_CASE("chi identity at every smooth critical point") {
  for (const auto& [h, dir] : {std::pair{fx::coloring_h(), Direction(2, 1)},
                               std::pair{fx::coloring_h(), Direction(3, 1)},
                               std::pair{fx::multinomial_h(), Direction(5, 2)},
                               std::pair{fx::winding_h(), Direction(1, 1)}}) {
    for (const auto& pt : solve_critical(h, dir)) {
      if (!pt.smooth) continue;
      const Complex hx = h.partial(Var::kX).eval(pt.p, pt.q);
      const Complex hy = h.partial(Var::kY).eval(pt.p, pt.q);
      const Complex chi1 = hy / hx;
      const Complex expected = pt.p / (Complex(dir.lambda()) * pt.q);
      CHECK(abs(chi1 - expected) < Real(1e-10) * abs(chi1));
    }
  }
}

TEST_CASE("minimality_probe") {
  SUBCASE("1 - x - y") {
    const auto a = analyze_critical(fx::multinomial_h(), Direction(1, 1));
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].minimality == Minimality::kProbablyStrictlyMinimal);
    CHECK(a.points[0].min_margin > Real(1e-6));
  }
  SUBCASE("coloring example") {
    const auto a = analyze_critical(fx::coloring_h(), Direction(2, 1));
    for (const auto& pt : a.points) {
      const bool main = close(pt.p, Complex(Real(0.25)), 1e-20);
      CHECK(pt.minimality == (main ? Minimality::kProbablyStrictlyMinimal : Minimality::kViolated));
      if (!main) {
        REQUIRE(pt.witness.has_value());
        CHECK(abs(fx::coloring_h().eval(pt.witness->x, pt.witness->y)) < Real(1e-20));
      }
    }
  }
  SUBCASE("(1 - 2x)(1 - 2y) with candidate (1/2, 1)") {
    const auto h = fx::product_h();
    const auto pt = point(Complex(Real(0.5)), Complex(1));
    const auto v = minimality_probe(h, pt, {pt});
    CHECK(v.verdict == Minimality::kViolated);
    REQUIRE(v.witness.has_value());
    const auto& w = *v.witness;
    // The witness lies on the sheet y = 1/2 strictly inside the polydisk.
    CHECK(abs(h.eval(w.x, w.y)) < Real(1e-25));
    CHECK(abs(w.x) <= Real(0.5));
    CHECK(abs(w.y) <= Real(1));
    CHECK(abs(w.y - Complex(Real(0.5))) < Real(1e-25));
    CHECK(w.margin < 0);
  }
  SUBCASE("small grids are rejected") {
    const auto pt = point(Complex(Real(0.5)), Complex(Real(0.5)));
    CHECK_THROWS_AS(minimality_probe(fx::multinomial_h(), pt, {pt}, ProbeGrid{128, 32}), Error);
  }
  SUBCASE("a smaller zero on the same ray is found") {
    // On 1 - x - y the point (0.7, 0.3) sits inside the polydisk of (0.9, 0.3).
    const auto pt = point(Complex(Real(0.9)), Complex(Real(0.3)));
    const auto v = minimality_probe(fx::multinomial_h(), pt, {pt});
    CHECK(v.verdict == Minimality::kViolated);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->margin < Real(-0.2));
  }
}

TEST_CASE("group_by_torus") {
  const Direction dir(1, 1);
  SUBCASE("single point") {
    const auto classes = group_by_torus({point(Complex(Real(0.5)), Complex(Real(0.5)))}, dir);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].dominant);
  }
  SUBCASE("conjugate pair") {
    const Complex p(Real(0.3), Real(0.4));
    const Complex q(Real(0.6), Real(-0.1));
    const auto classes = group_by_torus({point(p, q), point(p.conj(), q.conj())}, dir);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 2);
  }
  SUBCASE("distinct moduli: nearer class dominates") {
    const auto classes = group_by_torus(
        {point(Complex(Real(0.9)), Complex(Real(0.5))), point(Complex(Real(0.3)), Complex(Real(0.5)))}, dir);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].dominant);
    CHECK(classes[0].members == std::vector<std::size_t>{1});
    CHECK_FALSE(classes[1].dominant);
  }
}
