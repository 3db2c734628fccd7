#include "bivalg/critical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <numeric>
#include <regex>

#include "bivalg/resultant.hpp"

namespace bivalg {

// -------------------------------------------------------------- Direction

Direction::Direction(unsigned r, unsigned s) {
  if (r == 0 || s == 0) {
    throw Error(ErrorKind::kInvalidInput, "direction components must be positive (lambda in (0, inf))");
  }
  const unsigned g = std::gcd(r, s);
  r0 = r / g;
  s0 = s / g;
}

Direction Direction::parse(const std::string& text) {
  static const std::regex kPattern(R"(^\s*(\d+)\s*:\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw Error(ErrorKind::kInvalidInput, "direction must look like \"r0:s0\", got \"" + text + "\"");
  }
  return {static_cast<unsigned>(std::stoul(m[1].str())), static_cast<unsigned>(std::stoul(m[2].str()))};
}

std::string Direction::to_string() const { return std::to_string(r0) + ":" + std::to_string(s0); }

std::string to_string(Minimality m) {
  switch (m) {
    case Minimality::kNotProbed: return "not_probed";
    case Minimality::kProbablyStrictlyMinimal: return "probably_strictly_minimal";
    case Minimality::kViolated: return "violated";
    case Minimality::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

// ----------------------------------------------------------------- system

std::pair<BivariatePolynomial, BivariatePolynomial> critical_system(const BivariatePolynomial& h,
                                                                    Direction dir) {
  if (h.is_constant()) throw Error(ErrorKind::kInvalidInput, "H must be nonconstant");
  const auto x = BivariatePolynomial::x();
  const auto y = BivariatePolynomial::y();
  BivariatePolynomial second = Rational(dir.r0) * (y * h.partial(Var::kY)) -
                               Rational(dir.s0) * (x * h.partial(Var::kX));
  return {h, std::move(second)};
}

namespace {

Real relative_value(const BivariatePolynomial& f, const Complex& x, const Complex& y) {
  const Real scale = f.eval_scale(x, y);
  const Real v = abs(f.eval(x, y));
  return scale == 0 ? v : v / scale;
}

Real snap_tolerance() { return Real(1e-30); }

void snap_real(Complex& z) {
  const Real mag = abs(z);
  if (mag != 0 && abs(z.im) <= snap_tolerance() * mag) z.im = 0;
  if (mag != 0 && abs(z.re) <= snap_tolerance() * mag) z.re = 0;
}

bool close(const Complex& a, const Complex& b, double tol) {
  const Real scale = std::max({Real(1), abs(a), abs(b)});
  return abs(a - b) <= Real(tol) * scale;
}

UnivariatePolynomial content(const BivariatePolynomial& p, Var main) {
  UnivariatePolynomial g;
  for (const auto& c : coefficients_in(p, main)) g = gcd(g, c);
  return g;
}

}  // namespace

std::pair<Complex, Complex> newton_polish(const BivariatePolynomial& f1, const BivariatePolynomial& f2,
                                          Complex x, Complex y, unsigned max_iterations) {
  const auto f1x = f1.partial(Var::kX);
  const auto f1y = f1.partial(Var::kY);
  const auto f2x = f2.partial(Var::kX);
  const auto f2y = f2.partial(Var::kY);
  auto residual = [&](const Complex& a, const Complex& b) {
    return relative_value(f1, a, b) + relative_value(f2, a, b);
  };
  const Real tiny = pow(Real(2), -static_cast<int>(working_precision()) + 8);
  Real current = residual(x, y);
  for (unsigned it = 0; it < max_iterations && current != 0; ++it) {
    const Complex a = f1x.eval(x, y);
    const Complex b = f1y.eval(x, y);
    const Complex c = f2x.eval(x, y);
    const Complex d = f2y.eval(x, y);
    const Complex det = a * d - b * c;
    if (det.re == 0 && det.im == 0) break;
    const Complex v1 = f1.eval(x, y);
    const Complex v2 = f2.eval(x, y);
    const Complex dx = (d * v1 - b * v2) / det;
    const Complex dy = (a * v2 - c * v1) / det;
    Real damping = 1;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving) {
      const Complex nx = x - dx * Complex(damping);
      const Complex ny = y - dy * Complex(damping);
      const Real next = residual(nx, ny);
      if (next < current) {
        x = nx;
        y = ny;
        current = next;
        improved = true;
        break;
      }
      damping /= 2;
    }
    if (!improved) break;
    const Real step = std::max(abs(dx), abs(dy)) * damping;
    if (step <= tiny * std::max({Real(1), abs(x), abs(y)})) break;
  }
  return {x, y};
}

bool is_smooth(const BivariatePolynomial& h, const Complex& p, const Complex& q, double tol) {
  const Real gx = abs(h.partial(Var::kX).eval(p, q));
  const Real gy = abs(h.partial(Var::kY).eval(p, q));
  Real scale = h.eval_scale(p, q);
  if (scale == 0) scale = 1;
  return std::max(gx, gy) > Real(tol) * scale;
}

// ------------------------------------------------------------------ solve

std::vector<CriticalPoint> solve_critical(const BivariatePolynomial& h, Direction dir,
                                          const SolveOptions& options) {
  const auto [f1, f2] = critical_system(h, dir);
  if (f2.is_zero()) throw Error(ErrorKind::kNumerical, "non-isolated critical set");
  const Var elim = options.eliminate;
  const Var keep = elim == Var::kX ? Var::kY : Var::kX;

  // A common factor free of the eliminated variable hides in the contents;
  // one involving it makes the resultant vanish.
  if (gcd(content(f1, elim), content(f2, elim)).degree() > 0 ||
      gcd(content(f1, keep), content(f2, keep)).degree() > 0) {
    throw Error(ErrorKind::kNumerical, "non-isolated critical set");
  }
  const UnivariatePolynomial res = resultant(f1, f2, elim);
  if (res.is_zero()) throw Error(ErrorKind::kNumerical, "non-isolated critical set");

  std::vector<CriticalPoint> points;
  const auto sf = squarefree_part(res);
  std::vector<Complex> coeffs;
  for (const auto& c : sf.coeffs()) coeffs.emplace_back(c);
  const RootResult kept_roots = aberth_roots(coeffs, options.roots);

  auto make_point = [&](Complex kv, Complex ev) {
    Complex x = keep == Var::kX ? kv : ev;
    Complex y = keep == Var::kX ? ev : kv;
    std::tie(x, y) = newton_polish(f1, f2, x, y, options.newton_iterations);
    snap_real(x);
    snap_real(y);
    CriticalPoint pt;
    pt.p = x;
    pt.q = y;
    pt.residual_h = relative_value(f1, x, y);
    pt.residual_direction = relative_value(f2, x, y);
    return pt;
  };

  for (const auto& root : kept_roots.roots) {
    // Back-substitute: roots of f1 and of f2 in the eliminated variable. Near a
    // root of a factor free of that variable one of them is only numerically zero.
    std::vector<Complex> cands = aberth_roots(f1.specialize(elim, root), options.roots).roots;
    const auto from_f2 = aberth_roots(f2.specialize(elim, root), options.roots).roots;
    cands.insert(cands.end(), from_f2.begin(), from_f2.end());
    for (const auto& cand : cands) {
      const Complex& x = keep == Var::kX ? root : cand;
      const Complex& y = keep == Var::kX ? cand : root;
      if (relative_value(f1, x, y) > Real(options.tol.candidate) ||
          relative_value(f2, x, y) > Real(options.tol.candidate)) {
        continue;
      }
      CriticalPoint pt = make_point(root, cand);
      if (pt.residual_h >= Real(options.tol.residual) ||
          pt.residual_direction >= Real(options.tol.residual)) {
        continue;
      }
      const bool dup = std::any_of(points.begin(), points.end(), [&](const CriticalPoint& o) {
        return close(o.p, pt.p, options.tol.merge) && close(o.q, pt.q, options.tol.merge);
      });
      if (!dup) points.push_back(std::move(pt));
    }
  }

  for (auto& pt : points) pt.smooth = is_smooth(h, pt.p, pt.q, options.tol.smooth);
  std::sort(points.begin(), points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    auto key = [](const CriticalPoint& c) {
      return std::array<double, 4>{abs(c.p).convert_to<double>(), arg(c.p).convert_to<double>(),
                                   abs(c.q).convert_to<double>(), arg(c.q).convert_to<double>()};
    };
    return key(a) < key(b);
  });

  if (!kept_roots.converged) {
    throw SolveError("root finder did not converge after " + std::to_string(kept_roots.iterations) +
                         " iterations",
                     std::move(points));
  }
  return points;
}

// ------------------------------------------------------------------ probe

namespace {

struct ProbeState {
  using C = std::complex<double>;
  struct Candidate {
    C x;
    C y;
    double margin;
    Var free;
  };
  std::optional<Candidate> worst;
  bool inconclusive = false;
  bool any_clear = false;
  double min_margin = 0;

  void offer(const C& x, const C& y, double margin, Var free, bool near_known, const CriticalTolerances& tol) {
    const bool strict = margin < -tol.boundary;
    const bool on_boundary = !near_known && margin <= tol.boundary;
    if (strict || on_boundary) {
      if (!worst || margin < worst->margin) worst = Candidate{x, y, margin, free};
      return;
    }
    if (near_known) return;
    if (margin <= tol.margin) inconclusive = true;
    if (!any_clear || margin < min_margin) min_margin = margin;
    any_clear = true;
  }
};

// Coefficients of h in `free`, each a list of (power of the other variable, value).
using DoubleSlices = std::vector<std::vector<std::pair<unsigned, double>>>;

DoubleSlices double_slices(const BivariatePolynomial& h, Var free) {
  DoubleSlices out(h.degree(free) + 1);
  for (const auto& [e, c] : h.terms()) {
    const unsigned k = free == Var::kX ? e.i : e.j;
    const unsigned other = free == Var::kX ? e.j : e.i;
    out[k].emplace_back(other, c.convert_to<double>());
  }
  return out;
}

// Newton on the univariate slice in working precision.
Complex polish_slice_root(const BivariatePolynomial& h, Var free, const Complex& fixed, Complex z) {
  const auto c = h.specialize(free, fixed);
  for (int it = 0; it < 30; ++it) {
    Complex p = c.back();
    Complex dp;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    if ((p.re == 0 && p.im == 0) || (dp.re == 0 && dp.im == 0)) break;
    z -= p / dp;
  }
  return z;
}

}  // namespace

MinimalityVerdict minimality_probe(const BivariatePolynomial& h, const CriticalPoint& pt,
                                   const std::vector<CriticalPoint>& known, ProbeGrid grid,
                                   const CriticalTolerances& tol) {
  using C = std::complex<double>;
  if (grid.angles < 256 || grid.radii < 32) {
    throw Error(ErrorKind::kConfiguration, "probe grid needs at least 256 angles and 32 radii");
  }
  const Real ap = abs(pt.p);
  const Real aq = abs(pt.q);
  MinimalityVerdict out;
  if (ap == 0 || aq == 0) return out;
  const double dp = ap.convert_to<double>();
  const double dq = aq.convert_to<double>();

  std::vector<std::pair<C, C>> mates;
  for (const auto& c : known) mates.emplace_back(c.p.to_double(), c.q.to_double());
  auto near_known = [&](const C& x, const C& y) {
    return std::any_of(mates.begin(), mates.end(), [&](const auto& m) {
      return std::abs(x - m.first) <= tol.neighborhood * dp && std::abs(y - m.second) <= tol.neighborhood * dq;
    });
  };

  ProbeState state;
  // Slice along the other variable: sample it over its disk, solve for `free`.
  auto sweep = [&](Var free) {
    const double fixed_mod = free == Var::kX ? dq : dp;
    const double free_mod = free == Var::kX ? dp : dq;
    const DoubleSlices slices = double_slices(h, free);
    std::vector<C> coeffs(slices.size());
    for (unsigned k = 0; k <= grid.radii; ++k) {
      const double t = static_cast<double>(k) / grid.radii;
      const unsigned n_angles = k == 0 ? 1 : grid.angles;
      for (unsigned a = 0; a < n_angles; ++a) {
        const C v = std::polar(t * fixed_mod, 2 * std::numbers::pi * a / grid.angles);
        double scale = 0;
        for (std::size_t i = 0; i < slices.size(); ++i) {
          coeffs[i] = 0;
          for (const auto& [e, c] : slices[i]) {
            const C term = c * std::pow(v, static_cast<int>(e));
            coeffs[i] += term;
            scale += std::abs(term);
          }
        }
        const RootResultDouble rr = aberth_roots_double(coeffs, 1e-14 * scale);
        if (rr.identically_zero) {
          // Every value of the free variable is a zero, in particular 0.
          const C x = free == Var::kX ? C(0) : v;
          const C y = free == Var::kX ? v : C(0);
          state.offer(x, y, -1.0, free, near_known(x, y), tol);
          continue;
        }
        for (const auto& root : rr.roots) {
          const C x = free == Var::kX ? root : v;
          const C y = free == Var::kX ? v : root;
          state.offer(x, y, std::abs(root) / free_mod - 1, free, near_known(x, y), tol);
        }
      }
    }
  };
  sweep(Var::kX);
  sweep(Var::kY);

  out.min_margin = state.any_clear ? Real(state.min_margin) : Real(0);
  if (state.worst) {
    const auto& w = *state.worst;
    Complex x(w.x.real(), w.x.imag());
    Complex y(w.y.real(), w.y.imag());
    Real margin(w.margin);
    if (w.margin > -1.0) {
      if (w.free == Var::kX) {
        x = polish_slice_root(h, Var::kX, y, x);
        margin = abs(x) / ap - 1;
      } else {
        y = polish_slice_root(h, Var::kY, x, y);
        margin = abs(y) / aq - 1;
      }
    }
    out.verdict = Minimality::kViolated;
    out.witness = Witness{x, y, margin};
  } else if (state.inconclusive || !state.any_clear) {
    out.verdict = Minimality::kInconclusive;
  } else {
    out.verdict = Minimality::kProbablyStrictlyMinimal;
  }
  return out;
}

// ------------------------------------------------------------------ torus

std::vector<TorusClass> group_by_torus(const std::vector<CriticalPoint>& points, Direction dir, double tol) {
  std::vector<TorusClass> classes;
  auto same = [&](const Real& a, const Real& b) {
    return abs(a - b) <= Real(tol) * std::max({Real(1e-300), abs(a), abs(b)});
  };
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Real ap = abs(points[k].p);
    const Real aq = abs(points[k].q);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const TorusClass& c) { return same(c.abs_p, ap) && same(c.abs_q, aq); });
    if (it == classes.end()) {
      TorusClass c;
      c.members.push_back(k);
      c.abs_p = ap;
      c.abs_q = aq;
      classes.push_back(std::move(c));
    } else {
      it->members.push_back(k);
    }
  }
  for (auto& c : classes) {
    if (c.abs_p == 0 || c.abs_q == 0) {
      // Coordinate on an axis: no exponential weight, never dominant.
      c.weight = Real(std::numeric_limits<double>::infinity());
      continue;
    }
    c.weight = Real(dir.r0) * log(c.abs_p) + Real(dir.s0) * log(c.abs_q);
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const TorusClass& a, const TorusClass& b) { return a.weight < b.weight; });
  if (!classes.empty() && is_finite(classes.front().weight)) classes.front().dominant = true;
  return classes;
}

// ---------------------------------------------------------------- analyze

CriticalAnalysis analyze_critical(const BivariatePolynomial& h, Direction dir, const AnalyzeOptions& options) {
  CriticalAnalysis out;
  out.points = solve_critical(h, dir, options.solve);
  out.classes = group_by_torus(out.points, dir, options.solve.tol.torus);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (auto idx : out.classes[c].members) out.points[idx].torus_class = static_cast<int>(c);
  }
  if (!options.probe) return out;
  for (auto& cls : out.classes) {
    std::vector<CriticalPoint> mates;
    for (auto idx : cls.members) mates.push_back(out.points[idx]);
    for (auto idx : cls.members) {
      auto& pt = out.points[idx];
      if (!pt.smooth) continue;
      auto v = minimality_probe(h, pt, mates, options.grid, options.solve.tol);
      pt.minimality = v.verdict;
      pt.witness = v.witness;
      pt.min_margin = v.min_margin;
    }
  }
  return out;
}

}  // namespace bivalg
