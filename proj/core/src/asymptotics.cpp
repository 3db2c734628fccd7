#include "bivalg/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace bivalg {

namespace {

Real two_pi() { return 2 * pi(); }

// a mod 2 pi in [0, 2 pi)
Real wrap_positive(const Real& a) {
  Real r = a - two_pi() * floor(a / two_pi());
  if (r >= two_pi()) r -= two_pi();
  return r;
}

Real angular_distance(const Real& a, const Real& b) {
  return abs(principal_angle(a - b));
}

bool is_zero(const Complex& z, const Real& scale, double tol) {
  return abs(z) <= Real(tol) * (scale == 0 ? Real(1) : scale);
}

void check_beta(const Real& beta) {
  if (beta <= 0 && beta == floor(beta)) {
    throw Error(ErrorKind::kHypothesis, "beta must not be a nonpositive integer");
  }
}

}  // namespace

// ------------------------------------------------------------- local data

bool LocalData::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidityCheck& c) { return c.passed; });
}

std::string LocalData::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

LocalData local_data(const BivariatePolynomial& h, const CriticalPoint& pt, Direction dir,
                     const AsymptoticTolerances& tol) {
  const Complex& p = pt.p;
  const Complex& q = pt.q;
  LocalData d;
  const Real scale = h.eval_scale(p, q);
  d.hx = h.partial(Var::kX).eval(p, q);
  d.hy = h.partial(Var::kY).eval(p, q);
  if (is_zero(d.hx, scale, tol.smooth)) {
    throw Error(ErrorKind::kHypothesis, "non-smooth in x; theorem inapplicable");
  }
  const Complex hxx = h.partial(Var::kX).partial(Var::kX).eval(p, q);
  const Complex hxy = h.partial(Var::kX).partial(Var::kY).eval(p, q);
  const Complex hyy = h.partial(Var::kY).partial(Var::kY).eval(p, q);
  const Complex lambda(dir.lambda());

  d.chi1 = d.hy / d.hx;
  d.chi2 = (d.chi1 * d.chi1 * hxx - Complex(2) * d.chi1 * hxy + hyy) / (Complex(2) * d.hx);

  const bool p_ok = !is_zero(p, Real(1), tol.zero);
  const bool q_ok = !is_zero(q, Real(1), tol.zero);
  d.checks.push_back({"p != 0", p_ok});
  d.checks.push_back({"q != 0", q_ok});
  d.checks.push_back({"H_x(p,q) != 0", true});
  if (!p_ok || !q_ok) return d;

  d.m = -(Complex(2) * d.chi2 / p) - d.chi1 * d.chi1 / (p * p) - Complex(1) / (lambda * q * q);
  const Real m_scale = abs(Complex(2) * d.chi2 / p) + abs(d.chi1 * d.chi1 / (p * p)) +
                       abs(Complex(1) / (lambda * q * q));
  const bool m_ok = !is_zero(d.m, m_scale, tol.smooth);
  d.checks.push_back({"M != 0", m_ok});
  d.checks.push_back({"Re(-q^2 M) > 0", m_ok && (-(q * q * d.m)).re > 0});

  const Complex identity = p / (lambda * q);
  d.checks.push_back({"chi1 = p/(lambda q)", abs(d.chi1 - identity) <= Real(tol.chi_identity) * abs(d.chi1)});
  return d;
}

// ------------------------------------------------------------- branch ray

BranchRay BranchRay::make(const Real& angle, const Rational& h00) {
  const Real a = wrap_positive(angle);
  const Real anchor = h00 < 0 ? pi() : Real(0);
  // Interval (a - 2 pi + 2 pi k, a + 2 pi k) containing the anchor.
  const Real k = floor((anchor - a) / two_pi()) + 1;
  return {a, a - two_pi() + two_pi() * k};
}

Real BranchRay::argument(const Complex& z) const {
  return lower + wrap_positive(arg(z) - lower);
}

LogComplex BranchRay::power(const Complex& z, const Real& beta) const {
  if (z.re == 0 && z.im == 0) throw Error(ErrorKind::kNumerical, "branch power of zero");
  return {-beta * log(abs(z)), principal_angle(-beta * argument(z)), false};
}

namespace {

std::vector<Real> excluded_angles(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points) {
  std::vector<Real> out;
  const auto hx = h.partial(Var::kX);
  for (const auto& pt : points) {
    const Complex w = -(pt.p * hx.eval(pt.p, pt.q));
    if (w.re == 0 && w.im == 0) throw Error(ErrorKind::kHypothesis, "-p H_x(p,q) vanishes");
    out.push_back(wrap_positive(arg(w)));
  }
  out.push_back(h.constant_term() < 0 ? pi() : Real(0));
  return out;
}

}  // namespace

Real ray_margin(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points, const Real& angle) {
  Real best = pi();
  for (const auto& e : excluded_angles(h, points)) best = std::min(best, angular_distance(angle, e));
  return best;
}

BranchRay choose_branch_ray(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points,
                            const AsymptoticTolerances& tol) {
  std::vector<Real> angles = excluded_angles(h, points);
  std::sort(angles.begin(), angles.end());
  // The best ray bisects the widest gap between consecutive excluded angles.
  Real best_angle;
  Real best_gap = -1;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const Real& a = angles[k];
    const Real b = k + 1 < angles.size() ? angles[k + 1] : angles.front() + two_pi();
    const Real gap = b - a;
    const Real mid = wrap_positive((a + b) / 2);
    const Real tie = Real(1e-20) * two_pi();
    if (gap > best_gap + tie ||
        (abs(gap - best_gap) <= tie && angular_distance(mid, pi()) < angular_distance(best_angle, pi()))) {
      best_gap = gap;
      best_angle = mid;
    }
  }
  if (best_gap / 2 < Real(tol.ray_margin)) {
    throw Error(ErrorKind::kNumerical, "no branch ray with sufficient angular margin");
  }
  return BranchRay::make(best_angle, h.constant_term());
}

// ---------------------------------------------------------------- winding

namespace {

long crossings(const Real& from, const Real& to, const Real& ray) {
  const Real a = floor((to - ray) / two_pi());
  const Real b = floor((from - ray) / two_pi());
  return (a - b).convert_to<long>();
}

}  // namespace

WindingTrace trace_winding(const BivariatePolynomial& h, const CriticalPoint& pt, const BranchRay& ray,
                           unsigned steps) {
  if (steps < 1024) throw Error(ErrorKind::kConfiguration, "winding needs at least 1024 steps");
  const Real t_cap = Real(1) - Real(1e-6);
  const Real floor_rel(1e-9);
  const Real max_step = pi() / 8;

  auto sample = [&](const Real& t) {
    const Complex x = pt.p * Complex(t);
    const Complex y = pt.q * Complex(t);
    const Complex v = h.eval(x, y);
    Real scale = h.eval_scale(x, y);
    if (abs(v) < floor_rel * scale) {
      throw Error(ErrorKind::kNumerical, "curve passes near origin; refine or reject minimality");
    }
    return v;
  };

  WindingTrace out;
  Complex prev = sample(Real(0));
  out.start_argument = ray.argument(prev);
  Real phase = out.start_argument;
  long omega = 0;

  // Advance from t0 (value v0) to t1, bisecting while the phase moves too fast.
  auto advance = [&](auto&& self, const Real& t0, const Complex& v0, const Real& t1, int depth) -> Complex {
    const Complex v1 = sample(t1);
    const Real step = principal_angle(arg(v1) - arg(v0));
    if (abs(step) > max_step && depth < 40) {
      const Real mid = (t0 + t1) / 2;
      const Complex vm = self(self, t0, v0, mid, depth + 1);
      return self(self, mid, vm, t1, depth + 1);
    }
    if (abs(step) > max_step) {
      throw Error(ErrorKind::kNumerical, "winding tracking could not resolve the phase");
    }
    const Real next = phase + step;
    omega += crossings(phase, next, ray.angle);
    phase = next;
    return v1;
  };

  Real t_prev = 0;
  for (unsigned k = 1; k <= steps; ++k) {
    const Real t = t_cap * Real(k) / Real(steps);
    prev = advance(advance, t_prev, prev, t, 0);
    t_prev = t;
  }

  // Tail: the curve is a segment toward 0 along -(p H_x + q H_y).
  const Complex direction = -(pt.p * h.partial(Var::kX).eval(pt.p, pt.q) +
                              pt.q * h.partial(Var::kY).eval(pt.p, pt.q));
  if (direction.re == 0 && direction.im == 0) {
    throw Error(ErrorKind::kHypothesis, "gradient term -p H_x - q H_y vanishes");
  }
  const Real tail = principal_angle(arg(direction) - arg(prev));
  const Real end = phase + tail;
  omega += crossings(phase, end, ray.angle);
  out.end_argument = end;
  out.omega = static_cast<int>(omega);
  return out;
}

int winding_number(const BivariatePolynomial& h, const CriticalPoint& pt, const BranchRay& ray, unsigned steps) {
  return trace_winding(h, pt, ray, steps).omega;
}

// -------------------------------------------------------------- estimates

std::string to_string(Formula f) { return f == Formula::kTheorem ? "theorem" : "corollary"; }

std::string drift_warning(Direction dir, unsigned long r, unsigned long s) {
  const long double drift = std::fabs(static_cast<long double>(r) * dir.s0 - static_cast<long double>(s) * dir.r0);
  const long double allowed = std::sqrt(static_cast<long double>(std::max(r, s)));
  if (drift <= allowed) return {};
  return "target (" + std::to_string(r) + "," + std::to_string(s) + ") drifts from direction " +
         dir.to_string() + " by " + std::to_string(static_cast<long long>(drift)) +
         " > sqrt(max(r,s)); estimate uses lambda = " + dir.to_string();
}

namespace {

LogComplex real_log(const Real& log_modulus) { return {log_modulus, Real(0), false}; }

LogComplex gamma_factor(const Real& beta) {
  const LogGamma lg = log_gamma_real(beta.convert_to<double>());
  return {Real(lg.log_abs), lg.sign < 0 ? pi() : Real(0), false};
}

void add_common_warnings(AsymptoticEstimate& est, Direction dir, const AsymptoticTolerances& tol) {
  if (auto w = drift_warning(dir, est.r, est.s); !w.empty()) est.warnings.push_back(w);
  if (!est.value.zero) {
    const Real rel_im = abs(sin(est.value.argument));
    if (rel_im > Real(tol.imaginary)) {
      est.warnings.push_back("imaginary part does not cancel (|Im|/|value| = " + format_sci(rel_im, 3) +
                             "); check the square-root branch and the critical set");
    }
  }
}

}  // namespace

AsymptoticEstimate estimate_theorem(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                    const Real& beta, const std::vector<CriticalPoint>& points,
                                    Direction dir, unsigned long r, unsigned long s,
                                    const EstimateOptions& options) {
  if (points.empty()) throw Error(ErrorKind::kHypothesis, "no critical points supplied");
  if (r == 0) throw Error(ErrorKind::kConfiguration, "asymptotic estimate needs r >= 1");
  check_beta(beta);
  const auto& tol = options.tol;
  const Real ap = abs(points.front().p);
  const Real aq = abs(points.front().q);
  for (const auto& pt : points) {
    if (!pt.smooth) throw Error(ErrorKind::kHypothesis, "critical point is not smooth");
    if (abs(abs(pt.p) - ap) > Real(tol.torus) * std::max(Real(1e-300), ap) ||
        abs(abs(pt.q) - aq) > Real(tol.torus) * std::max(Real(1e-300), aq)) {
      throw Error(ErrorKind::kHypothesis, "critical points do not lie on one torus");
    }
  }

  AsymptoticEstimate est;
  est.formula = Formula::kTheorem;
  est.r = r;
  est.s = s;
  BranchRay ray = options.ray_angle ? BranchRay::make(*options.ray_angle, h.constant_term())
                                    : choose_branch_ray(h, points, tol);
  if (options.ray_angle && ray_margin(h, points, ray.angle) < Real(tol.ray_margin)) {
    throw Error(ErrorKind::kConfiguration, "branch ray passes through an excluded direction");
  }
  est.ray = ray;

  const Real rr(r);
  const Real ss(s);
  const LogComplex r_power = real_log((beta - Real(3) / 2) * log(rr));
  const LogComplex gamma = gamma_factor(beta);
  std::vector<LogComplex> terms;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& pt = points[k];
    Contribution c;
    c.p = pt.p;
    c.q = pt.q;
    c.local = local_data(h, pt, dir, tol);
    if (!c.local.valid()) {
      throw Error(ErrorKind::kHypothesis,
                  "hypothesis failed at point " + std::to_string(k) + ": " + c.local.first_failure());
    }
    const Complex gv = g.eval(pt.p, pt.q);
    if (is_zero(gv, g.eval_scale(pt.p, pt.q), tol.zero)) {
      throw Error(ErrorKind::kHypothesis, "G vanishes at the critical point; leading term degenerates");
    }
    c.omega = winding_number(h, pt, ray, options.winding_steps);
    c.branch_value = ray.power(-(c.local.hx * pt.p), beta);

    // p^-r q^-s with the argument carried unreduced until the end.
    const LogComplex pq{-(rr * log(abs(pt.p))) - ss * log(abs(pt.q)),
                        principal_angle(-(rr * arg(pt.p)) - ss * arg(pt.q)), false};
    const LogComplex winding{Real(0), principal_angle(-beta * two_pi() * Real(c.omega)), false};
    const Complex w = -(Complex(two_pi()) * pt.q * pt.q * c.local.m);
    const LogComplex root = LogComplex::from(sqrt(w));
    c.value = LogComplex::from(gv) * r_power * pq * c.branch_value * winding / gamma / root;
    terms.push_back(c.value);
    est.contributions.push_back(std::move(c));
  }
  est.value = log_sum(terms);
  add_common_warnings(est, dir, tol);
  return est;
}

std::string corollary_obstruction(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points,
                                  Direction dir, const AsymptoticTolerances& tol) {
  if (points.size() != 1) return "corollary needs exactly one critical point";
  const auto& pt = points.front();
  if (!pt.smooth) return "critical point is not smooth";
  auto real_positive = [&](const Complex& z) {
    return z.re > 0 && abs(z.im) <= Real(tol.real_point) * abs(z);
  };
  if (!real_positive(pt.p) || !real_positive(pt.q)) return "p and q must be real and positive";
  if (h.constant_term() <= 0) return "H(0,0) must be positive";
  LocalData d;
  try {
    d = local_data(h, pt, dir, tol);
  } catch (const Error& e) {
    return e.what();
  }
  if (!d.valid()) return d.first_failure();
  if (!((-(d.hx * pt.p)).re > 0)) return "-H_x(p,q) p must be positive";
  if (!((-(pt.q * pt.q * d.m)).re > 0)) return "-2 pi q^2 M must be positive";
  return {};
}

AsymptoticEstimate estimate_corollary(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                      const Real& beta, const CriticalPoint& pt, Direction dir,
                                      unsigned long r, unsigned long s, const AsymptoticTolerances& tol) {
  if (r == 0) throw Error(ErrorKind::kConfiguration, "asymptotic estimate needs r >= 1");
  check_beta(beta);
  if (auto why = corollary_obstruction(h, {pt}, dir, tol); !why.empty()) {
    throw Error(ErrorKind::kHypothesis, "corollary precondition failed: " + why + "; use estimate_theorem");
  }
  const LocalData d = local_data(h, pt, dir, tol);
  // Everything below is real: p, q > 0, -H_x p > 0, -q^2 M > 0.
  const Real p = pt.p.re;
  const Real q = pt.q.re;
  const Real hx = d.hx.re;
  const Real m = d.m.re;
  const Real gv = g.eval(pt.p, pt.q).re;
  if (abs(gv) <= Real(tol.zero) * std::max(Real(1), g.eval_scale(pt.p, pt.q))) {
    throw Error(ErrorKind::kHypothesis, "G vanishes at the critical point; leading term degenerates");
  }
  const LogGamma lg = log_gamma_real(beta.convert_to<double>());
  const Real log_abs = log(abs(gv)) + (beta - Real(3) / 2) * log(Real(r)) - Real(r) * log(p) -
                       Real(s) * log(q) - beta * log(-hx * p) - Real(lg.log_abs) -
                       log(-2 * pi() * q * q * m) / 2;
  const int sign = (gv < 0 ? -1 : 1) * lg.sign;

  AsymptoticEstimate est;
  est.formula = Formula::kCorollary;
  est.r = r;
  est.s = s;
  est.value = {log_abs, sign < 0 ? pi() : Real(0), false};
  Contribution c;
  c.p = pt.p;
  c.q = pt.q;
  c.local = d;
  c.omega = 0;
  c.branch_value = {-beta * log(-hx * p), Real(0), false};
  c.value = est.value;
  est.contributions.push_back(std::move(c));
  add_common_warnings(est, dir, tol);
  return est;
}

std::vector<CriticalPoint> select_contributing(const CriticalAnalysis& analysis, Direction dir, double tol) {
  (void)dir;
  const TorusClass* chosen = nullptr;
  for (const auto& cls : analysis.classes) {
    const bool any_minimal = std::any_of(cls.members.begin(), cls.members.end(), [&](std::size_t i) {
      return analysis.points[i].minimality == Minimality::kProbablyStrictlyMinimal;
    });
    if (!any_minimal) continue;
    if (chosen == nullptr) {
      chosen = &cls;
      continue;
    }
    // Classes are sorted by weight; a second minimal class at equal weight is ambiguous.
    if (abs(cls.weight - chosen->weight) <= Real(tol) * std::max(Real(1), abs(chosen->weight))) {
      throw Error(ErrorKind::kHypothesis,
                  "two torus classes with equal weight but different moduli; refusing to combine");
    }
    break;
  }
  if (chosen == nullptr) {
    throw Error(ErrorKind::kHypothesis, "no smooth strictly minimal critical point");
  }
  std::vector<CriticalPoint> out;
  for (auto idx : chosen->members) {
    const auto& pt = analysis.points[idx];
    if (!pt.smooth) throw Error(ErrorKind::kHypothesis, "critical point on the minimal torus is not smooth");
    if (pt.minimality != Minimality::kProbablyStrictlyMinimal) {
      throw Error(ErrorKind::kHypothesis, "critical point on the minimal torus failed the minimality probe (" +
                                              to_string(pt.minimality) + ")");
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace bivalg
