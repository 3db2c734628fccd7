#pragma once

// Leading-term asymptotics of [x^r y^s] G(x,y) H(x,y)^(-beta) from smooth
// strictly minimal critical points on a common torus.

#include <optional>
#include <string>
#include <vector>

#include "bivalg/critical.hpp"
#include "bivalg/numeric.hpp"
#include "bivalg/polynomial.hpp"

namespace bivalg {

struct ValidityCheck {
  std::string name;
  bool passed = false;
};

/// Second-order data of H at one critical point.
struct LocalData {
  Complex hx;
  Complex hy;
  Complex chi1;  // H_y / H_x
  Complex chi2;  // (chi1^2 H_xx - 2 chi1 H_xy + H_yy) / (2 H_x)
  Complex m;     // -2 chi2 / p - chi1^2 / p^2 - 1 / (lambda q^2)
  std::vector<ValidityCheck> checks;

  [[nodiscard]] bool valid() const;
  /// Name of the first failed check, empty if none.
  [[nodiscard]] std::string first_failure() const;
};

struct AsymptoticTolerances {
  double smooth = 1e-12;
  double chi_identity = 1e-10;
  double zero = 1e-30;           // |value| below this (relative) counts as zero
  double ray_margin = 1e-6;      // radians
  double torus = 1e-10;
  double imaginary = 1e-8;       // conjugate-cancellation check
  double real_point = 1e-25;     // |Im| allowed on a "real" coordinate, relative
};

/// Throws if H_x vanishes at the point ("non-smooth in x; theorem inapplicable").
LocalData local_data(const BivariatePolynomial& h, const CriticalPoint& pt, Direction dir,
                     const AsymptoticTolerances& tol = {});

/// Branch cut of the logarithm: the ray from the origin at `angle`. Arguments
/// are taken in [lower, lower + 2 pi), where lower is chosen so that the
/// principal argument of H(0,0) lies inside; this makes the branch agree
/// with the power series of H^-beta near the origin.
struct BranchRay {
  Real angle;  // in [0, 2 pi)
  Real lower;

  static BranchRay make(const Real& angle, const Rational& h00);
  [[nodiscard]] Real argument(const Complex& z) const;
  /// {z^-beta}_P
  [[nodiscard]] LogComplex power(const Complex& z, const Real& beta) const;
};

/// Picks the ray farthest (in angle) from every -p_i H_x(p_i, q_i) and from
/// H(0,0); ties go to the one nearest the negative real axis.
BranchRay choose_branch_ray(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points,
                            const AsymptoticTolerances& tol = {});

/// Smallest angular distance between the ray and the excluded directions.
Real ray_margin(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points, const Real& angle);

struct WindingTrace {
  int omega = 0;
  Real start_argument;  // arg H(0,0) on the ray's branch
  Real end_argument;    // continuous argument of H(tp, tq) as t -> 1
};

/// Signed counterclockwise crossings of the ray by t -> H(tp, tq), 0 <= t < 1.
/// The curve is tracked up to t = 1 - 1e-6 on an adaptive grid of at least
/// `steps` nodes; the rest uses H(tp,tq) ~ (1 - t)(-p H_x - q H_y).
WindingTrace trace_winding(const BivariatePolynomial& h, const CriticalPoint& pt, const BranchRay& ray,
                           unsigned steps = 1024);
int winding_number(const BivariatePolynomial& h, const CriticalPoint& pt, const BranchRay& ray,
                   unsigned steps = 1024);

enum class Formula { kTheorem, kCorollary };
std::string to_string(Formula f);

struct Contribution {
  Complex p;
  Complex q;
  LocalData local;
  int omega = 0;
  LogComplex branch_value;  // {(-H_x p)^-beta}_P
  LogComplex value;
};

struct AsymptoticEstimate {
  Formula formula = Formula::kTheorem;
  unsigned long r = 0;
  unsigned long s = 0;
  LogComplex value;
  std::vector<Contribution> contributions;
  std::optional<BranchRay> ray;
  std::vector<std::string> warnings;
};

struct EstimateOptions {
  std::optional<Real> ray_angle;  // override the chosen branch ray
  unsigned winding_steps = 1024;
  AsymptoticTolerances tol;
};

/// Sum over the given critical points (one torus class) of the leading term,
/// each multiplied by G at the point. Throws ErrorKind::kHypothesis naming the
/// failed hypothesis.
AsymptoticEstimate estimate_theorem(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                    const Real& beta, const std::vector<CriticalPoint>& points,
                                    Direction dir, unsigned long r, unsigned long s,
                                    const EstimateOptions& options = {});

/// Real evaluation for a single real positive critical point of a real H with
/// H(0,0) > 0. The result is real; its sign is that of G(p,q) Gamma(beta).
AsymptoticEstimate estimate_corollary(const BivariatePolynomial& h, const BivariatePolynomial& g,
                                      const Real& beta, const CriticalPoint& pt, Direction dir,
                                      unsigned long r, unsigned long s,
                                      const AsymptoticTolerances& tol = {});

/// Empty string if the corollary applies to `points`, otherwise the reason.
std::string corollary_obstruction(const BivariatePolynomial& h, const std::vector<CriticalPoint>& points,
                                  Direction dir, const AsymptoticTolerances& tol = {});

/// Points of the torus class that carries the asymptotics: smooth points the
/// probe judged strictly minimal, lightest class first. Throws kHypothesis
/// when none qualify or when two classes tie in weight.
std::vector<CriticalPoint> select_contributing(const CriticalAnalysis& analysis, Direction dir,
                                               double tol = 1e-10);

/// Warning text when |r s0 - s r0| exceeds sqrt(max(r, s)), else empty.
std::string drift_warning(Direction dir, unsigned long r, unsigned long s);

}  // namespace bivalg
