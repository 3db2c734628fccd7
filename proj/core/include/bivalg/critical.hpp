#pragma once

// Critical points of H in a direction r0:s0, their smoothness, a numeric
// probe of strict minimality, and grouping by torus.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivalg/numeric.hpp"
#include "bivalg/polynomial.hpp"
#include "bivalg/roots.hpp"

namespace bivalg {

/// Direction r0:s0 (lambda = r0 / s0), kept in lowest terms.
struct Direction {
  unsigned r0 = 1;
  unsigned s0 = 1;

  Direction() = default;
  Direction(unsigned r, unsigned s);
  /// "r0:s0" with positive integers.
  static Direction parse(const std::string& text);

  [[nodiscard]] Real lambda() const { return Real(r0) / Real(s0); }
  [[nodiscard]] Direction inverted() const { return {s0, r0}; }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

struct CriticalTolerances {
  double residual = 1e-12;     // polished residual, relative to the term scale
  double merge = 1e-10;        // duplicate points
  double torus = 1e-10;        // equal moduli
  double smooth = 1e-12;       // gradient floor, relative to the term scale
  double candidate = 1e-8;     // pre-polish filter on the second equation
  double boundary = 1e-9;      // probe: |x| <= |p|(1 + boundary) counts as on the polydisk
  double margin = 1e-6;        // probe: required clearance away from known critical points
  double neighborhood = 0.05;  // probe: relative radius treated as "at" a critical point
};

enum class Minimality { kNotProbed, kProbablyStrictlyMinimal, kViolated, kInconclusive };
std::string to_string(Minimality m);

/// A zero of H inside the closed polydisk of a critical point.
struct Witness {
  Complex x;
  Complex y;
  Real margin;  // |x|/|p| - 1 (or |y|/|q| - 1 for x-slices); negative is strictly inside
};

struct CriticalPoint {
  Complex p;
  Complex q;
  Real residual_h;          // |H(p,q)| / sum |h_ij p^i q^j|
  Real residual_direction;  // same for r0 y H_y - s0 x H_x
  bool smooth = false;
  Minimality minimality = Minimality::kNotProbed;
  std::optional<Witness> witness;
  Real min_margin;          // smallest clearance seen away from critical points
  int torus_class = -1;
};

/// (H, r0 y H_y - s0 x H_x).
std::pair<BivariatePolynomial, BivariatePolynomial> critical_system(const BivariatePolynomial& h,
                                                                    Direction dir);

struct SolveOptions {
  Var eliminate = Var::kY;
  CriticalTolerances tol;
  RootOptions roots;
  unsigned newton_iterations = 80;
};

/// Thrown when the root finder stalls; carries whatever was polished so far.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, std::vector<CriticalPoint> partial)
      : Error(ErrorKind::kNumerical, what), partial_(std::move(partial)) {}
  [[nodiscard]] const std::vector<CriticalPoint>& partial() const { return partial_; }

 private:
  std::vector<CriticalPoint> partial_;
};

/// All finite solutions of the critical system: resultant elimination, Aberth
/// roots of its squarefree part, back-substitution and Newton polish. Points
/// are returned sorted by (|p|, arg p, |q|, arg q) with `smooth` filled in.
std::vector<CriticalPoint> solve_critical(const BivariatePolynomial& h, Direction dir,
                                          const SolveOptions& options = {});

/// Newton iteration on the system (f1, f2) from (x, y) with step halving.
std::pair<Complex, Complex> newton_polish(const BivariatePolynomial& f1, const BivariatePolynomial& f2,
                                          Complex x, Complex y, unsigned max_iterations = 80);

bool is_smooth(const BivariatePolynomial& h, const Complex& p, const Complex& q, double tol = 1e-12);

struct ProbeGrid {
  unsigned angles = 256;
  unsigned radii = 32;
};

struct MinimalityVerdict {
  Minimality verdict = Minimality::kInconclusive;
  std::optional<Witness> witness;
  Real min_margin;
};

/// Samples the polydisk {|x| <= |p|} x {|y| <= |q|}: for each sampled y it
/// solves H(., y) = 0 and checks |x| against |p|, then the same with the
/// roles of x and y exchanged. `known` lists the critical points on the same
/// torus (including `pt`); zeros at those points are expected.
MinimalityVerdict minimality_probe(const BivariatePolynomial& h, const CriticalPoint& pt,
                                   const std::vector<CriticalPoint>& known, ProbeGrid grid = {},
                                   const CriticalTolerances& tol = {});

struct TorusClass {
  std::vector<std::size_t> members;  // indices into the point list
  Real abs_p;
  Real abs_q;
  Real weight;  // r0 log|p| + s0 log|q|; smaller dominates
  bool dominant = false;
};

/// Partitions points by (|p|, |q|) within a relative tolerance. Classes are
/// ordered by weight; the lightest is marked dominant.
std::vector<TorusClass> group_by_torus(const std::vector<CriticalPoint>& points, Direction dir,
                                       double tol = 1e-10);

struct AnalyzeOptions {
  SolveOptions solve;
  ProbeGrid grid;
  bool probe = true;
};

struct CriticalAnalysis {
  std::vector<CriticalPoint> points;
  std::vector<TorusClass> classes;
};

/// solve_critical + group_by_torus + minimality_probe on every smooth point.
CriticalAnalysis analyze_critical(const BivariatePolynomial& h, Direction dir,
                                  const AnalyzeOptions& options = {});

}  // namespace bivalg
