#pragma once

// Problem description files: JSON with exact rational coefficients.
//
//   {
//     "H": [[0, 0, "1"], [1, 0, "-1"], [0, 1, "-1"]],
//     "G": [[0, 0, "1"]],                 optional, default 1
//     "beta": "1/2",                       rational or decimal string
//     "direction": "1:1",
//     "targets": [[100, 100]],
//     "oracle_box": [100, 100],            optional
//     "tolerances": {"residual": 1e-12},   optional
//     "grid": {"quadrature": 512},         optional
//     "quadrature_radii": [0.25, 0.25],    optional
//     "precision": 128                     optional, bits
//   }

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivalg/asymptotics.hpp"
#include "bivalg/critical.hpp"
#include "bivalg/oracle.hpp"
#include "bivalg/polynomial.hpp"

namespace bivalg::cli {

struct ProblemSpec {
  BivariatePolynomial h;
  BivariatePolynomial g{Rational(1)};
  Rational beta;
  Direction direction;
  std::vector<std::pair<unsigned, unsigned>> targets;
  std::optional<Box> oracle_box;
  std::map<std::string, double> tolerances;
  std::map<std::string, unsigned> grid;
  std::optional<std::pair<double, double>> quadrature_radii;
  std::optional<unsigned> precision;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws Error(kInvalidInput); syntax errors carry "line L, column C".
ProblemSpec parse_problem_spec(const std::string& text);
ProblemSpec load_problem_spec(const std::string& path);

/// Canonical form; parse_problem_spec(dump_problem_spec(s)) == s.
std::string dump_problem_spec(const ProblemSpec& spec);

/// Settings derived from the spec's overrides.
CriticalTolerances critical_tolerances(const ProblemSpec& spec);
AsymptoticTolerances asymptotic_tolerances(const ProblemSpec& spec);
AnalyzeOptions analyze_options(const ProblemSpec& spec);
EstimateOptions estimate_options(const ProblemSpec& spec);

}  // namespace bivalg::cli
