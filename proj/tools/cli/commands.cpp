#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bivalg/report.hpp"

namespace bivalg::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return kExitUsage;
    case ErrorKind::kConfiguration:
      return kExitConfig;
    case ErrorKind::kHypothesis:
      return kExitNoCriticalPoint;
    case ErrorKind::kNumerical:
      return kExitNumerical;
  }
  return kExitNumerical;
}

namespace {

ReportContext context(const ProblemSpec& spec) { return {spec.h.to_string(), spec.direction.to_string()}; }

bool has_minimal_point(const CriticalAnalysis& a) {
  return std::any_of(a.points.begin(), a.points.end(), [](const CriticalPoint& p) {
    return p.smooth && p.minimality == Minimality::kProbablyStrictlyMinimal;
  });
}

void require_targets(const ProblemSpec& spec) {
  if (spec.targets.empty()) throw Error(ErrorKind::kConfiguration, "spec lists no targets");
}

std::vector<AsymptoticEstimate> estimates_for(const ProblemSpec& spec, const CriticalAnalysis& analysis,
                                              bool skip_origin_row) {
  const auto points = select_contributing(analysis, spec.direction, critical_tolerances(spec).torus);
  const auto options = estimate_options(spec);
  const Real beta = to_real(spec.beta);
  std::vector<AsymptoticEstimate> out;
  for (const auto& [r, s] : spec.targets) {
    if (r == 0) {
      if (skip_origin_row) {
        out.emplace_back();
        continue;
      }
      throw Error(ErrorKind::kConfiguration,
                  "target (0," + std::to_string(s) + "): the estimate needs r >= 1");
    }
    out.push_back(estimate_theorem(spec.h, spec.g, beta, points, spec.direction, r, s, options));
  }
  return out;
}

void print_warnings(const std::vector<AsymptoticEstimate>& estimates, std::ostream& err) {
  for (const auto& e : estimates) {
    for (const auto& w : e.warnings) err << "warning: " << w << "\n";
  }
}

// Radii for the Cauchy integral: half the moduli of the dominant minimal point.
std::pair<double, double> default_quadrature_radii(const ProblemSpec& spec) {
  const auto analysis = analyze_critical(spec.h, spec.direction, analyze_options(spec));
  const auto points = select_contributing(analysis, spec.direction, critical_tolerances(spec).torus);
  return {0.5 * abs(points.front().p).convert_to<double>(), 0.5 * abs(points.front().q).convert_to<double>()};
}

std::string sci(const Real& x) { return format_sci(x, 17); }

}  // namespace

int cmd_solve(const ProblemSpec& spec, std::ostream& out, std::ostream& /*err*/) {
  const auto analysis = analyze_critical(spec.h, spec.direction, analyze_options(spec));
  out << critical_report(analysis, context(spec));
  return has_minimal_point(analysis) ? kExitOk : kExitNoCriticalPoint;
}

int cmd_estimate(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
  require_targets(spec);
  const auto analysis = analyze_critical(spec.h, spec.direction, analyze_options(spec));
  const auto estimates = estimates_for(spec, analysis, false);
  out << estimate_report(estimates, context(spec));
  print_warnings(estimates, err);
  return kExitOk;
}

int cmd_oracle(const ProblemSpec& spec, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  if (!spec.oracle_box) throw Error(ErrorKind::kConfiguration, "oracle needs oracle_box in the spec");
  const Box box = *spec.oracle_box;
  const auto table = coeff_recurrence(spec.h, spec.g, spec.beta, box);
  if (!opts.quadrature) {
    write_table_csv(out, table);
    return kExitOk;
  }
  QuadratureConfig cfg;
  const auto radii = spec.quadrature_radii ? *spec.quadrature_radii : default_quadrature_radii(spec);
  cfg.c1 = radii.first;
  cfg.c2 = radii.second;
  unsigned n = cfg.n1;
  if (auto it = spec.grid.find("quadrature"); it != spec.grid.end()) n = it->second;
  if (opts.grid) n = *opts.grid;
  cfg.n1 = cfg.n2 = n;
  const auto quad = quadrature_table(spec.h, spec.g, to_real(spec.beta).convert_to<double>(), box, cfg);
  write_table_csv(out, table, &quad);
  err << "quadrature radii: " << radii.first << ", " << radii.second << "; nodes " << n << "x" << n << "\n";
  return kExitOk;
}

int cmd_compare(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
  require_targets(spec);
  Box box{0, 0};
  for (const auto& [r, s] : spec.targets) box = {std::max(box.r_max, r), std::max(box.s_max, s)};
  if (spec.oracle_box) {
    for (const auto& [r, s] : spec.targets) {
      if (r > spec.oracle_box->r_max || s > spec.oracle_box->s_max) {
        throw Error(ErrorKind::kConfiguration, "target (" + std::to_string(r) + "," + std::to_string(s) +
                                                   ") lies outside oracle_box");
      }
    }
    box = *spec.oracle_box;
  }
  const auto analysis = analyze_critical(spec.h, spec.direction, analyze_options(spec));
  const auto estimates = estimates_for(spec, analysis, true);
  const auto table = coeff_recurrence(spec.h, spec.g, spec.beta, box);

  out << "r,s,estimate_log10,estimate,exact_log10,exact,ratio\n";
  for (std::size_t k = 0; k < spec.targets.size(); ++k) {
    const auto [r, s] = spec.targets[k];
    const LogComplex exact = table.log_entry(r, s);
    const std::string exact_log = exact.zero ? "-inf" : sci(exact.log10_modulus());
    out << r << "," << s << ",";
    if (r == 0) {
      out << "n/a,n/a," << exact_log << "," << format_value(exact) << ",n/a\n";
      continue;
    }
    const LogComplex& est = estimates[k].value;
    out << (est.zero ? "-inf" : sci(est.log10_modulus())) << "," << format_value(est) << "," << exact_log << ","
        << format_value(exact) << ",";
    if (exact.zero || est.zero) {
      out << "n/a\n";
    } else {
      out << format_value(est / exact) << "\n";
    }
  }
  print_warnings(estimates, err);
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient asymptotics for G(x,y) H(x,y)^-beta", "bivalg"};
  app.require_subcommand(0, 1);
  std::string spec_path;
  RunOptions opts;
  unsigned precision = 0;
  unsigned grid = 0;
  bool dump_spec = false;
  app.add_option("--spec", spec_path, "problem description (JSON)")->required();
  app.add_option("--out", opts.out_path, "write the result here instead of stdout");
  app.add_option("--precision", precision, "working precision in bits (>= 53)");
  app.add_option("--grid", grid, "quadrature nodes per circle (power of two, >= 64)");
  app.add_flag("--quadrature", opts.quadrature, "oracle: add a numeric Cauchy-integral column");
  app.add_flag("--dump-spec", dump_spec, "print the parsed spec in canonical form and exit");
  auto* solve = app.add_subcommand("solve", "critical points with smoothness and minimality verdicts");
  auto* estimate = app.add_subcommand("estimate", "leading-term estimate for each target");
  auto* oracle = app.add_subcommand("oracle", "exact coefficient table as CSV");
  auto* compare = app.add_subcommand("compare", "estimate against exact coefficients as CSV");
  for (auto* sub : {solve, estimate, oracle, compare}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    ProblemSpec spec = load_problem_spec(spec_path);
    std::ostringstream body;
    int code = kExitOk;
    if (dump_spec) {
      body << dump_problem_spec(spec);
    } else {
      if (app.get_subcommands().empty()) {
        err << "error: one of solve, estimate, oracle, compare is required\n";
        return kExitUsage;
      }
      if (precision != 0) spec.precision = precision;
      if (grid != 0) opts.grid = grid;
      set_working_precision(spec.precision.value_or(kDefaultPrecisionBits));
      if (solve->parsed()) code = cmd_solve(spec, body, err);
      if (estimate->parsed()) code = cmd_estimate(spec, body, err);
      if (oracle->parsed()) code = cmd_oracle(spec, opts, body, err);
      if (compare->parsed()) code = cmd_compare(spec, body, err);
    }
    if (opts.out_path.empty()) {
      out << body.str();
    } else {
      std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw Error(ErrorKind::kConfiguration, "cannot write " + opts.out_path);
      file << body.str();
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace bivalg::cli
