#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/problem_spec.hpp"

namespace bivalg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNoCriticalPoint = 2,
  kExitUsage = 64,
  kExitConfig = 65,
  kExitNumerical = 70,
};

int exit_code_for(ErrorKind kind);

struct RunOptions {
  std::string out_path;  // empty: write to the given stream
  std::optional<unsigned> precision;
  std::optional<unsigned> grid;  // quadrature nodes per circle
  bool quadrature = false;
};

/// The four pipelines. Each returns an exit code; errors escape as Error.
int cmd_solve(const ProblemSpec& spec, std::ostream& out, std::ostream& err);
int cmd_estimate(const ProblemSpec& spec, std::ostream& out, std::ostream& err);
int cmd_oracle(const ProblemSpec& spec, const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const ProblemSpec& spec, std::ostream& out, std::ostream& err);

/// Full front end: argument parsing, spec loading, dispatch and error mapping.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bivalg::cli
