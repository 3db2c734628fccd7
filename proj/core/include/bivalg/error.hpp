#pragma once

#include <stdexcept>
#include <string>

namespace bivalg {

/// Broad failure classes; the CLI maps each onto a stable exit code.
enum class ErrorKind {
  kInvalidInput,    // malformed polynomial, bad exponent, bad box
  kConfiguration,   // request inconsistent with the problem (box too small, grid)
  kHypothesis,      // a hypothesis of the asymptotic formula does not hold
  kNumerical,       // root finder, branch tracking or overflow failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bivalg
