#pragma once

#include <stdexcept>
#include <string>

namespace machfvm {

/// A coefficient query landed exactly on a material interface, where the
/// piecewise-constant field is undefined. Callers must use one-sided points
/// or cell averaging instead.
class OnInterfaceError : public std::domain_error {
 public:
  explicit OnInterfaceError(const std::string& what) : std::domain_error(what) {}
};

/// Iterative solve did not reach the requested tolerance.
class SolveFailure : public std::runtime_error {
 public:
  SolveFailure(const std::string& what, int iterations, double rel_residual)
      : std::runtime_error(what), iterations(iterations), rel_residual(rel_residual) {}

  int iterations;
  double rel_residual;
};

/// Invalid or incomplete run configuration (maps to exit code 2 in the CLI).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace machfvm
