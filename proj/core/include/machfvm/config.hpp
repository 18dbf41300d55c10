#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "machfvm/materials.hpp"
#include "machfvm/solver.hpp"

namespace machfvm {

enum class Command { Solve, Study, Truncation, Diagnostics };

const char* to_string(Command c);

/// One run of the tool. Values may arrive from a config file, from command
/// line flags, or both; flags override file values. validate_config fills
/// the documented defaults and rejects inconsistent combinations.
struct RunConfig {
  std::optional<Command> command;
  // 1 or 2 selects a built-in manufactured solution; 0 is "custom"
  // (user-supplied material partition, solve only).
  std::optional<int> example;
  std::optional<double> kappa_minus;
  std::optional<AverageStrategy> strategy;
  std::optional<SolverKind> solver;
  std::vector<int> ns;
  std::optional<double> tol;
  std::optional<std::string> out;

  // Custom-partition description (example=custom): rectangles plus kappa.
  std::vector<Subdomain> subdomains;
  std::optional<double> source_constant;
};

/// Parses the flat key=value format with a single [run] section. Performs
/// per-key validation (odd N, closed enumerations, kappa_minus >= 1) and
/// rejects unknown keys; call validate_config afterwards (or use
/// parse_config) for command-level completeness checks.
RunConfig parse_config_partial(std::string_view text);

/// parse_config_partial followed by validate_config.
RunConfig parse_config(std::string_view text);

/// Overlays flag-supplied values on top of file-supplied ones.
RunConfig merge_config(const RunConfig& file, const RunConfig& flags);

/// Applies defaults and checks per-command required keys. Throws ConfigError.
void validate_config(RunConfig& config);

Command command_from_string(std::string_view s);
AverageStrategy strategy_from_string(std::string_view s);
SolverKind solver_from_string(std::string_view s);
std::vector<int> parse_n_list(std::string_view s);

}  // namespace machfvm
