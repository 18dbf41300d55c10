// mach-fvm: command line front end for the interface-diffusion solver.
//
// Subcommands: solve | study | truncation | diagnostics. Values may come
// from --config FILE (flat key=value with one [run] section); flags override
// file values. Exit codes: 0 success, 1 solver failure, 2 config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "machfvm/config.hpp"
#include "machfvm/errors.hpp"
#include "machfvm/runner.hpp"

namespace {

machfvm::RunConfig flag_config;
std::string config_path;
std::string example_arg;
std::string strategy_arg;
std::string solver_arg;
std::string ns_arg;
double kappa_minus_arg = 0.0;
double tol_arg = 0.0;
std::string out_arg;

void collect_flags(const CLI::App& cmd) {
  if (cmd.count("--example") > 0) {
    if (example_arg == "custom") {
      flag_config.example = 0;
    } else if (example_arg == "1" || example_arg == "2") {
      flag_config.example = std::stoi(example_arg);
    } else {
      throw machfvm::ConfigError("example must be 1, 2, or custom; got " + example_arg);
    }
  }
  if (cmd.count("--kappa-minus") > 0) {
    if (!(kappa_minus_arg >= 1.0)) throw machfvm::ConfigError("kappa_minus must be >= 1");
    flag_config.kappa_minus = kappa_minus_arg;
  }
  if (cmd.count("--strategy") > 0) {
    flag_config.strategy = machfvm::strategy_from_string(strategy_arg);
  }
  if (cmd.count("--solver") > 0) {
    flag_config.solver = machfvm::solver_from_string(solver_arg);
  }
  if (cmd.count("--ns") > 0) {
    flag_config.ns = machfvm::parse_n_list(ns_arg);
  }
  if (cmd.count("--tol") > 0) {
    if (!(tol_arg > 0.0)) throw machfvm::ConfigError("tol must be positive");
    flag_config.tol = tol_arg;
  }
  if (cmd.count("--out") > 0) {
    flag_config.out = out_arg;
  }
}

void add_run_flags(CLI::App& cmd) {
  cmd.add_option("--example", example_arg, "Built-in example {1,2} or custom");
  cmd.add_option("--kappa-minus", kappa_minus_arg, "Diffusion coefficient in the left material");
  cmd.add_option("--strategy", strategy_arg, "Cell averaging {arithmetic,harmonic}");
  cmd.add_option("--solver", solver_arg, "Linear solver {cg,dst}");
  cmd.add_option("--ns", ns_arg, "Comma-separated odd grid sizes");
  cmd.add_option("--tol", tol_arg, "Relative residual tolerance");
  cmd.add_option("--out", out_arg, "Output CSV path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite volume solver for stationary diffusion with material interfaces"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "Run configuration file");
  add_run_flags(app);

  CLI::App* solve = app.add_subcommand("solve", "Solve one grid and dump per-node results");
  CLI::App* study = app.add_subcommand("study", "Convergence study over a refinement chain");
  CLI::App* trunc = app.add_subcommand("truncation", "Truncation-residual table for one grid");
  CLI::App* diag = app.add_subcommand("diagnostics", "Spectral diagnostics table");
  for (CLI::App* cmd : {solve, study, trunc, diag}) {
    add_run_flags(*cmd);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    machfvm::RunConfig file_config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "configuration error: cannot read " << config_path << "\n";
        return 2;
      }
      std::ostringstream text;
      text << in.rdbuf();
      file_config = machfvm::parse_config_partial(text.str());
    }

    collect_flags(app);
    if (solve->parsed()) {
      flag_config.command = machfvm::Command::Solve;
      collect_flags(*solve);
    } else if (study->parsed()) {
      flag_config.command = machfvm::Command::Study;
      collect_flags(*study);
    } else if (trunc->parsed()) {
      flag_config.command = machfvm::Command::Truncation;
      collect_flags(*trunc);
    } else if (diag->parsed()) {
      flag_config.command = machfvm::Command::Diagnostics;
      collect_flags(*diag);
    }

    machfvm::RunConfig merged = machfvm::merge_config(file_config, flag_config);
    machfvm::validate_config(merged);
    const int code = machfvm::run(merged);
    if (code == 0) {
      std::cout << "wrote " << *merged.out << "\n";
    }
    return code;
  } catch (const machfvm::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
