#include "machfvm/runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "machfvm/analysis.hpp"
#include "machfvm/assembly.hpp"
#include "machfvm/csv.hpp"
#include "machfvm/errors.hpp"
#include "machfvm/spectral.hpp"

namespace machfvm {

namespace {

void run_solve_builtin(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.ns.front();
  const Grid grid = build_simplified_grid(n);
  const ExactSolutionSpec spec = builtin_example(*cfg.example, *cfg.kappa_minus);
  const MaterialPartition partition = MaterialPartition::simplified(spec.kappa_minus);
  const double kappa_star =
      cell_kappa(partition, grid.cell(grid.interface_column(), 0), *cfg.strategy);
  const StencilOperator op = assemble_five_point(grid, spec.kappa_minus, kappa_star, spec.f);

  SolveOptions opts;
  opts.method = *cfg.solver;
  opts.tol = *cfg.tol;
  SolveReport report;
  const NodeField x = solve(op, op.rhs, opts, &report);

  const NodeField ax = op.apply(x);
  double rhs_norm = 0.0;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) rhs_norm = std::max(rhs_norm, std::abs(op.rhs(i, j)));
  }

  os << "# command=solve example=" << *cfg.example << " N=" << n
     << " kappa_minus=" << fmt_sci(spec.kappa_minus) << " strategy=" << to_string(*cfg.strategy)
     << " solver=" << to_string(report.method) << " iters=" << report.iterations
     << " rel_residual=" << fmt_sci(report.rel_residual) << "\n";
  os << "i,j,x,y,u_exact,u_h,abs_err,residual\n";
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const Point p = grid.node(i, j);
      const double ue = spec.u(p.x, p.y);
      const double res =
          rhs_norm > 0.0 ? std::abs(ax(i, j) - op.rhs(i, j)) / rhs_norm : 0.0;
      os << i << "," << j << "," << fmt_sci(p.x) << "," << fmt_sci(p.y) << "," << fmt_sci(ue)
         << "," << fmt_sci(x(i, j)) << "," << fmt_sci(std::abs(ue - x(i, j))) << ","
         << fmt_sci(op.is_interior(i, j) ? res : 0.0) << "\n";
    }
  }
}

void run_solve_custom(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.ns.front();
  const MaterialPartition partition(cfg.subdomains);
  const Grid grid = build_grid(partition.bounding_box(), n, n);
  const double f0 = *cfg.source_constant;
  const StencilOperator op = assemble_nine_point(grid, partition, *cfg.strategy,
                                                 [f0](double, double) { return f0; });

  SolveOptions opts;
  opts.method = SolverKind::Cg;
  opts.tol = *cfg.tol;
  SolveReport report;
  const NodeField x = solve(op, op.rhs, opts, &report);

  const NodeField ax = op.apply(x);
  double rhs_norm = 0.0;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) rhs_norm = std::max(rhs_norm, std::abs(op.rhs(i, j)));
  }

  // No exact solution for custom partitions; the u_exact and abs_err columns
  // hold nan to keep the schema stable.
  os << "# command=solve example=custom N=" << n << " strategy=" << to_string(*cfg.strategy)
     << " solver=cg iters=" << report.iterations
     << " rel_residual=" << fmt_sci(report.rel_residual) << "\n";
  os << "i,j,x,y,u_exact,u_h,abs_err,residual\n";
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const Point p = grid.node(i, j);
      const double res =
          rhs_norm > 0.0 ? std::abs(ax(i, j) - op.rhs(i, j)) / rhs_norm : 0.0;
      os << i << "," << j << "," << fmt_sci(p.x) << "," << fmt_sci(p.y) << ",nan,"
         << fmt_sci(x(i, j)) << ",nan," << fmt_sci(op.is_interior(i, j) ? res : 0.0) << "\n";
    }
  }
}

int run_study(const RunConfig& cfg, std::ostream& os) {
  const ExactSolutionSpec spec = builtin_example(*cfg.example, *cfg.kappa_minus);
  const ConvergenceReport report =
      convergence_study(spec, *cfg.strategy, *cfg.solver, cfg.ns, *cfg.tol);
  write_csv(report, os);
  if (report.aborted) {
    std::cerr << "solver failure: " << report.abort_reason << "\n";
    return 1;
  }
  return 0;
}

void run_truncation(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.ns.front();
  const Grid grid = build_simplified_grid(n);
  const ExactSolutionSpec spec = builtin_example(*cfg.example, *cfg.kappa_minus);
  const MaterialPartition partition = MaterialPartition::simplified(spec.kappa_minus);
  const double kappa_star =
      cell_kappa(partition, grid.cell(grid.interface_column(), 0), *cfg.strategy);
  const StencilOperator op =
      assemble_five_point(grid, spec.kappa_minus, kappa_star, spec.f, RhsRule::PointValue);
  const NodeField r = truncation_residual(grid, op, spec);

  const double h = grid.hx();
  os << "# command=truncation example=" << *cfg.example << " N=" << n
     << " kappa_minus=" << fmt_sci(spec.kappa_minus) << " strategy=" << to_string(*cfg.strategy)
     << " kappa_star=" << fmt_sci(kappa_star) << "\n";
  os << "i,j,class,R,R_over_h,R_over_h2,R_over_h4\n";
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      const double v = r(i, j);
      os << i << "," << j << "," << to_string(classify_node(grid, i, j)) << "," << fmt_sci(v)
         << "," << fmt_sci(v / h) << "," << fmt_sci(v / (h * h)) << ","
         << fmt_sci(v / (h * h * h * h)) << "\n";
    }
  }
}

void run_diagnostics(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.ns.front();
  const double km = *cfg.kappa_minus;
  const Grid grid = build_simplified_grid(n);
  const MaterialPartition partition = MaterialPartition::simplified(km);
  const double kappa_star =
      cell_kappa(partition, grid.cell(grid.interface_column(), 0), *cfg.strategy);
  const int m = grid.interface_column();
  const double h = grid.hx();

  os << "# command=diagnostics N=" << n << " kappa_minus=" << fmt_sci(km)
     << " strategy=" << to_string(*cfg.strategy) << " kappa_star=" << fmt_sci(kappa_star) << "\n";
  os << "k,lambda_1,lambda_kappa_minus,delta_1,delta_kappa_minus,margin\n";
  for (int k = 1; k < n; ++k) {
    const RecurrenceDiagnostics d1 = mode_diagnostics(1.0, kappa_star, k, n);
    const RecurrenceDiagnostics dk = mode_diagnostics(km, kappa_star, k, n);
    double margin;
    if (k <= m) {
      margin = std::min(dk.delta - d1.delta, d1.delta - (kappa_star + k * h));
    } else {
      margin = std::min(d1.delta - dk.delta, -d1.delta - (kappa_star + (n - k) * h));
    }
    os << k << "," << fmt_sci(d1.lambda) << "," << fmt_sci(dk.lambda) << ","
       << fmt_sci(d1.delta) << "," << fmt_sci(dk.delta) << "," << fmt_sci(margin) << "\n";
  }
}

}  // namespace

int run_to_stream(const RunConfig& config, std::ostream& os) {
  switch (*config.command) {
    case Command::Solve:
      if (*config.example == 0) {
        run_solve_custom(config, os);
      } else {
        run_solve_builtin(config, os);
      }
      return 0;
    case Command::Study:
      return run_study(config, os);
    case Command::Truncation:
      run_truncation(config, os);
      return 0;
    case Command::Diagnostics:
      run_diagnostics(config, os);
      return 0;
  }
  return 2;
}

int run(const RunConfig& config) {
  try {
    std::ostringstream buffer;
    const int code = run_to_stream(config, buffer);
    std::ofstream out(*config.out, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open output file " << *config.out << "\n";
      return 2;
    }
    out << buffer.str();
    return code;
  } catch (const SolveFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace machfvm
