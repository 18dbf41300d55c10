#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "machfvm/field.hpp"
#include "machfvm/grid.hpp"
#include "machfvm/materials.hpp"
#include "machfvm/solver.hpp"
#include "machfvm/stencil.hpp"

namespace machfvm {

using ScalarFn = std::function<double(double, double)>;
using TraceFn = std::function<double(double)>;  // one-sided limit at x = 1/2, function of y

/// Manufactured solution for the simplified two-material model: the exact
/// solution, the matching source f = -div(kappa grad u) + u, one-sided
/// interface traces up to third order, and the interior fourth derivatives.
/// Every built-in instance is hand-derived in closed form and cross-checked
/// by validate_solution_spec before use.
struct ExactSolutionSpec {
  std::string name;
  double kappa_minus = 1.0;

  ScalarFn u;
  ScalarFn f;

  TraceFn du_dx_minus, du_dx_plus;
  TraceFn d2u_dx2_minus, d2u_dx2_plus;
  TraceFn d2u_dy2_minus, d2u_dy2_plus;
  TraceFn d3u_dx3_minus, d3u_dx3_plus;
  TraceFn d3u_dy2dx_minus, d3u_dy2dx_plus;

  ScalarFn d4u_dx4, d4u_dy4, d4u_dx2dy2;
};

/// The two built-in manufactured solutions (id 1 violates the vanishing
/// tangential-curvature condition at the interface, id 2 satisfies it).
ExactSolutionSpec builtin_example(int id, double kappa_minus);

/// Smooth single-material reference (kappa == 1, u = sin(pi x) sin(pi y)).
ExactSolutionSpec smooth_reference_spec();

/// Consistency oracle: checks the jump conditions, the flux continuity of
/// the traces, trace-vs-finite-difference agreement, and f against a
/// fourth-order finite-difference Laplacian of u at sampled off-interface
/// points (relative tolerance 1e-8). Throws std::runtime_error on failure.
void validate_solution_spec(const ExactSolutionSpec& spec);

/// Local truncation residual R_{i,j} = (L_h u)(x_i, y_j) - h^2 f(x_i, y_j)
/// at interior nodes (zero on the boundary), with u sampled exactly.
NodeField truncation_residual(const Grid& grid, const StencilOperator& op,
                              const ExactSolutionSpec& spec);

/// Leading truncation coefficients at the two interface columns, evaluated
/// at ordinate y from the solution's one-sided traces.
struct TruncationCoefficients {
  double c1_left = 0.0;        // h-order, column M
  double c1_right = 0.0;       // h-order, column M+1 (= -c1_left)
  double c2_left = 0.0;        // h^2-order, column M
  double c2_right = 0.0;       // h^2-order, column M+1
  double c2_tilde_left = 0.0;  // h^2-order under the reduced form
  double c2_tilde_right = 0.0;
  double c3_left = 0.0;  // h^3-order
  double c3_right = 0.0;
};

TruncationCoefficients truncation_coefficients(const ExactSolutionSpec& spec, double kappa_minus,
                                               double kappa_star, double y);

/// Interior fourth-order coefficient:
/// -(1/12) (d4u/dy4 + d4u/dx4 + 6 d4u/dx2dy2) at (x, y).
double interior_c4(const ExactSolutionSpec& spec, double x, double y);

/// max over all nodes of |u(x_i, y_j) - computed_{i,j}|.
double max_norm_error(const NodeField& computed, const ExactSolutionSpec& spec, const Grid& grid);

struct ConvergenceRow {
  int n = 0;
  double error_max = 0.0;
  double ratio = 0.0;  // error(previous)/error(this); 0 for the first row
};

struct ConvergenceReport {
  std::string example;
  double kappa_minus = 1.0;
  AverageStrategy strategy = AverageStrategy::Harmonic;
  SolverKind solver = SolverKind::DstDirect;
  std::vector<ConvergenceRow> rows;
  bool aborted = false;
  std::string abort_reason;
};

/// Solves the five-point scheme for each N, recording max-norm errors and
/// successive error ratios. Ns must follow the N -> 2N+1 refinement chain.
/// A solver failure stops the study and returns the partial report.
ConvergenceReport convergence_study(const ExactSolutionSpec& spec, AverageStrategy strategy,
                                    SolverKind solver, const std::vector<int>& ns,
                                    double tol = 1e-12);

/// CSV with a metadata comment line and header N,error_max,ratio.
void write_csv(const ConvergenceReport& report, std::ostream& os);

}  // namespace machfvm
