#pragma once

#include <functional>
#include <span>
#include <vector>

#include "machfvm/stencil.hpp"

namespace machfvm {

enum class SolverKind { Cg, DstDirect };

const char* to_string(SolverKind s);

struct SolveOptions {
  SolverKind method = SolverKind::Cg;
  double tol = 1e-12;  // relative residual target
  int max_iters = 0;   // 0 -> 10 * max(nx, ny)^2
  // Optional per-iteration hook (iteration index, current iterate); used by
  // tests that track the error trajectory.
  std::function<void(int, const NodeField&)> on_iterate;
};

struct SolveReport {
  SolverKind method = SolverKind::Cg;
  int iterations = 0;
  double rel_residual = 0.0;
};

/// Thomas elimination. sub/sup have length n-1 (sub[i] couples row i+1 to i,
/// sup[i] couples row i to i+1). Requires a diagonally dominant system;
/// throws on a vanishing pivot.
std::vector<double> solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> sup, std::span<const double> rhs);

/// Jacobi-preconditioned conjugate gradients on the symmetric positive
/// definite interior block; boundary entries are held at zero.
NodeField solve_cg(const StencilOperator& op, const NodeField& rhs, const SolveOptions& opts,
                   SolveReport* report = nullptr);

/// Fast direct solve of a five-point "x" operator whose coefficients are
/// constant along y: sine transform in y decouples the system into one
/// diagonally dominant tridiagonal solve in x per mode.
NodeField solve_dst_direct(const StencilOperator& op, const NodeField& rhs,
                           SolveReport* report = nullptr);

NodeField solve(const StencilOperator& op, const NodeField& rhs, const SolveOptions& opts,
                SolveReport* report = nullptr);

}  // namespace machfvm
