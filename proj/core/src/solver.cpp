#include "machfvm/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "machfvm/errors.hpp"
#include "machfvm/spectral.hpp"

namespace machfvm {

const char* to_string(SolverKind s) { return s == SolverKind::Cg ? "cg" : "dst"; }

std::vector<double> solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> sup, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || rhs.size() != n || sub.size() + 1 != n || sup.size() + 1 != n) {
    throw std::invalid_argument("solve_tridiagonal: inconsistent band lengths");
  }
  std::vector<double> c(n - 1), d(n), x(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
  if (n > 1) c[0] = sup[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i - 1] * c[i - 1];
    if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    if (i + 1 < n) c[i] = sup[i] / pivot;
    d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / pivot;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = d[i] - c[i] * x[i + 1];
  }
  return x;
}

namespace {

double dot_interior(const StencilOperator& op, const NodeField& a, const NodeField& b) {
  double acc = 0.0;
  for (int j = 1; j < op.ny(); ++j) {
    for (int i = 1; i < op.nx(); ++i) {
      acc += a(i, j) * b(i, j);
    }
  }
  return acc;
}

double rel_residual_norm(const StencilOperator& op, const NodeField& x, const NodeField& b) {
  const NodeField ax = op.apply(x);
  double rn = 0.0;
  double bn = 0.0;
  for (int j = 1; j < op.ny(); ++j) {
    for (int i = 1; i < op.nx(); ++i) {
      const double r = b(i, j) - ax(i, j);
      rn += r * r;
      bn += b(i, j) * b(i, j);
    }
  }
  return bn > 0.0 ? std::sqrt(rn / bn) : std::sqrt(rn);
}

}  // namespace

NodeField solve_cg(const StencilOperator& op, const NodeField& rhs, const SolveOptions& opts,
                   SolveReport* report) {
  if (rhs.nx() != op.nx() || rhs.ny() != op.ny()) {
    throw std::invalid_argument("solve_cg: rhs shape does not match operator");
  }
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("solve_cg: tolerance must be positive");
  }
  const int nx = op.nx();
  const int ny = op.ny();
  const int max_iters =
      opts.max_iters > 0 ? opts.max_iters : 10 * std::max(nx, ny) * std::max(nx, ny);

  NodeField x(nx, ny, 0.0);
  NodeField r = rhs;
  // Dirichlet rows pin the boundary to zero; CG runs on the interior block,
  // which is symmetric positive definite.
  for (int i = 0; i <= nx; ++i) { r(i, 0) = 0.0; r(i, ny) = 0.0; }
  for (int j = 0; j <= ny; ++j) { r(0, j) = 0.0; r(nx, j) = 0.0; }

  const double bnorm2 = dot_interior(op, r, r);
  if (bnorm2 == 0.0) {
    if (report) *report = {SolverKind::Cg, 0, 0.0};
    return x;
  }
  const double target2 = opts.tol * opts.tol * bnorm2;

  NodeField z(nx, ny, 0.0);
  const auto precondition = [&](const NodeField& v, NodeField& out) {
    for (int j = 1; j < ny; ++j) {
      for (int i = 1; i < nx; ++i) {
        out(i, j) = v(i, j) / op.row(i, j)[4];
      }
    }
  };

  precondition(r, z);
  NodeField p = z;
  double rz = dot_interior(op, r, z);
  double rr = bnorm2;

  int it = 0;
  while (rr > target2 && it < max_iters) {
    const NodeField ap = op.apply(p);
    const double pap = dot_interior(op, p, ap);
    if (!(pap > 0.0)) {
      throw SolveFailure("solve_cg: operator is not positive definite on the interior block", it,
                         std::sqrt(rr / bnorm2));
    }
    const double alpha = rz / pap;
    for (int j = 1; j < ny; ++j) {
      for (int i = 1; i < nx; ++i) {
        x(i, j) += alpha * p(i, j);
        r(i, j) -= alpha * ap(i, j);
      }
    }
    ++it;
    if (opts.on_iterate) opts.on_iterate(it, x);
    rr = dot_interior(op, r, r);
    if (rr <= target2) break;
    precondition(r, z);
    const double rz_next = dot_interior(op, r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (int j = 1; j < ny; ++j) {
      for (int i = 1; i < nx; ++i) {
        p(i, j) = z(i, j) + beta * p(i, j);
      }
    }
  }

  const double achieved = std::sqrt(rr / bnorm2);
  if (rr > target2) {
    throw SolveFailure("solve_cg: no convergence within " + std::to_string(max_iters) +
                           " iterations (rel residual " + std::to_string(achieved) + ")",
                       it, achieved);
  }
  if (report) *report = {SolverKind::Cg, it, achieved};
  return x;
}

NodeField solve_dst_direct(const StencilOperator& op, const NodeField& rhs, SolveReport* report) {
  if (rhs.nx() != op.nx() || rhs.ny() != op.ny()) {
    throw std::invalid_argument("solve_dst_direct: rhs shape does not match operator");
  }
  const int n = op.nx();
  if (op.ny() != n || n % 2 == 0) {
    throw std::invalid_argument("solve_dst_direct: requires a square grid with odd N");
  }
  if (op.hx() != op.hy()) {
    throw std::invalid_argument("solve_dst_direct: requires hx == hy");
  }
  if (!op.is_five_point()) {
    throw std::invalid_argument("solve_dst_direct: operator is not a five-point \"x\" stencil");
  }

  // Extract the per-column pair coefficients; rows must not vary along y.
  std::vector<double> c_west(n, 0.0), c_east(n, 0.0), diag(n, 0.0);
  for (int i = 1; i < n; ++i) {
    const auto& a0 = op.row(i, 1);
    if (a0[0] != a0[6] || a0[2] != a0[8]) {
      throw std::invalid_argument("solve_dst_direct: diagonal pairs are not symmetric in y");
    }
    c_west[i] = -2.0 * a0[0];
    c_east[i] = -2.0 * a0[2];
    diag[i] = a0[4];
    for (int j = 2; j < n; ++j) {
      const auto& a = op.row(i, j);
      if (a[0] != a0[0] || a[2] != a0[2] || a[4] != a0[4] || a[6] != a0[6] || a[8] != a0[8]) {
        throw std::invalid_argument("solve_dst_direct: coefficients vary along y");
      }
    }
  }

  const DstContext dst(n);
  const double h = dst.h();
  const int m = n - 1;  // interior count per direction

  // Forward transform of every column of the right-hand side.
  std::vector<double> fbar(static_cast<std::size_t>(m) * m);
  std::vector<double> col(m);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) col[j - 1] = rhs(i, j);
    const auto t = dst.forward(col);
    for (int k = 1; k < n; ++k) fbar[static_cast<std::size_t>(i - 1) * m + (k - 1)] = t[k - 1];
  }

  // One tridiagonal solve in x per mode.
  std::vector<double> sub(m - 1), sup(m - 1), dia(m), b(m);
  std::vector<double> ubar(static_cast<std::size_t>(m) * m);
  for (int k = 1; k < n; ++k) {
    const double ck = std::cos(k * std::numbers::pi * h);
    for (int i = 1; i < n; ++i) {
      dia[i - 1] = diag[i];
      b[i - 1] = fbar[static_cast<std::size_t>(i - 1) * m + (k - 1)];
      if (i > 1) sub[i - 2] = -c_west[i] * ck;
      if (i < n - 1) sup[i - 1] = -c_east[i] * ck;
    }
    const auto xk = solve_tridiagonal(sub, dia, sup, b);
    for (int i = 1; i < n; ++i) ubar[static_cast<std::size_t>(i - 1) * m + (k - 1)] = xk[i - 1];
  }

  // Inverse transform per column.
  NodeField x(n, n, 0.0);
  for (int i = 1; i < n; ++i) {
    for (int k = 1; k < n; ++k) col[k - 1] = ubar[static_cast<std::size_t>(i - 1) * m + (k - 1)];
    const auto t = dst.inverse(col);
    for (int j = 1; j < n; ++j) x(i, j) = t[j - 1];
  }

  if (report) {
    *report = {SolverKind::DstDirect, 1, rel_residual_norm(op, x, rhs)};
  }
  return x;
}

NodeField solve(const StencilOperator& op, const NodeField& rhs, const SolveOptions& opts,
                SolveReport* report) {
  if (opts.method == SolverKind::DstDirect) {
    return solve_dst_direct(op, rhs, report);
  }
  return solve_cg(op, rhs, opts, report);
}

}  // namespace machfvm
