// Acceptance suite: runs the release criteria end to end and prints one
// PASS/FAIL line per criterion (optionally a single criterion by number).
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "machfvm/analysis.hpp"
#include "machfvm/assembly.hpp"
#include "machfvm/grid.hpp"
#include "machfvm/materials.hpp"
#include "machfvm/solver.hpp"
#include "machfvm/spectral.hpp"
#include "machfvm/stencil.hpp"
#include "support/dense.hpp"

using namespace machfvm;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(const std::string& what) { notes.push_back(what); }
};

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

bool within_band(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

ConvergenceReport run_study(int example, double km, AverageStrategy s, SolverKind solver) {
  const auto spec = builtin_example(example, km);
  return convergence_study(spec, s, solver, {33, 67, 135, 271});
}

void check_error_column(Criterion& c, const ConvergenceReport& rep,
                        const std::vector<double>& targets, const std::string& label) {
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const double err = rep.rows[t].error_max;
    c.require(within_band(err, targets[t], 0.10),
              label + " N=" + std::to_string(rep.rows[t].n) + " error " + sci(err) +
                  " not within 10% of " + sci(targets[t]));
  }
}

struct InterfaceScan {
  double interior_over_h4 = 0.0;
  double interface_over_h = 0.0;
  double interface_over_h2 = 0.0;
};

InterfaceScan scan_residual(int example, double km, AverageStrategy s, int n) {
  const auto spec = builtin_example(example, km);
  const Grid g = build_simplified_grid(n);
  const auto part = MaterialPartition::simplified(km);
  const double ks = cell_kappa(part, g.cell(g.interface_column(), 0), s);
  const auto op = assemble_five_point(g, km, ks, spec.f);
  const NodeField r = truncation_residual(g, op, spec);
  const double h = g.hx();

  InterfaceScan out;
  double max_i = 0.0, max_b = 0.0;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      const auto cls = classify_node(g, i, j);
      const double v = std::abs(r(i, j));
      if (cls == NodeClass::Interior1 || cls == NodeClass::Interior2) {
        max_i = std::max(max_i, v);
      } else {
        max_b = std::max(max_b, v);
      }
    }
  }
  out.interior_over_h4 = max_i / (h * h * h * h);
  out.interface_over_h = max_b / h;
  out.interface_over_h2 = max_b / (h * h);
  return out;
}

double variation(double a, double b) { return std::abs(b / a - 1.0); }

// ----- criteria -------------------------------------------------------------

Criterion criterion1() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = run_study(2, 1e6, AverageStrategy::Harmonic, SolverKind::DstDirect);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  check_error_column(c, rep, {4.70e-4, 1.14e-4, 2.81e-5, 6.98e-6}, "ex2/harmonic");
  const std::vector<double> ratio_targets{4.12, 4.06, 4.03};
  for (std::size_t t = 0; t < ratio_targets.size(); ++t) {
    const double ratio = rep.rows[t + 1].ratio;
    c.require(std::abs(ratio - ratio_targets[t]) <= 0.15,
              "ratio " + sci(ratio) + " not within 0.15 of " + sci(ratio_targets[t]));
  }
  c.require(seconds <= 60.0, "runtime " + sci(seconds) + "s exceeds 60s");
  c.info("runtime " + sci(seconds) + "s");
  return c;
}

Criterion criterion2() {
  Criterion c;
  const auto arith = run_study(1, 1e4, AverageStrategy::Arithmetic, SolverKind::DstDirect);
  const auto harm = run_study(1, 1e4, AverageStrategy::Harmonic, SolverKind::DstDirect);
  check_error_column(c, arith, {1.65e-2, 7.81e-3, 3.79e-3, 1.87e-3}, "ex1/arithmetic");
  check_error_column(c, harm, {4.64e-2, 2.21e-2, 1.08e-2, 5.35e-3}, "ex1/harmonic");
  for (const auto& rep : {arith, harm}) {
    for (std::size_t t = 1; t < rep.rows.size(); ++t) {
      c.require(rep.rows[t].ratio >= 1.9 && rep.rows[t].ratio <= 2.2,
                "ratio " + sci(rep.rows[t].ratio) + " outside [1.9, 2.2]");
    }
  }
  return c;
}

Criterion criterion3() {
  Criterion c;
  const auto rep = run_study(2, 1e6, AverageStrategy::Arithmetic, SolverKind::DstDirect);
  check_error_column(c, rep, {5.80e-3, 2.85e-3, 1.41e-3, 7.02e-4}, "ex2/arithmetic");
  for (std::size_t t = 1; t < rep.rows.size(); ++t) {
    c.require(rep.rows[t].ratio >= 1.9 && rep.rows[t].ratio <= 2.2,
              "ratio " + sci(rep.rows[t].ratio) + " outside [1.9, 2.2]");
  }
  return c;
}

Criterion criterion4() {
  Criterion c;

  // Interior truncation order: max_SI |R|/h^4 stable within 10% (both examples).
  for (int example : {1, 2}) {
    const double km = example == 1 ? 1e4 : 1e6;
    const auto s33 = scan_residual(example, km, AverageStrategy::Harmonic, 33);
    const auto s67 = scan_residual(example, km, AverageStrategy::Harmonic, 67);
    const double var = variation(s33.interior_over_h4, s67.interior_over_h4);
    c.require(var < 0.10, "ex" + std::to_string(example) + " interior |R|/h^4 varies " +
                              sci(100 * var) + "% (>= 10%)");
  }

  // Example 2 + harmonic: interface |R|/h^2 stable within 15%.
  {
    const auto s33 = scan_residual(2, 1e6, AverageStrategy::Harmonic, 33);
    const auto s67 = scan_residual(2, 1e6, AverageStrategy::Harmonic, 67);
    const double var = variation(s33.interface_over_h2, s67.interface_over_h2);
    c.require(var < 0.15,
              "ex2/harmonic interface |R|/h^2 varies " + sci(100 * var) + "% (>= 15%)");
    const auto s135 = scan_residual(2, 1e6, AverageStrategy::Harmonic, 135);
    c.info("supplementary: ex2/harmonic |R|/h^2 varies " +
           sci(100 * variation(s67.interface_over_h2, s135.interface_over_h2)) +
           "% between N=67 and 135");
  }

  // Example 1 + harmonic: interface |R|/h stable within 15%.
  {
    const auto s33 = scan_residual(1, 1e4, AverageStrategy::Harmonic, 33);
    const auto s67 = scan_residual(1, 1e4, AverageStrategy::Harmonic, 67);
    const double var = variation(s33.interface_over_h, s67.interface_over_h);
    c.require(var < 0.15,
              "ex1/harmonic interface |R|/h varies " + sci(100 * var) + "% (>= 15%)");
    const auto a33 = scan_residual(1, 1e4, AverageStrategy::Arithmetic, 33);
    const auto a67 = scan_residual(1, 1e4, AverageStrategy::Arithmetic, 67);
    c.info("supplementary: ex1/arithmetic |R|/h varies " +
           sci(100 * variation(a33.interface_over_h, a67.interface_over_h)) +
           "% between N=33 and 67");
  }

  // Harmonic averaging zeroes the h-order interface coefficient.
  {
    const auto spec = builtin_example(1, 1e4);
    std::mt19937 rng(811);
    std::uniform_real_distribution<double> kd(1.0, 1e6);
    for (int t = 0; t < 20; ++t) {
      const double km = kd(rng);
      const auto coeff = truncation_coefficients(spec, km, half_cell_harmonic(km), 0.41);
      const double scale = km * std::max(1.0, std::abs(spec.du_dx_minus(0.41)));
      c.require(std::abs(coeff.c1_left) <= 8e-16 * scale,
                "C1 under harmonic kappa* not zero to machine precision (kappa=" + sci(km) + ")");
    }
    for (double km : {1.0, 3.0, 7.0}) {
      const auto coeff = truncation_coefficients(spec, km, half_cell_harmonic(km), 0.41);
      c.require(coeff.c1_left == 0.0,
                "C1 not exactly zero for representable harmonic pair kappa=" + sci(km));
    }
  }
  return c;
}

Criterion criterion5() {
  Criterion c;
  for (int n : {33, 67}) {
    for (int example : {1, 2}) {
      const double km = example == 1 ? 1e4 : 1e6;
      const auto spec = builtin_example(example, km);
      const Grid g = build_simplified_grid(n);
      const auto part = MaterialPartition::simplified(km);
      for (auto strategy : {AverageStrategy::Arithmetic, AverageStrategy::Harmonic}) {
        const double ks = cell_kappa(part, g.cell(g.interface_column(), 0), strategy);
        const auto op = assemble_five_point(g, km, ks, spec.f);
        const NodeField xd = solve_dst_direct(op, op.rhs);
        const NodeField xc = solve_cg(op, op.rhs, SolveOptions{});
        const double rel = max_abs_diff(xd, xc) / xd.max_abs();
        c.require(rel <= 1e-8, "dst vs cg rel diff " + sci(rel) + " at N=" + std::to_string(n) +
                                   " ex" + std::to_string(example) + "/" + to_string(strategy));
      }
    }
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  for (int k_dim : {4, 10, 50}) {
    for (double beta : {2.1, -2.1, 2.5, -2.5, 5.0, -5.0, 100.0, -100.0}) {
      const auto inv = testsupport::dense_inverse(testsupport::toeplitz_tridiagonal(k_dim, beta));
      for (int i = 1; i <= k_dim; ++i) {
        double row_max = 0.0;
        for (int j = 1; j <= k_dim; ++j) {
          const double closed = trid_inverse_entry(beta, k_dim, i, j);
          if (std::abs(closed - inv(i - 1, j - 1)) > 1e-10) {
            c.require(false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") K=" + std::to_string(k_dim) + " beta=" + sci(beta) +
                                 " differs from dense inverse by " +
                                 sci(std::abs(closed - inv(i - 1, j - 1))));
          }
          row_max = std::max(row_max, std::abs(closed));
        }
        const double diag = std::abs(trid_inverse_entry(beta, k_dim, i, i));
        c.require(diag >= row_max * (1.0 - 1e-13), "diagonal is not the row max");
      }
      c.require(trid_inverse_entry(beta, k_dim, k_dim, k_dim) < 1.0, "t(K,K) >= 1");
    }
  }
  return c;
}

Criterion criterion7() {
  Criterion c;
  for (double km : {1.0, 1e4, 1e6}) {
    const double ks = half_cell_harmonic(km);
    for (int n : {9, 33, 65}) {
      const double h = 1.0 / n;
      const int m = (n - 1) / 2;
      for (int k = 1; k < n; ++k) {
        const auto dk = delta_theta(km, ks, k, n).delta;
        const auto d1 = delta_theta(1.0, ks, k, n).delta;
        const std::string tag = " (kappa=" + sci(km) + " N=" + std::to_string(n) +
                                " k=" + std::to_string(k) + ")";
        if (k <= m) {
          c.require(dk >= d1 * (1.0 - 1e-12), "delta_k(kappa) < delta_k(1)" + tag);
          c.require(d1 > ks + k * h, "delta_k(1) <= kappa* + kh" + tag);
        } else {
          c.require(-dk >= -d1 * (1.0 - 1e-12), "-delta_k(kappa) < -delta_k(1)" + tag);
          c.require(-d1 > ks + (n - k) * h, "-delta_k(1) <= kappa* + (N-k)h" + tag);
        }
      }
    }
  }
  return c;
}

Criterion criterion8() {
  Criterion c;

  // Operator symmetry (exact) for random coefficient fields.
  {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> nd(2, 31);
    std::uniform_real_distribution<double> kd(1e-2, 1e6);
    for (int trial = 0; trial < 6; ++trial) {
      const int nx = nd(rng), ny = nd(rng);
      const Grid g = build_grid(Rect{0, 0, 1, 0.75}, nx, ny);
      std::vector<double> kappa(static_cast<std::size_t>(nx) * ny);
      for (auto& k : kappa) k = kd(rng);
      const auto op = assemble_nine_point(
          g, [&](int ci, int cj) { return kappa[static_cast<std::size_t>(cj) * nx + ci]; },
          [](double, double) { return 0.0; });
      for (int j = 1; j < ny; ++j) {
        for (int i = 1; i < nx; ++i) {
          for (int mo = 0; mo < 9; ++mo) {
            const int qi = i + StencilOperator::kOffsets[mo].first;
            const int qj = j + StencilOperator::kOffsets[mo].second;
            if (qi <= 0 || qi >= nx || qj <= 0 || qj >= ny) continue;
            const double back = op.row(qi, qj)[8 - mo];  // reversed offset
            c.require(op.row(i, j)[mo] == back, "operator symmetry broken");
          }
        }
      }
    }
  }

  // Row sums equal h^2 to 1e-14 relative to the row scale.
  {
    for (double km : {1.0, 1e2, 1e6}) {
      const Grid g = build_simplified_grid(19);
      const auto op = assemble_five_point(g, km, half_cell_harmonic(km),
                                          [](double, double) { return 0.0; });
      const double h2 = g.hx() * g.hy();
      for (int j = 1; j < 19; ++j) {
        for (int i = 1; i < 19; ++i) {
          const auto& row = op.row(i, j);
          double sum = 0.0;
          for (double a : row) sum += a;
          c.require(std::abs(sum - h2) <= 1e-14 * std::max(1.0, std::abs(row[4])),
                    "row sum differs from h^2 at (" + std::to_string(i) + "," +
                        std::to_string(j) + ") kappa=" + sci(km));
        }
      }
    }
  }

  // Nine-point assembly with the same cell coefficients degenerates to the
  // five-point operator exactly.
  {
    const double km = 1e4;
    const auto part = MaterialPartition::simplified(km);
    for (int n : {9, 17}) {
      const Grid g = build_simplified_grid(n);
      const int m_col = g.interface_column();
      for (auto strategy : {AverageStrategy::Arithmetic, AverageStrategy::Harmonic}) {
        const double ks = cell_kappa(part, g.cell(m_col, 0), strategy);
        const auto nine = assemble_nine_point(
            g, [&](int ci, int) { return ci < m_col ? km : (ci == m_col ? ks : 1.0); },
            [](double, double) { return 0.0; });
        const auto five = assemble_five_point(g, km, ks, [](double, double) { return 0.0; });
        for (int j = 1; j < n; ++j) {
          for (int i = 1; i < n; ++i) {
            for (int mo = 0; mo < 9; ++mo) {
              c.require(nine.row(i, j)[mo] == five.row(i, j)[mo],
                        "nine-point row differs from five-point row");
            }
          }
        }
      }
    }
  }

  // Checkerboard-decoupled solves match the full solve.
  {
    const int n = 17;
    const double km = 1e4;
    const auto spec = builtin_example(1, km);
    const Grid g = build_simplified_grid(n);
    const auto op = assemble_five_point(g, km, half_cell_harmonic(km), spec.f);
    const NodeField full = solve_dst_direct(op, op.rhs);
    NodeField sum(n, n, 0.0);
    for (int parity = 0; parity < 2; ++parity) {
      NodeField masked(n, n, 0.0);
      for (int j = 1; j < n; ++j) {
        for (int i = 1; i < n; ++i) {
          if ((i + j) % 2 == parity) masked(i, j) = op.rhs(i, j);
        }
      }
      const NodeField xp = solve_dst_direct(op, masked);
      for (int j = 1; j < n; ++j) {
        for (int i = 1; i < n; ++i) {
          if ((i + j) % 2 != parity) {
            c.require(std::abs(xp(i, j)) <= 1e-12, "masked solve leaks across parity");
          }
          sum(i, j) += xp(i, j);
        }
      }
    }
    c.require(max_abs_diff(sum, full) <= 1e-12, "parity solves do not sum to the full solve");
  }

  // DST round trip.
  {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int n : {9, 65, 271}) {
      const DstContext ctx(n);
      std::vector<double> e(n - 1);
      for (auto& v : e) v = xd(rng);
      const auto back = ctx.inverse(ctx.forward(e));
      double dmax = 0.0;
      for (int t = 0; t < n - 1; ++t) dmax = std::max(dmax, std::abs(back[t] - e[t]));
      c.require(dmax <= 1e-13, "dst roundtrip error " + sci(dmax) + " at N=" + std::to_string(n));
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  using CriterionFn = Criterion (*)();
  const std::vector<std::pair<const char*, CriterionFn>> criteria = {
      {"1 optimal-order table (ex2, harmonic, N=33..271)", criterion1},
      {"2 first-order table (ex1, both averagings)", criterion2},
      {"3 arithmetic column of the optimal-order table", criterion3},
      {"4 truncation orders and harmonic cancellation", criterion4},
      {"5 dst vs cg cross-validation", criterion5},
      {"6 closed-form tridiagonal inverse vs dense oracle", criterion6},
      {"7 delta_k inequality margins", criterion7},
      {"8 structural operator properties", criterion8},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (std::size_t t = 0; t < criteria.size(); ++t) {
    if (only > 0 && static_cast<int>(t + 1) != only) continue;
    const Criterion c = criteria[t].second();
    std::printf("[%s] criterion %s\n", c.ok ? "PASS" : "FAIL", criteria[t].first);
    for (const auto& note : c.notes) {
      std::printf("       %s\n", note.c_str());
    }
    if (!c.ok) ++failures;
  }
  return failures;
}
