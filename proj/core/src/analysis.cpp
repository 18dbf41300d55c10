#include "machfvm/analysis.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "machfvm/assembly.hpp"
#include "machfvm/csv.hpp"
#include "machfvm/errors.hpp"

namespace machfvm {

namespace {

constexpr double kPi = std::numbers::pi;

double side_kappa(double kappa_minus, double x) { return x < 0.5 ? kappa_minus : 1.0; }

}  // namespace

ExactSolutionSpec builtin_example(int id, double kappa_minus) {
  if (id != 1 && id != 2) {
    throw std::invalid_argument("builtin_example: id must be 1 or 2");
  }
  if (!(kappa_minus >= 1.0)) {
    throw std::invalid_argument("builtin_example: kappa_minus must be >= 1");
  }

  ExactSolutionSpec s;
  s.kappa_minus = kappa_minus;
  const double km = kappa_minus;

  if (id == 1) {
    // u = sin(pi x) sin(pi y) ((x - 1/2)/kappa + 1), with kappa piecewise.
    s.name = "example-1";
    s.u = [km](double x, double y) {
      const double ks = side_kappa(km, x);
      return std::sin(kPi * x) * std::sin(kPi * y) * ((x - 0.5) / ks + 1.0);
    };
    // f = sin(pi y) [ (2 pi^2 kappa + 1) sin(pi x) g - 2 pi cos(pi x) ],
    // g = (x - 1/2)/kappa + 1.
    s.f = [km](double x, double y) {
      const double ks = side_kappa(km, x);
      const double g = (x - 0.5) / ks + 1.0;
      return std::sin(kPi * y) *
             ((2.0 * kPi * kPi * ks + 1.0) * std::sin(kPi * x) * g - 2.0 * kPi * std::cos(kPi * x));
    };

    s.du_dx_minus = [km](double y) { return std::sin(kPi * y) / km; };
    s.du_dx_plus = [](double y) { return std::sin(kPi * y); };
    s.d2u_dx2_minus = [](double y) { return -kPi * kPi * std::sin(kPi * y); };
    s.d2u_dx2_plus = s.d2u_dx2_minus;
    s.d2u_dy2_minus = [](double y) { return -kPi * kPi * std::sin(kPi * y); };
    s.d2u_dy2_plus = s.d2u_dy2_minus;
    s.d3u_dx3_minus = [km](double y) { return -3.0 * kPi * kPi * std::sin(kPi * y) / km; };
    s.d3u_dx3_plus = [](double y) { return -3.0 * kPi * kPi * std::sin(kPi * y); };
    s.d3u_dy2dx_minus = [km](double y) { return -kPi * kPi * std::sin(kPi * y) / km; };
    s.d3u_dy2dx_plus = [](double y) { return -kPi * kPi * std::sin(kPi * y); };

    s.d4u_dx4 = [km](double x, double y) {
      const double ks = side_kappa(km, x);
      const double g = (x - 0.5) / ks + 1.0;
      const double p3 = kPi * kPi * kPi;
      return std::sin(kPi * y) *
             (p3 * kPi * std::sin(kPi * x) * g - 4.0 * p3 * std::cos(kPi * x) / ks);
    };
    s.d4u_dy4 = [km](double x, double y) {
      const double ks = side_kappa(km, x);
      const double g = (x - 0.5) / ks + 1.0;
      return kPi * kPi * kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y) * g;
    };
    s.d4u_dx2dy2 = [km](double x, double y) {
      const double ks = side_kappa(km, x);
      const double g = (x - 0.5) / ks + 1.0;
      return -kPi * kPi * std::sin(kPi * y) *
             (-kPi * kPi * std::sin(kPi * x) * g + 2.0 * kPi * std::cos(kPi * x) / ks);
    };
    return s;
  }

  // Example 2: u = (1/kappa) sin(pi x) sin(pi y) (x - 1/2) y (y - 1) (1 + x^2 + y^2)
  // written as u = A(x) B(y) w(x,y) / kappa with
  //   A = sin(pi x)(x - 1/2), B = sin(pi y)(y^2 - y), w = 1 + x^2 + y^2.
  s.name = "example-2";

  struct Parts {
    double a, a1, a2, a3, a4;  // A and derivatives
    double b, b1, b2, b3, b4;  // B and derivatives
    double w;
  };
  const auto parts = [](double x, double y) {
    Parts p;
    const double sx = std::sin(kPi * x), cx = std::cos(kPi * x);
    const double sy = std::sin(kPi * y), cy = std::cos(kPi * y);
    const double xm = x - 0.5, yq = y * y - y;
    const double p2 = kPi * kPi, p3 = p2 * kPi, p4 = p2 * p2;
    p.a = sx * xm;
    p.a1 = kPi * cx * xm + sx;
    p.a2 = -p2 * sx * xm + 2.0 * kPi * cx;
    p.a3 = -p3 * cx * xm - 3.0 * p2 * sx;
    p.a4 = p4 * sx * xm - 4.0 * p3 * cx;
    p.b = sy * yq;
    p.b1 = kPi * cy * yq + sy * (2.0 * y - 1.0);
    p.b2 = -p2 * sy * yq + 2.0 * kPi * cy * (2.0 * y - 1.0) + 2.0 * sy;
    p.b3 = -p3 * cy * yq - 3.0 * p2 * sy * (2.0 * y - 1.0) + 6.0 * kPi * cy;
    p.b4 = p4 * sy * yq - 4.0 * p3 * cy * (2.0 * y - 1.0) - 12.0 * p2 * sy;
    p.w = 1.0 + x * x + y * y;
    return p;
  };

  s.u = [km, parts](double x, double y) {
    const Parts p = parts(x, y);
    return p.a * p.b * p.w / side_kappa(km, x);
  };
  // f = -Laplacian(A B w) + u; the kappa of the side cancels against the
  // 1/kappa in u inside the flux term.
  s.f = [km, parts](double x, double y) {
    const Parts p = parts(x, y);
    const double pxx = p.b * (p.a2 * p.w + 4.0 * x * p.a1 + 2.0 * p.a);
    const double pyy = p.a * (p.b2 * p.w + 4.0 * y * p.b1 + 2.0 * p.b);
    return -(pxx + pyy) + p.a * p.b * p.w / side_kappa(km, x);
  };

  // At x = 1/2: A = 0, A' = 1, A'' = 0, A''' = -3 pi^2, w = 5/4 + y^2.
  const auto w_half = [](double y) { return 1.25 + y * y; };
  const auto b_of = [parts](double y) { return parts(0.5, y); };

  s.du_dx_minus = [km, b_of, w_half](double y) { return b_of(y).b * w_half(y) / km; };
  s.du_dx_plus = [b_of, w_half](double y) { return b_of(y).b * w_half(y); };
  s.d2u_dx2_minus = [km, b_of](double y) { return 2.0 * b_of(y).b / km; };
  s.d2u_dx2_plus = [b_of](double y) { return 2.0 * b_of(y).b; };
  s.d2u_dy2_minus = [](double) { return 0.0; };
  s.d2u_dy2_plus = [](double) { return 0.0; };
  s.d3u_dx3_minus = [km, b_of, w_half](double y) {
    return b_of(y).b * (6.0 - 3.0 * kPi * kPi * w_half(y)) / km;
  };
  s.d3u_dx3_plus = [b_of, w_half](double y) {
    return b_of(y).b * (6.0 - 3.0 * kPi * kPi * w_half(y));
  };
  s.d3u_dy2dx_minus = [km, b_of, w_half](double y) {
    const Parts p = b_of(y);
    return (p.b2 * w_half(y) + 4.0 * y * p.b1 + 2.0 * p.b) / km;
  };
  s.d3u_dy2dx_plus = [b_of, w_half](double y) {
    const Parts p = b_of(y);
    return p.b2 * w_half(y) + 4.0 * y * p.b1 + 2.0 * p.b;
  };

  s.d4u_dx4 = [km, parts](double x, double y) {
    const Parts p = parts(x, y);
    return p.b * (p.a4 * p.w + 8.0 * x * p.a3 + 12.0 * p.a2) / side_kappa(km, x);
  };
  s.d4u_dy4 = [km, parts](double x, double y) {
    const Parts p = parts(x, y);
    return p.a * (p.b4 * p.w + 8.0 * y * p.b3 + 12.0 * p.b2) / side_kappa(km, x);
  };
  s.d4u_dx2dy2 = [km, parts](double x, double y) {
    const Parts p = parts(x, y);
    const double gxx = p.a2 * p.w + 4.0 * x * p.a1 + 2.0 * p.a;
    return (p.b2 * gxx + 4.0 * y * p.b1 * p.a2 + 2.0 * p.b * p.a2) / side_kappa(km, x);
  };
  return s;
}

ExactSolutionSpec smooth_reference_spec() {
  ExactSolutionSpec s;
  s.name = "smooth-reference";
  s.kappa_minus = 1.0;
  const double p2 = kPi * kPi;
  s.u = [](double x, double y) { return std::sin(kPi * x) * std::sin(kPi * y); };
  s.f = [p2](double x, double y) {
    return (2.0 * p2 + 1.0) * std::sin(kPi * x) * std::sin(kPi * y);
  };
  s.du_dx_minus = [](double) { return 0.0; };
  s.du_dx_plus = [](double) { return 0.0; };
  s.d2u_dx2_minus = [p2](double y) { return -p2 * std::sin(kPi * y); };
  s.d2u_dx2_plus = s.d2u_dx2_minus;
  s.d2u_dy2_minus = s.d2u_dx2_minus;
  s.d2u_dy2_plus = s.d2u_dx2_minus;
  s.d3u_dx3_minus = [](double) { return 0.0; };
  s.d3u_dx3_plus = [](double) { return 0.0; };
  s.d3u_dy2dx_minus = [](double) { return 0.0; };
  s.d3u_dy2dx_plus = [](double) { return 0.0; };
  s.d4u_dx4 = [p2](double x, double y) {
    return p2 * p2 * std::sin(kPi * x) * std::sin(kPi * y);
  };
  s.d4u_dy4 = s.d4u_dx4;
  s.d4u_dx2dy2 = s.d4u_dx4;
  return s;
}

namespace {

// Fourth-order finite-difference second derivative along one axis.
double fd_second(const ScalarFn& u, double x, double y, double h, bool along_x) {
  const auto at = [&](double t) { return along_x ? u(x + t, y) : u(x, y + t); };
  return (-at(-2.0 * h) + 16.0 * at(-h) - 30.0 * at(0.0) + 16.0 * at(h) - at(2.0 * h)) /
         (12.0 * h * h);
}

}  // namespace

void validate_solution_spec(const ExactSolutionSpec& spec) {
  const double km = spec.kappa_minus;

  // Continuity of u across the interface: one-sided linear extrapolations to
  // x = 1/2 from both sides must meet (second-order in the offset).
  {
    const double d = 1e-5;
    for (int t = 1; t <= 9; ++t) {
      const double y = 0.1 * t;
      const double left = spec.u(0.5 - d, y) + d * spec.du_dx_minus(y);
      const double right = spec.u(0.5 + d, y) - d * spec.du_dx_plus(y);
      if (std::abs(left - right) > 1e-8) {
        throw std::runtime_error("solution spec: [u] != 0 at the interface, y=" +
                                 std::to_string(y));
      }
      // Flux continuity of the stated traces: kappa^- (du/dx)^- == (du/dx)^+.
      const double flux_gap = km * spec.du_dx_minus(y) - spec.du_dx_plus(y);
      if (std::abs(flux_gap) > 1e-12 * (1.0 + std::abs(spec.du_dx_plus(y)))) {
        throw std::runtime_error("solution spec: flux jump [kappa du/dx] != 0 at y=" +
                                 std::to_string(y));
      }
    }
  }

  // Traces against one-sided finite differences, Taylor-corrected back to
  // the interface. Validates the x-derivative ladder and the tangential pair.
  {
    const double zeta = 1e-3;  // evaluation offset into each side
    const double d = 1e-4;     // difference step (stencil stays one-sided)
    for (int t = 1; t <= 4; ++t) {
      const double y = 0.2 * t;
      for (int side = 0; side < 2; ++side) {
        const double sgn = side == 0 ? -1.0 : 1.0;
        const double x0 = 0.5 + sgn * zeta;
        const double ux_fd = (spec.u(x0 + d, y) - spec.u(x0 - d, y)) / (2.0 * d);
        const double ux_trace = side == 0 ? spec.du_dx_minus(y) : spec.du_dx_plus(y);
        const double uxx_trace = side == 0 ? spec.d2u_dx2_minus(y) : spec.d2u_dx2_plus(y);
        const double uxxx_trace = side == 0 ? spec.d3u_dx3_minus(y) : spec.d3u_dx3_plus(y);
        const double ux_taylor =
            ux_trace + sgn * zeta * uxx_trace + 0.5 * zeta * zeta * uxxx_trace;
        const double scale = 1.0 + std::abs(ux_taylor);
        if (std::abs(ux_fd - ux_taylor) > 1e-5 * scale) {
          throw std::runtime_error("solution spec: du/dx trace mismatch on side " +
                                   std::to_string(side));
        }
        const double uyy_fd = fd_second(spec.u, x0, y, d, /*along_x=*/false);
        const double uyy_trace = side == 0 ? spec.d2u_dy2_minus(y) : spec.d2u_dy2_plus(y);
        const double uyyx_trace = side == 0 ? spec.d3u_dy2dx_minus(y) : spec.d3u_dy2dx_plus(y);
        const double uyy_taylor = uyy_trace + sgn * zeta * uyyx_trace;
        if (std::abs(uyy_fd - uyy_taylor) > 1e-4 * (1.0 + std::abs(uyy_taylor))) {
          throw std::runtime_error("solution spec: d2u/dy2 trace mismatch on side " +
                                   std::to_string(side));
        }
      }
    }
  }

  // f against -kappa * Laplacian(u) + u with a fourth-order FD Laplacian at
  // seeded off-interface points.
  {
    std::mt19937 rng(20260808u);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    const double h = 3e-3;
    int checked = 0;
    while (checked < 100) {
      const double x = unif(rng);
      const double y = unif(rng);
      if (std::abs(x - 0.5) < 0.05) continue;  // keep the stencil one-sided
      ++checked;
      const double ks = side_kappa(km, x);
      const double lap = fd_second(spec.u, x, y, h, true) + fd_second(spec.u, x, y, h, false);
      const double f_fd = -ks * lap + spec.u(x, y);
      const double f_stated = spec.f(x, y);
      const double scale = std::max(1.0, std::abs(f_stated));
      if (std::abs(f_fd - f_stated) > 1e-8 * scale) {
        throw std::runtime_error("solution spec: f inconsistent with -kappa lap(u) + u at (" +
                                 std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
}

NodeField truncation_residual(const Grid& grid, const StencilOperator& op,
                              const ExactSolutionSpec& spec) {
  if (!grid.simplified_model()) {
    throw std::invalid_argument("truncation_residual: requires a simplified-model grid");
  }
  if (op.nx() != grid.nx() || op.ny() != grid.ny()) {
    throw std::invalid_argument("truncation_residual: operator/grid shape mismatch");
  }
  validate_solution_spec(spec);

  const int n = grid.n();
  NodeField exact(n, n, 0.0);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const Point p = grid.node(i, j);
      exact(i, j) = spec.u(p.x, p.y);
    }
  }
  const NodeField lu = op.apply(exact);
  const double h2 = grid.hx() * grid.hy();
  NodeField r(n, n, 0.0);
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      const Point p = grid.node(i, j);
      r(i, j) = lu(i, j) - h2 * spec.f(p.x, p.y);
    }
  }
  return r;
}

TruncationCoefficients truncation_coefficients(const ExactSolutionSpec& spec, double kappa_minus,
                                               double kappa_star, double y) {
  TruncationCoefficients c;
  const double km = kappa_minus;
  const double ks = kappa_star;

  const double ux_m = spec.du_dx_minus(y);
  const double uxx_m = spec.d2u_dx2_minus(y);
  const double uxx_p = spec.d2u_dx2_plus(y);
  const double uyy_m = spec.d2u_dy2_minus(y);
  const double uyy_p = spec.d2u_dy2_plus(y);
  const double uxxx_m = spec.d3u_dx3_minus(y);
  const double uxxx_p = spec.d3u_dx3_plus(y);
  const double uyyx_m = spec.d3u_dy2dx_minus(y);
  const double uyyx_p = spec.d3u_dy2dx_plus(y);

  const double jump_uxx = uxx_m - uxx_p;
  const double mean_uxxx = 0.5 * (uxxx_m + uxxx_p);

  c.c1_left = (km - 0.5 * ks - 0.5 * ks * km) * ux_m;
  c.c1_right = -c.c1_left;

  c.c2_left = 0.125 * ks * jump_uxx + 0.5 * (km * uyy_m - ks * uyy_p);
  c.c2_right = -0.125 * ks * jump_uxx + 0.5 * (uyy_p - ks * uyy_m);

  c.c2_tilde_left = 0.125 * ks * jump_uxx;
  c.c2_tilde_right = -c.c2_tilde_left;

  c.c3_left = km / 24.0 * uxxx_m - ks / 24.0 * mean_uxxx + 0.25 * (km * uyyx_m - ks * uyyx_p);
  c.c3_right = -uxxx_p / 24.0 + ks / 24.0 * mean_uxxx + 0.25 * (-uyyx_p + ks * uyyx_m);
  return c;
}

double interior_c4(const ExactSolutionSpec& spec, double x, double y) {
  return -(spec.d4u_dy4(x, y) + spec.d4u_dx4(x, y) + 6.0 * spec.d4u_dx2dy2(x, y)) / 12.0;
}

double max_norm_error(const NodeField& computed, const ExactSolutionSpec& spec, const Grid& grid) {
  if (computed.nx() != grid.nx() || computed.ny() != grid.ny()) {
    throw std::invalid_argument("max_norm_error: field/grid shape mismatch");
  }
  double m = 0.0;
  for (int j = 0; j <= grid.ny(); ++j) {
    for (int i = 0; i <= grid.nx(); ++i) {
      const Point p = grid.node(i, j);
      m = std::max(m, std::abs(spec.u(p.x, p.y) - computed(i, j)));
    }
  }
  return m;
}

ConvergenceReport convergence_study(const ExactSolutionSpec& spec, AverageStrategy strategy,
                                    SolverKind solver, const std::vector<int>& ns, double tol) {
  if (ns.empty()) {
    throw std::invalid_argument("convergence_study: empty N list");
  }
  for (std::size_t t = 0; t < ns.size(); ++t) {
    if (ns[t] < 3 || ns[t] % 2 == 0) {
      throw std::invalid_argument("convergence_study: N must be odd and >= 3");
    }
    if (t > 0 && ns[t] != 2 * ns[t - 1] + 1) {
      throw std::invalid_argument("convergence_study: N sequence must refine as N -> 2N+1");
    }
  }

  ConvergenceReport report;
  report.example = spec.name;
  report.kappa_minus = spec.kappa_minus;
  report.strategy = strategy;
  report.solver = solver;

  const MaterialPartition partition = MaterialPartition::simplified(spec.kappa_minus);
  double prev_err = 0.0;
  for (std::size_t t = 0; t < ns.size(); ++t) {
    const int n = ns[t];
    const Grid grid = build_simplified_grid(n);
    const int m = grid.interface_column();
    const double kappa_star = cell_kappa(partition, grid.cell(m, 0), strategy);
    const StencilOperator op =
        assemble_five_point(grid, spec.kappa_minus, kappa_star, spec.f, RhsRule::PointValue);

    SolveOptions opts;
    opts.method = solver;
    opts.tol = tol;
    NodeField x;
    try {
      x = solve(op, op.rhs, opts);
    } catch (const SolveFailure& e) {
      report.aborted = true;
      report.abort_reason = e.what();
      return report;
    }
    const double err = max_norm_error(x, spec, grid);
    ConvergenceRow row;
    row.n = n;
    row.error_max = err;
    row.ratio = t == 0 ? 0.0 : prev_err / err;
    report.rows.push_back(row);
    prev_err = err;
  }
  return report;
}

void write_csv(const ConvergenceReport& report, std::ostream& os) {
  os << "# example=" << report.example << " kappa_minus=" << fmt_sci(report.kappa_minus)
     << " strategy=" << to_string(report.strategy) << " solver=" << to_string(report.solver);
  if (report.aborted) os << " aborted=\"" << report.abort_reason << "\"";
  os << "\n";
  os << "N,error_max,ratio\n";
  for (const auto& row : report.rows) {
    os << row.n << "," << fmt_sci(row.error_max) << ",";
    if (row.ratio != 0.0) os << fmt_sci(row.ratio);
    os << "\n";
  }
}

}  // namespace machfvm
