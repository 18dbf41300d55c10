#include "machfvm/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace machfvm {

Vec2 green_gauss_gradient(const Quad& cell, const std::array<double, 4>& corner_values) {
  const double area = polygon_area(cell);
  if (std::abs(area) < 1e-300) {
    throw std::invalid_argument("green_gauss_gradient: zero-area cell");
  }
  // Sum over edges of (mean value on edge) * length * outward normal. For a
  // counterclockwise polygon length*normal of edge (a -> b) is (dy, -dx);
  // a clockwise orientation flips both that vector and the signed area, so
  // the quotient is orientation independent.
  double gx = 0.0;
  double gy = 0.0;
  for (int m = 0; m < 4; ++m) {
    const Point& a = cell[m];
    const Point& b = cell[(m + 1) % 4];
    const double mean = 0.5 * (corner_values[m] + corner_values[(m + 1) % 4]);
    gx += mean * (b.y - a.y);
    gy += mean * (a.x - b.x);
  }
  return {gx / area, gy / area};
}

std::array<double, 9> nine_point_row(double hx, double hy, double k1, double k2, double k3,
                                     double k4) {
  const double p = 0.25 * (hy / hx + hx / hy);
  const double q = 0.25 * (hx / hy - hy / hx);  // zero on square cells
  std::array<double, 9> a{};
  a[0] = -p * k1;
  a[1] = -q * (k1 + k2);
  a[2] = -p * k2;
  a[3] = q * (k1 + k4);  // -(hy/hx - hx/hy)/4 = +q
  a[4] = p * ((k1 + k2) + (k3 + k4)) + hx * hy;
  a[5] = q * (k2 + k3);
  a[6] = -p * k4;
  a[7] = -q * (k3 + k4);
  a[8] = -p * k3;
  return a;
}

namespace {

double control_volume_rhs(const Grid& grid, int i, int j, const SourceFn& f, RhsRule rule) {
  const double hx = grid.hx();
  const double hy = grid.hy();
  const Point x = grid.node(i, j);
  if (rule == RhsRule::PointValue) {
    return hx * hy * f(x.x, x.y);
  }
  // 2x2 tensor-product Gauss average over the rectangular control volume.
  const double dx = hx * 0.5 / std::sqrt(3.0);
  const double dy = hy * 0.5 / std::sqrt(3.0);
  const double avg = 0.25 * (f(x.x - dx, x.y - dy) + f(x.x + dx, x.y - dy) +
                             f(x.x - dx, x.y + dy) + f(x.x + dx, x.y + dy));
  return hx * hy * avg;
}

}  // namespace

StencilOperator assemble_nine_point(const Grid& grid,
                                    const std::function<double(int, int)>& cell_kappa_fn,
                                    const SourceFn& source, RhsRule rhs_rule) {
  StencilOperator op(grid.nx(), grid.ny(), grid.hx(), grid.hy());

  // Cache the averaged coefficient of every cell; rows read four of them.
  std::vector<double> kc(static_cast<std::size_t>(grid.nx()) * grid.ny());
  for (int cj = 0; cj < grid.ny(); ++cj) {
    for (int ci = 0; ci < grid.nx(); ++ci) {
      const double k = cell_kappa_fn(ci, cj);
      if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("assemble_nine_point: nonpositive cell coefficient");
      }
      kc[static_cast<std::size_t>(cj) * grid.nx() + ci] = k;
    }
  }
  const auto cell_k = [&](int ci, int cj) {
    return kc[static_cast<std::size_t>(cj) * grid.nx() + ci];
  };

  for (int j = 1; j < grid.ny(); ++j) {
    for (int i = 1; i < grid.nx(); ++i) {
      const double k1 = cell_k(i - 1, j - 1);  // lower-left cell
      const double k2 = cell_k(i, j - 1);      // lower-right
      const double k3 = cell_k(i, j);          // upper-right
      const double k4 = cell_k(i - 1, j);      // upper-left
      op.row(i, j) = nine_point_row(grid.hx(), grid.hy(), k1, k2, k3, k4);
      op.rhs(i, j) = control_volume_rhs(grid, i, j, source, rhs_rule);
    }
  }
  return op;
}

StencilOperator assemble_nine_point(const Grid& grid, const MaterialPartition& partition,
                                    AverageStrategy strategy, const SourceFn& source,
                                    RhsRule rhs_rule) {
  return assemble_nine_point(
      grid,
      [&](int ci, int cj) { return cell_kappa(partition, grid.cell(ci, cj), strategy); },
      source, rhs_rule);
}

StencilOperator assemble_five_point(const Grid& grid, double kappa_minus, double kappa_star,
                                    const SourceFn& source, RhsRule rhs_rule) {
  if (!grid.simplified_model()) {
    throw std::invalid_argument("assemble_five_point: requires a simplified-model grid");
  }
  if (!(kappa_minus >= 1.0)) {
    throw std::invalid_argument("assemble_five_point: kappa_minus must be >= 1");
  }
  if (!(kappa_star > 0.0)) {
    throw std::invalid_argument("assemble_five_point: kappa_star must be positive");
  }
  const int m = grid.interface_column();
  // Coefficient of a cell column: the interface bisects column m.
  const auto column_kappa = [&](int c) {
    if (c < m) return kappa_minus;
    if (c == m) return kappa_star;
    return 1.0;
  };
  return assemble_nine_point(
      grid, [&](int ci, int /*cj*/) { return column_kappa(ci); }, source, rhs_rule);
}

}  // namespace machfvm
