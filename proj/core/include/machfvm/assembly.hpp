#pragma once

#include <array>
#include <functional>

#include "machfvm/geometry.hpp"
#include "machfvm/grid.hpp"
#include "machfvm/materials.hpp"
#include "machfvm/stencil.hpp"

namespace machfvm {

using SourceFn = std::function<double(double, double)>;

/// Cellwise-constant gradient from corner values by the Green–Gauss edge
/// quadrature; exact for linear fields on any non-degenerate quadrilateral.
Vec2 green_gauss_gradient(const Quad& cell, const std::array<double, 4>& corner_values);

/// Coefficient row of the control-volume flux balance on a uniform
/// rectangular mesh, given the averaged coefficients of the four adjacent
/// cells (k1 = lower-left, k2 = lower-right, k3 = upper-right, k4 = upper-left).
std::array<double, 9> nine_point_row(double hx, double hy, double k1, double k2, double k3,
                                     double k4);

/// Nine-point operator with per-cell coefficients from the material
/// partition under the chosen averaging strategy.
StencilOperator assemble_nine_point(const Grid& grid, const MaterialPartition& partition,
                                    AverageStrategy strategy, const SourceFn& source,
                                    RhsRule rhs_rule = RhsRule::PointValue);

/// Nine-point operator with a caller-supplied coefficient per cell
/// (ci, cj) -> kappa*; used for property tests and custom fields.
StencilOperator assemble_nine_point(const Grid& grid,
                                    const std::function<double(int, int)>& cell_kappa_fn,
                                    const SourceFn& source,
                                    RhsRule rhs_rule = RhsRule::PointValue);

/// Five-point "x" operator of the simplified two-material model. Cell
/// columns left of the interface carry kappa_minus, the bisected column
/// carries kappa_star, columns right of it carry 1.
StencilOperator assemble_five_point(const Grid& grid, double kappa_minus, double kappa_star,
                                    const SourceFn& source,
                                    RhsRule rhs_rule = RhsRule::PointValue);

}  // namespace machfvm
