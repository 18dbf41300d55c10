#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "machfvm/field.hpp"

namespace machfvm {

enum class RhsRule {
  PointValue,   // rhs_{i,j} = hx*hy * f(x_i, y_j)
  CellAverage,  // rhs_{i,j} = hx*hy * (2x2 Gauss average of f over the control volume)
};

/// Sparse operator with one nine-entry coefficient row per interior node and
/// identity rows (homogeneous Dirichlet) on the boundary. Coefficients are
/// ordered by neighbour offset:
///   0:(-1,-1) 1:(0,-1) 2:(+1,-1) 3:(-1,0) 4:(0,0) 5:(+1,0) 6:(-1,+1) 7:(0,+1) 8:(+1,+1)
/// The assembled right-hand side travels with the operator.
class StencilOperator {
 public:
  static constexpr std::array<std::pair<int, int>, 9> kOffsets = {{
      {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1},
  }};

  StencilOperator() = default;
  StencilOperator(int nx, int ny, double hx, double hy);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  bool is_interior(int i, int j) const {
    return i > 0 && i < nx_ && j > 0 && j < ny_;
  }

  const std::array<double, 9>& row(int i, int j) const { return rows_[idx(i, j)]; }
  std::array<double, 9>& row(int i, int j) { return rows_[idx(i, j)]; }

  /// Applies the operator; boundary rows pass the field value through.
  NodeField apply(const NodeField& field) const;

  /// True when every interior row has the "x" five-point structure
  /// (axis-neighbour coefficients exactly zero).
  bool is_five_point() const;

  /// Matrix-market-style triplet dump (1-based indices, node p = j*(nx+1)+i+1).
  void write_triplets(std::ostream& os) const;

  NodeField rhs;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * (nx_ + 1) + i;
  }

  int nx_ = 0;
  int ny_ = 0;
  double hx_ = 0.0;
  double hy_ = 0.0;
  std::vector<std::array<double, 9>> rows_;
};

/// (L_h u) at interior nodes; identity on the boundary.
NodeField apply_stencil(const StencilOperator& op, const NodeField& field);

}  // namespace machfvm
