#pragma once

#include <array>

#include "machfvm/geometry.hpp"

namespace machfvm {

/// Uniform structured node lattice over a rectangle. Node coordinates are
/// always computed from the index formula node(i,j) = (a + i*hx, c + j*hy);
/// nothing is tabulated, so the contract is reproducible bit for bit.
///
/// A grid built in simplified-model mode is the unit square with
/// nx = ny = N odd (N = 2M+1) and a vertical material interface at x = 1/2
/// bisecting cell column M; only such grids support node classification.
class Grid {
 public:
  Grid(Rect domain, int nx, int ny, bool simplified_model = false);

  const Rect& domain() const { return domain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  bool simplified_model() const { return simplified_; }

  /// N for the simplified model (nx == ny == N).
  int n() const;
  /// M = (N-1)/2, the node column immediately left of the interface.
  int interface_column() const;

  Point node(int i, int j) const { return {domain_.x0 + i * hx_, domain_.y0 + j * hy_}; }

  bool in_range(int i, int j) const { return i >= 0 && i <= nx_ && j >= 0 && j <= ny_; }
  bool is_boundary(int i, int j) const { return i == 0 || i == nx_ || j == 0 || j == ny_; }

  /// Corners of cell (ci, cj), 0 <= ci < nx, 0 <= cj < ny, in
  /// counterclockwise order starting from the lower-left node.
  Quad cell(int ci, int cj) const;

 private:
  Rect domain_;
  int nx_;
  int ny_;
  double hx_;
  double hy_;
  bool simplified_;
};

Grid build_grid(Rect domain, int nx, int ny);

/// Unit-square grid for the two-material simplified model; rejects even n.
Grid build_simplified_grid(int n);

enum class NodeClass {
  Boundary,        // on the outer boundary
  Interior1,       // interior, i < M (left material)
  Interior2,       // interior, i > M+1 (right material)
  InterfaceLeft,   // interior column i = M
  InterfaceRight,  // interior column i = M+1
};

const char* to_string(NodeClass c);

/// Classifies a node of a simplified-model grid against the interface.
NodeClass classify_node(const Grid& grid, int i, int j);

/// Control volume of an interior node: the octagon spanned by the edge
/// midpoints O1..O4 (toward (i,j-1), (i+1,j), (i,j+1), (i-1,j)) and the
/// parallelogram points A_l = O_{l-1} + O_l - X (O_0 = O_4). Flux chords are
/// the straight segments (O_{l-1}, O_l) with unit outward normals.
struct ControlVolume {
  Point center;
  std::array<Point, 4> edge_midpoint;   // O1..O4
  std::array<Point, 4> corner;          // A1..A4
  std::array<Vec2, 4> chord_normal;     // unit outward normal of chord l
  std::array<double, 4> chord_length;   // |O_{l-1} O_l|
  double area = 0.0;                    // octagon area
};

ControlVolume control_volume(const Grid& grid, int i, int j);

}  // namespace machfvm
