#include "machfvm/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace machfvm {

Grid::Grid(Rect domain, int nx, int ny, bool simplified_model)
    : domain_(domain), nx_(nx), ny_(ny), simplified_(simplified_model) {
  if (nx < 2 || ny < 2) {
    throw std::invalid_argument("grid: cell counts must be >= 2, got nx=" + std::to_string(nx) +
                                " ny=" + std::to_string(ny));
  }
  if (domain.width() <= 0.0 || domain.height() <= 0.0) {
    throw std::invalid_argument("grid: domain rectangle is degenerate");
  }
  if (simplified_) {
    if (nx != ny) {
      throw std::invalid_argument("grid: simplified model requires nx == ny");
    }
    if (nx % 2 == 0) {
      throw std::invalid_argument("N must be odd (simplified model uses N = 2M+1)");
    }
  }
  hx_ = domain.width() / nx;
  hy_ = domain.height() / ny;
}

int Grid::n() const {
  if (!simplified_) {
    throw std::logic_error("grid: N is defined only for simplified-model grids");
  }
  return nx_;
}

int Grid::interface_column() const {
  return (n() - 1) / 2;
}

Quad Grid::cell(int ci, int cj) const {
  if (ci < 0 || ci >= nx_ || cj < 0 || cj >= ny_) {
    throw std::out_of_range("grid: cell index out of range");
  }
  return Quad{node(ci, cj), node(ci + 1, cj), node(ci + 1, cj + 1), node(ci, cj + 1)};
}

Grid build_grid(Rect domain, int nx, int ny) { return Grid(domain, nx, ny); }

Grid build_simplified_grid(int n) {
  return Grid(Rect{0.0, 0.0, 1.0, 1.0}, n, n, /*simplified_model=*/true);
}

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Boundary: return "Boundary";
    case NodeClass::Interior1: return "Interior1";
    case NodeClass::Interior2: return "Interior2";
    case NodeClass::InterfaceLeft: return "InterfaceLeft";
    case NodeClass::InterfaceRight: return "InterfaceRight";
  }
  return "?";
}

NodeClass classify_node(const Grid& grid, int i, int j) {
  if (!grid.simplified_model()) {
    throw std::logic_error("classify_node: grid is not in simplified-model mode");
  }
  if (!grid.in_range(i, j)) {
    throw std::out_of_range("classify_node: node index out of range");
  }
  if (grid.is_boundary(i, j)) return NodeClass::Boundary;
  const int m = grid.interface_column();
  if (i < m) return NodeClass::Interior1;
  if (i == m) return NodeClass::InterfaceLeft;
  if (i == m + 1) return NodeClass::InterfaceRight;
  return NodeClass::Interior2;
}

ControlVolume control_volume(const Grid& grid, int i, int j) {
  if (!grid.in_range(i, j)) {
    throw std::out_of_range("control_volume: node index out of range");
  }
  if (grid.is_boundary(i, j)) {
    throw std::invalid_argument("control_volume: defined for interior nodes only");
  }

  ControlVolume cv;
  cv.center = grid.node(i, j);
  const Point x = cv.center;
  // Midpoints of the grid edges toward (i,j-1), (i+1,j), (i,j+1), (i-1,j).
  cv.edge_midpoint[0] = 0.5 * (x + grid.node(i, j - 1));
  cv.edge_midpoint[1] = 0.5 * (x + grid.node(i + 1, j));
  cv.edge_midpoint[2] = 0.5 * (x + grid.node(i, j + 1));
  cv.edge_midpoint[3] = 0.5 * (x + grid.node(i - 1, j));

  for (int l = 0; l < 4; ++l) {
    const Point& prev = cv.edge_midpoint[(l + 3) % 4];  // O_{l-1}, O_0 = O_4
    const Point& cur = cv.edge_midpoint[l];
    cv.corner[l] = prev + cur - x;  // parallelogram X O_{l-1} A_l O_l

    const Point d = cur - prev;
    const double len = std::hypot(d.x, d.y);
    cv.chord_length[l] = len;
    // Outward normal of the chord: rotate the chord vector and orient away
    // from the center node.
    Vec2 nrm{d.y / len, -d.x / len};
    const Point mid = 0.5 * (prev + cur);
    if (nrm.x * (mid.x - x.x) + nrm.y * (mid.y - x.y) < 0.0) {
      nrm.x = -nrm.x;
      nrm.y = -nrm.y;
    }
    cv.chord_normal[l] = nrm;
  }

  // Octagon A1 O1 A2 O2 A3 O3 A4 O4.
  std::array<Point, 8> oct;
  for (int l = 0; l < 4; ++l) {
    oct[2 * l] = cv.corner[l];
    oct[2 * l + 1] = cv.edge_midpoint[l];
  }
  cv.area = std::abs(polygon_area(oct));
  return cv;
}

}  // namespace machfvm
