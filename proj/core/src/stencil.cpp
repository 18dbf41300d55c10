#include "machfvm/stencil.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace machfvm {

double max_abs_diff(const NodeField& a, const NodeField& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("max_abs_diff: field shapes differ");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

StencilOperator::StencilOperator(int nx, int ny, double hx, double hy)
    : nx_(nx), ny_(ny), hx_(hx), hy_(hy), rows_(static_cast<std::size_t>(nx + 1) * (ny + 1)) {
  rhs = NodeField(nx, ny, 0.0);
  std::array<double, 9> identity{};
  identity[4] = 1.0;
  for (auto& r : rows_) r = identity;
}

NodeField StencilOperator::apply(const NodeField& field) const {
  if (field.nx() != nx_ || field.ny() != ny_) {
    throw std::invalid_argument("apply_stencil: field shape does not match operator");
  }
  NodeField out(nx_, ny_, 0.0);
  for (int j = 0; j <= ny_; ++j) {
    for (int i = 0; i <= nx_; ++i) {
      if (!is_interior(i, j)) {
        out(i, j) = field(i, j);
        continue;
      }
      const auto& a = row(i, j);
      double acc = 0.0;
      for (int m = 0; m < 9; ++m) {
        acc += a[m] * field(i + kOffsets[m].first, j + kOffsets[m].second);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

bool StencilOperator::is_five_point() const {
  for (int j = 1; j < ny_; ++j) {
    for (int i = 1; i < nx_; ++i) {
      const auto& a = row(i, j);
      if (a[1] != 0.0 || a[3] != 0.0 || a[5] != 0.0 || a[7] != 0.0) return false;
    }
  }
  return true;
}

void StencilOperator::write_triplets(std::ostream& os) const {
  char buf[96];
  const auto node_id = [this](int i, int j) { return j * (nx_ + 1) + i + 1; };
  for (int j = 0; j <= ny_; ++j) {
    for (int i = 0; i <= nx_; ++i) {
      if (!is_interior(i, j)) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", node_id(i, j), node_id(i, j), 1.0);
        os << buf;
        continue;
      }
      const auto& a = row(i, j);
      for (int m = 0; m < 9; ++m) {
        if (a[m] == 0.0) continue;
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", node_id(i, j),
                      node_id(i + kOffsets[m].first, j + kOffsets[m].second), a[m]);
        os << buf;
      }
    }
  }
}

NodeField apply_stencil(const StencilOperator& op, const NodeField& field) {
  return op.apply(field);
}

}  // namespace machfvm
