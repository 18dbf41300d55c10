#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace machfvm {

/// Scalar value per grid node, stored x-fastest.
class NodeField {
 public:
  NodeField() = default;
  NodeField(int nx, int ny, double value = 0.0)
      : nx_(nx), ny_(ny), v_(static_cast<std::size_t>(nx + 1) * (ny + 1), value) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return v_.size(); }
  bool same_shape(const NodeField& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }

  double operator()(int i, int j) const { return v_[idx(i, j)]; }
  double& operator()(int i, int j) { return v_[idx(i, j)]; }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * (nx_ + 1) + i;
  }

  int nx_ = 0;
  int ny_ = 0;
  std::vector<double> v_;
};

/// max_{i,j} |a - b|.
double max_abs_diff(const NodeField& a, const NodeField& b);

}  // namespace machfvm
