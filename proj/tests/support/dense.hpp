#pragma once

// Small dense linear-algebra helpers used as independent oracles in tests.
// Deliberately naive: partial-pivot LU, O(n^3), no dependence on the solver
// code under test.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace testsupport {

class DenseMatrix {
 public:
  DenseMatrix(int n, double value = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, value) {}

  int n() const { return n_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

 private:
  int n_;
  std::vector<double> a_;
};

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b) {
  const int n = a.n();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("dense_solve: size mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    }
    if (a(piv, col) == 0.0) throw std::runtime_error("dense_solve: singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }
  return x;
}

/// Full inverse by n solves against unit vectors.
inline DenseMatrix dense_inverse(const DenseMatrix& a) {
  const int n = a.n();
  DenseMatrix inv(n);
  for (int c = 0; c < n; ++c) {
    std::vector<double> e(n, 0.0);
    e[c] = 1.0;
    const auto x = dense_solve(a, e);
    for (int r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

/// Tridiagonal Toeplitz matrix with diagonal beta and off-diagonals -1.
inline DenseMatrix toeplitz_tridiagonal(int n, double beta) {
  DenseMatrix t(n);
  for (int i = 0; i < n; ++i) {
    t(i, i) = beta;
    if (i > 0) t(i, i - 1) = -1.0;
    if (i + 1 < n) t(i, i + 1) = -1.0;
  }
  return t;
}

}  // namespace testsupport
