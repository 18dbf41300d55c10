#pragma once

#include <span>
#include <vector>

namespace machfvm {

/// Discrete sine transform on the interior ordinates y_j = j/N, j = 1..N-1.
/// With the sqrt(2h) scaling the transform is its own inverse. Computed by
/// direct summation; N stays small enough here that the O(N^2) sum is both
/// fast and bit-stable.
class DstContext {
 public:
  explicit DstContext(int n);

  int n() const { return n_; }
  double h() const { return h_; }

  /// sin(j*pi*y_k) = sin(j*k*pi/N).
  double kernel(int j, int k) const { return sin_table_[static_cast<std::size_t>(j) * k % period_]; }

  std::vector<double> forward(std::span<const double> seq) const;
  std::vector<double> inverse(std::span<const double> seq) const;

 private:
  int n_;
  std::size_t period_;  // 2N
  double h_;
  std::vector<double> sin_table_;  // sin(m*pi/N), m = 0..2N-1
};

std::vector<double> dst_forward(const DstContext& ctx, std::span<const double> seq);
std::vector<double> dst_inverse(const DstContext& ctx, std::span<const double> seq);

/// Z_j(lambda) = lambda^j - lambda^-j.
double z_function(double lambda, int j);

/// Z_j(lambda) / Z_i(lambda), stable for |lambda| > 1 and large indices.
double z_ratio(double lambda, int j, int i);

/// Root of lambda^2 - beta*lambda + 1 = 0 with |lambda| > 1; requires |beta| > 2.
double lambda_from_beta(double beta);

/// Characteristic root of the mode-k three-term recurrence with coefficient
/// omega: the |lambda| > 1 root for beta = (2*omega + h^2)/(omega*cos(k*pi*h)).
double char_root_lambda(double omega, int k, int n);

/// Entry (i,j), 1-based, of the inverse of the KxK tridiagonal matrix with
/// diagonal beta and off-diagonals -1, via the closed form
/// Z_{K-i+1} Z_j / (Z_{K+1} Z_1) (j <= i; transpose-symmetric otherwise).
double trid_inverse_entry(double beta, int k_dim, int i, int j);

/// Closed-form diagnostics of the interface coupling for mode k:
///   Theta_k(omega) = omega*(1/cos(k*pi*h) - Z_{M-1}(lambda_k)/Z_M(lambda_k))
///   delta_k(omega) = Theta_k(omega) + (kappa_star + h^2)/cos(k*pi*h)
struct RecurrenceDiagnostics {
  int k = 0;
  double omega = 1.0;
  double lambda = 0.0;
  double theta = 0.0;
  double delta = 0.0;
};

RecurrenceDiagnostics mode_diagnostics(double omega, double kappa_star, int k, int n);

/// (delta_k, Theta_k) pair.
struct DeltaTheta {
  double delta = 0.0;
  double theta = 0.0;
};

DeltaTheta delta_theta(double omega, double kappa_star, int k, int n);

}  // namespace machfvm
