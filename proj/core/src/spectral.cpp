#include "machfvm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace machfvm {

namespace {
constexpr double kPi = std::numbers::pi;
}

DstContext::DstContext(int n) : n_(n), period_(2 * static_cast<std::size_t>(n)), h_(1.0 / n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("dst: N must be odd and >= 3");
  }
  sin_table_.resize(period_);
  for (std::size_t m = 0; m < period_; ++m) {
    sin_table_[m] = std::sin(static_cast<double>(m) * kPi * h_);
  }
}

std::vector<double> DstContext::forward(std::span<const double> seq) const {
  if (seq.size() != static_cast<std::size_t>(n_ - 1)) {
    throw std::invalid_argument("dst: sequence length must be N-1 = " + std::to_string(n_ - 1));
  }
  const double scale = std::sqrt(2.0 * h_);
  std::vector<double> out(n_ - 1, 0.0);
  for (int k = 1; k < n_; ++k) {
    double acc = 0.0;
    for (int j = 1; j < n_; ++j) {
      acc += seq[j - 1] * kernel(j, k);
    }
    out[k - 1] = scale * acc;
  }
  return out;
}

std::vector<double> DstContext::inverse(std::span<const double> seq) const {
  return forward(seq);  // self-inverse with the sqrt(2h) scaling
}

std::vector<double> dst_forward(const DstContext& ctx, std::span<const double> seq) {
  return ctx.forward(seq);
}

std::vector<double> dst_inverse(const DstContext& ctx, std::span<const double> seq) {
  return ctx.inverse(seq);
}

double z_function(double lambda, int j) {
  return std::pow(lambda, j) - std::pow(lambda, -j);
}

double z_ratio(double lambda, int j, int i) {
  if (std::abs(lambda) <= 1.0) {
    throw std::domain_error("z_ratio: requires |lambda| > 1");
  }
  if (j == 0) return 0.0;
  // Z_j/Z_i = lambda^{j-i} (1 - |lambda|^{-2j})/(1 - |lambda|^{-2i}); even
  // powers make the correction factors sign-free.
  const double mag = std::abs(lambda);
  const double sign = (lambda < 0.0 && ((j - i) % 2 != 0)) ? -1.0 : 1.0;
  const double head = sign * std::pow(mag, j - i);
  const double num = -std::expm1(-2.0 * j * std::log(mag));
  const double den = -std::expm1(-2.0 * i * std::log(mag));
  return head * num / den;
}

double lambda_from_beta(double beta) {
  const double ab = std::abs(beta);
  if (!(ab > 2.0)) {
    throw std::domain_error("lambda_from_beta: requires |beta| > 2");
  }
  const double mag = 0.5 * ab + std::sqrt(0.25 * ab * ab - 1.0);
  return beta < 0.0 ? -mag : mag;
}

double char_root_lambda(double omega, int k, int n) {
  if (!(omega > 0.0)) {
    throw std::domain_error("char_root_lambda: omega must be positive");
  }
  if (n < 3 || n % 2 == 0 || k < 1 || k > n - 1) {
    throw std::domain_error("char_root_lambda: invalid mode index");
  }
  const double h = 1.0 / n;
  const double c = std::cos(k * kPi * h);
  if (c == 0.0) {
    throw std::domain_error("char_root_lambda: cos(k*pi*h) vanishes");
  }
  const double beta = (2.0 * omega + h * h) / (omega * c);
  return lambda_from_beta(beta);
}

namespace {

// log|Z_m(lambda)| for |lambda| > 1.
double log_abs_z(double log_mag, int m) {
  return m * log_mag + std::log1p(-std::exp(-2.0 * m * log_mag));
}

}  // namespace

double trid_inverse_entry(double beta, int k_dim, int i, int j) {
  if (k_dim < 1) {
    throw std::domain_error("trid_inverse_entry: matrix dimension must be >= 1");
  }
  if (i < 1 || i > k_dim || j < 1 || j > k_dim) {
    throw std::out_of_range("trid_inverse_entry: index out of range");
  }
  const double lambda = lambda_from_beta(beta);  // throws for |beta| <= 2
  const int a = (j <= i) ? (k_dim - i + 1) : i;
  const int b = (j <= i) ? j : (k_dim - j + 1);

  // Z_a Z_b / (Z_{K+1} Z_1) in log magnitude; powers of lambda overflow for
  // large K while the ratio stays bounded.
  const double log_mag = std::log(std::abs(lambda));
  const double lm = log_abs_z(log_mag, a) + log_abs_z(log_mag, b) -
                    log_abs_z(log_mag, k_dim + 1) - log_abs_z(log_mag, 1);
  double sign = 1.0;
  if (lambda < 0.0) {
    const int parity = (a + b - (k_dim + 1) - 1) & 1;
    sign = parity ? -1.0 : 1.0;
  }
  return sign * std::exp(lm);
}

RecurrenceDiagnostics mode_diagnostics(double omega, double kappa_star, int k, int n) {
  RecurrenceDiagnostics d;
  d.k = k;
  d.omega = omega;
  d.lambda = char_root_lambda(omega, k, n);
  const double h = 1.0 / n;
  const double c = std::cos(k * kPi * h);
  const int m = (n - 1) / 2;
  d.theta = omega * (1.0 / c - z_ratio(d.lambda, m - 1, m));
  d.delta = d.theta + (kappa_star + h * h) / c;
  return d;
}

DeltaTheta delta_theta(double omega, double kappa_star, int k, int n) {
  const RecurrenceDiagnostics d = mode_diagnostics(omega, kappa_star, k, n);
  return {d.delta, d.theta};
}

}  // namespace machfvm
