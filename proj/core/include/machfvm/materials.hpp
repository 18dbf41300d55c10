#pragma once

#include <string>
#include <vector>

#include "machfvm/geometry.hpp"

namespace machfvm {

/// One material region: an axis-aligned rectangle with a constant diffusion
/// coefficient. Axis-aligned polygonal regions are expressed as several
/// rectangles sharing a coefficient.
struct Subdomain {
  Rect region;
  double kappa = 1.0;
};

/// Piecewise-constant diffusion coefficient over a partition of the domain.
/// The coefficient is defined on open subdomains; querying a point on a
/// shared subdomain boundary raises OnInterfaceError.
class MaterialPartition {
 public:
  explicit MaterialPartition(std::vector<Subdomain> subdomains);

  /// Two-material model on the unit square: kappa_minus on (0,1/2)×(0,1),
  /// 1 on (1/2,1)×(0,1). Requires kappa_minus >= 1.
  static MaterialPartition simplified(double kappa_minus);

  const std::vector<Subdomain>& subdomains() const { return subdomains_; }
  const Rect& bounding_box() const { return bbox_; }

  /// Coefficient at a point strictly inside one subdomain.
  double kappa_at(Point p) const;

 private:
  std::vector<Subdomain> subdomains_;
  Rect bbox_;
};

enum class AverageStrategy { Arithmetic, Harmonic };

const char* to_string(AverageStrategy s);

/// Volume-fraction-weighted coefficient for a (possibly multi-material) cell.
/// Area fractions come from exact polygon clipping of the cell against the
/// subdomain rectangles; a single-material cell returns its coefficient
/// unchanged regardless of strategy.
double cell_kappa(const MaterialPartition& partition, const Quad& cell, AverageStrategy strategy);

/// Arithmetic and harmonic averages of a half/half two-material cell,
/// (kappa_minus + 1)/2 and 2*kappa_minus/(kappa_minus + 1).
double half_cell_arithmetic(double kappa_minus);
double half_cell_harmonic(double kappa_minus);

}  // namespace machfvm
