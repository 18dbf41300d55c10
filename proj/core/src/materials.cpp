#include "machfvm/materials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "machfvm/errors.hpp"

namespace machfvm {

MaterialPartition::MaterialPartition(std::vector<Subdomain> subdomains)
    : subdomains_(std::move(subdomains)) {
  if (subdomains_.empty()) {
    throw std::invalid_argument("partition: needs at least one subdomain");
  }
  double covered = 0.0;
  bbox_ = subdomains_.front().region;
  for (const auto& s : subdomains_) {
    if (!(s.kappa > 0.0)) {
      throw std::invalid_argument("partition: diffusion coefficients must be positive");
    }
    if (s.region.width() <= 0.0 || s.region.height() <= 0.0) {
      throw std::invalid_argument("partition: degenerate subdomain rectangle");
    }
    bbox_.x0 = std::min(bbox_.x0, s.region.x0);
    bbox_.y0 = std::min(bbox_.y0, s.region.y0);
    bbox_.x1 = std::max(bbox_.x1, s.region.x1);
    bbox_.y1 = std::max(bbox_.y1, s.region.y1);
    covered += s.region.area();
  }
  // Interiors must be disjoint ...
  for (std::size_t a = 0; a + 1 < subdomains_.size(); ++a) {
    for (std::size_t b = a + 1; b < subdomains_.size(); ++b) {
      const Rect& ra = subdomains_[a].region;
      const Rect& rb = subdomains_[b].region;
      const double ox = std::min(ra.x1, rb.x1) - std::max(ra.x0, rb.x0);
      const double oy = std::min(ra.y1, rb.y1) - std::max(ra.y0, rb.y0);
      if (ox > 0.0 && oy > 0.0) {
        throw std::invalid_argument("partition: subdomain interiors overlap");
      }
    }
  }
  // ... and the closures must cover the bounding box.
  if (std::abs(covered - bbox_.area()) > 1e-12 * bbox_.area()) {
    throw std::invalid_argument("partition: subdomains do not cover the domain");
  }
}

MaterialPartition MaterialPartition::simplified(double kappa_minus) {
  if (!(kappa_minus >= 1.0)) {
    throw std::invalid_argument("partition: simplified model requires kappa_minus >= 1");
  }
  return MaterialPartition({
      Subdomain{Rect{0.0, 0.0, 0.5, 1.0}, kappa_minus},
      Subdomain{Rect{0.5, 0.0, 1.0, 1.0}, 1.0},
  });
}

double MaterialPartition::kappa_at(Point p) const {
  const Subdomain* hit = nullptr;
  int hits = 0;
  for (const auto& s : subdomains_) {
    if (s.region.contains_closed(p)) {
      ++hits;
      hit = &s;
    }
  }
  if (hits == 0) {
    throw std::out_of_range("kappa_at: point outside the domain");
  }
  if (hits > 1) {
    throw OnInterfaceError("kappa_at: point lies on a material interface");
  }
  return hit->kappa;
}

const char* to_string(AverageStrategy s) {
  return s == AverageStrategy::Arithmetic ? "arithmetic" : "harmonic";
}

double cell_kappa(const MaterialPartition& partition, const Quad& cell, AverageStrategy strategy) {
  const double cell_area = std::abs(polygon_area(cell));
  if (!(cell_area > 0.0)) {
    throw std::invalid_argument("cell_kappa: degenerate cell");
  }

  struct Piece {
    double theta;
    double kappa;
  };
  std::vector<Piece> pieces;
  double total = 0.0;
  for (const auto& s : partition.subdomains()) {
    const auto clipped = clip_polygon_rect(cell, s.region);
    if (clipped.size() < 3) continue;
    const double a = std::abs(polygon_area(clipped));
    if (a <= 0.0) continue;
    const double theta = a / cell_area;
    pieces.push_back({theta, s.kappa});
    total += theta;
  }
  if (pieces.empty() || std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("cell_kappa: cell is not covered by the partition");
  }
  if (pieces.size() == 1) {
    return pieces.front().kappa;  // single material, independent of strategy
  }
  if (strategy == AverageStrategy::Arithmetic) {
    double acc = 0.0;
    for (const auto& p : pieces) acc += p.theta * p.kappa;
    return acc;
  }
  double acc = 0.0;
  for (const auto& p : pieces) acc += p.theta / p.kappa;
  return 1.0 / acc;
}

double half_cell_arithmetic(double kappa_minus) { return 0.5 * (kappa_minus + 1.0); }

double half_cell_harmonic(double kappa_minus) {
  return 2.0 * kappa_minus / (kappa_minus + 1.0);
}

}  // namespace machfvm
