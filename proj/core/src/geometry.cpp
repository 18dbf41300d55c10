#include "machfvm/geometry.hpp"

namespace machfvm {

double polygon_area(std::span<const Point> poly) {
  const std::size_t n = poly.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

namespace {

// Clip against one half-plane {p : side * (coord(p) - bound) <= 0}.
// axis 0 = x, axis 1 = y; side -1 keeps coord >= bound, +1 keeps coord <= bound.
std::vector<Point> clip_halfplane(std::span<const Point> poly, int axis, double bound, int side) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 2);

  auto coord = [axis](const Point& p) { return axis == 0 ? p.x : p.y; };
  auto inside = [&](const Point& p) {
    return side > 0 ? coord(p) <= bound : coord(p) >= bound;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    const bool cur_in = inside(cur);
    const bool nxt_in = inside(nxt);
    if (cur_in) out.push_back(cur);
    if (cur_in != nxt_in) {
      const double denom = coord(nxt) - coord(cur);
      const double t = (bound - coord(cur)) / denom;
      Point cut{cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)};
      if (axis == 0) cut.x = bound; else cut.y = bound;
      out.push_back(cut);
    }
  }
  return out;
}

}  // namespace

std::vector<Point> clip_polygon_rect(std::span<const Point> poly, const Rect& r) {
  std::vector<Point> cur(poly.begin(), poly.end());
  cur = clip_halfplane(cur, 0, r.x0, -1);
  cur = clip_halfplane(cur, 0, r.x1, +1);
  cur = clip_halfplane(cur, 1, r.y0, -1);
  cur = clip_halfplane(cur, 1, r.y1, +1);
  return cur;
}

}  // namespace machfvm
