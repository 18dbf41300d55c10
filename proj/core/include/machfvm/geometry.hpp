#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace machfvm {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Axis-aligned rectangle (x0,x1)×(y0,y1).
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool contains_closed(Point p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

/// Quadrilateral given by its corners in cyclic order.
using Quad = std::array<Point, 4>;

/// Signed area by the shoelace formula; positive for counterclockwise order.
double polygon_area(std::span<const Point> poly);

/// Clips a convex polygon against the four half-planes of an axis-aligned
/// rectangle (Sutherland–Hodgman). The result is exact for vertices already
/// inside the rectangle: they are passed through untouched.
std::vector<Point> clip_polygon_rect(std::span<const Point> poly, const Rect& r);

}  // namespace machfvm
