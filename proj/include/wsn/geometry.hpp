#pragma once

#include <cmath>

namespace wsn {

struct Point {
  double x = 0;
  double y = 0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
  Point centroid() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

}  // namespace wsn
