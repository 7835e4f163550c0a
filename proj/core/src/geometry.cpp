#include "ncode/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncode {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::string den = "1" + std::string(t.size() - dot - 1, '0');
    t = digits + "/" + den;
  }
  Rational r;
  if (t.empty() || r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational twice_area(const Polygon& p) {
  Rational s = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

std::optional<std::string> polygon_defect(const Polygon& p) {
  const auto& v = p.vertices;
  std::size_t n = v.size();
  if (n < 3) return "fewer than three vertices";
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) return "repeated vertex";
    Rational turn = cross(v[i], v[(i + 1) % n], v[(i + 2) % n]);
    if (turn < 0) return "not counter-clockwise convex";
    if (turn == 0) return "collinear consecutive vertices";
  }
  // A fan around the first vertex rules out polygons that wind more than once.
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (cross(v[0], v[i], v[i + 1]) <= 0) return "self-overlapping";
  return std::nullopt;
}

bool strictly_inside(const Polygon& p, const Point& q) {
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], q) <= 0) return false;
  return true;
}

Polygon convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Polygon{pts};
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return Polygon{h};
}

}  // namespace ncode
