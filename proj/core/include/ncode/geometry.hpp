#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ncode {

using Rational = mpq_class;

// "p/q"; integers keep the "/1".
std::string to_string(const Rational& r);
// Accepts "p/q", "p" and decimal literals such as "0.25".
Rational parse_rational(const std::string& text);

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Interval {
  Rational lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Convex polygon, counter-clockwise, no repeated or collinear consecutive vertices.
struct Polygon {
  std::vector<Point> vertices;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

Rational cross(const Point& o, const Point& a, const Point& b);
// Twice the signed area.
Rational twice_area(const Polygon& p);

// Reason the polygon is not a valid strictly convex CCW polygon, if any.
std::optional<std::string> polygon_defect(const Polygon& p);

bool strictly_inside(const Polygon& p, const Point& q);

// Convex hull in CCW order without collinear points.
Polygon convex_hull(std::vector<Point> points);

}  // namespace ncode
