#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace arclabel {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr double squared_distance(Point a, Point b) {
  const Point d = a - b;
  return dot(d, d);
}
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
  Point at(double t) const { return a + t * (b - a); }
  Point midpoint() const { return at(0.5); }
};

/// Closest point of `s` to `p`.
Point closest_point(const Segment& s, Point p);
double distance(const Segment& s, Point p);

/// True iff the closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);

struct BoundingBox {
  Point min{+HUGE_VAL, +HUGE_VAL};
  Point max{-HUGE_VAL, -HUGE_VAL};

  void extend(Point p) {
    min = {std::min(min.x, p.x), std::min(min.y, p.y)};
    max = {std::max(max.x, p.x), std::max(max.y, p.y)};
  }
  bool empty() const { return min.x > max.x; }
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return empty() ? 0.0 : std::hypot(width(), height()); }
  bool contains(Point p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
};

template <typename Range>
BoundingBox bounding_box(const Range& points) {
  BoundingBox box;
  for (const Point& p : points) box.extend(p);
  return box;
}

struct Circle {
  Point center;
  double radius = 0.0;

  Point at_angle(double theta) const {
    return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
  }
};

/// Maps any finite angle into [0, 2pi).
double normalize_angle(double theta);

/// Length of the shorter arc between two angles, in [0, pi].
double circular_distance(double a, double b);

/// Counter-clockwise arc from `lo` to `hi`. Normalized form has lo in
/// [0, 2pi) and 0 <= hi - lo <= 2pi, so `hi` may exceed 2pi when the arc
/// crosses the branch cut.
struct AngularInterval {
  double lo = 0.0;
  double hi = 0.0;

  static AngularInterval full() { return {0.0, kTwoPi}; }
  /// Arc starting at `start` (any angle) spanning `span` radians ccw.
  static AngularInterval from_start(double start, double span);

  double span() const { return hi - lo; }
  double midpoint() const { return normalize_angle(0.5 * (lo + hi)); }
  bool is_full() const { return span() >= kTwoPi; }
  bool contains(double theta) const;
  /// Circular distance from `theta` to the arc; 0 inside.
  double distance_to(double theta) const;
  /// Splits at the 2pi branch cut; every piece has hi <= 2pi.
  std::vector<AngularInterval> split_at_cut() const;
};

/// Polar box around a segment relative to some center.
struct AnnularBox {
  double rho_min = 0.0;
  double rho_max = 0.0;
  AngularInterval angular;
};

/// Polar bounding box(es) of `s` around `center`. Arcs crossing the
/// branch cut come back as two boxes, and a segment subtending close to
/// pi is halved recursively first. Throws DegenerateSegment when `center`
/// lies on `s`.
std::vector<AnnularBox> annular_bbox(const Segment& s, Point center);

}  // namespace arclabel
