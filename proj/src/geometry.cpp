#include "arclabel/geometry.hpp"

#include "arclabel/errors.hpp"
#include "arclabel/predicates.hpp"

namespace arclabel {

Point closest_point(const Segment& s, Point p) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return s.a;
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return s.at(t);
}

double distance(const Segment& s, Point p) { return distance(closest_point(s, p), p); }

namespace {

bool on_segment_collinear(const Segment& s, Point p) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = sign(orient2d(s.a, s.b, t.a));
  const int o2 = sign(orient2d(s.a, s.b, t.b));
  const int o3 = sign(orient2d(t.a, t.b, s.a));
  const int o4 = sign(orient2d(t.a, t.b, s.b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment_collinear(s, t.a)) return true;
  if (o2 == 0 && on_segment_collinear(s, t.b)) return true;
  if (o3 == 0 && on_segment_collinear(t, s.a)) return true;
  if (o4 == 0 && on_segment_collinear(t, s.b)) return true;
  return false;
}

double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

AngularInterval AngularInterval::from_start(double start, double span) {
  const double lo = normalize_angle(start);
  return {lo, lo + std::clamp(span, 0.0, kTwoPi)};
}

bool AngularInterval::contains(double theta) const {
  if (is_full()) return true;
  return normalize_angle(theta - lo) <= span();
}

double AngularInterval::distance_to(double theta) const {
  if (contains(theta)) return 0.0;
  return std::min(circular_distance(theta, lo), circular_distance(theta, hi));
}

std::vector<AngularInterval> AngularInterval::split_at_cut() const {
  if (hi <= kTwoPi) return {*this};
  return {{lo, kTwoPi}, {0.0, hi - kTwoPi}};
}

namespace {

// A straight segment never subtends more than pi; splitting close to pi
// keeps the boxes well away from that degenerate limit.
constexpr double kSplitSpan = kPi - 1e-9;

void box_segment(const Segment& s, Point center, int depth, std::vector<AnnularBox>& out) {
  const Point u = s.a - center;
  const Point v = s.b - center;
  const double c = cross(u, v);
  const double span = std::atan2(std::abs(c), dot(u, v));
  if (span >= kSplitSpan && depth < 8) {
    const Point m = s.midpoint();
    box_segment({s.a, m}, center, depth + 1, out);
    box_segment({m, s.b}, center, depth + 1, out);
    return;
  }
  const double start = c >= 0.0 ? std::atan2(u.y, u.x) : std::atan2(v.y, v.x);
  const double rho_min = distance(s, center);
  const double rho_max = std::max(norm(u), norm(v));
  for (const AngularInterval& piece : AngularInterval::from_start(start, span).split_at_cut()) {
    out.push_back({rho_min, rho_max, piece});
  }
}

}  // namespace

std::vector<AnnularBox> annular_bbox(const Segment& s, Point center) {
  if (orient2d(s.a, s.b, center) == 0.0 && on_segment_collinear(s, center)) {
    throw DegenerateSegment("center lies on the segment");
  }
  std::vector<AnnularBox> boxes;
  box_segment(s, center, 0, boxes);
  return boxes;
}

}  // namespace arclabel
