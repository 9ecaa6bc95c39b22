#include "arclabel/area.hpp"

#include <string>

#include "arclabel/errors.hpp"
#include "arclabel/predicates.hpp"

namespace arclabel {

Ring::Ring(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw ValidationError("ring has " + std::to_string(vertices_.size()) +
                          " vertices, at least 3 required");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) throw ValidationError("ring has a non-finite coordinate");
    if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
      throw ValidationError("ring repeats vertex " + std::to_string(i));
    }
  }
}

double Ring::signed_area() const {
  // Shoelace relative to the first vertex for better conditioning.
  const Point o = vertices_.front();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    twice += cross(vertices_[i] - o, vertices_[i + 1] - o);
  }
  return 0.5 * twice;
}

Ring Ring::reversed() const {
  return Ring(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

namespace {

std::string ring_name(std::size_t ring) {
  return ring == 0 ? std::string("outer") : "hole " + std::to_string(ring - 1);
}

bool point_in_ring(Point p, const Ring& ring) {
  bool odd = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[j];
    const Point b = ring[i];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    const double xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > p.x) odd = !odd;
  }
  return odd;
}

struct EdgeRef {
  std::size_t ring;
  std::size_t local;
};

void validate(const std::vector<const Ring*>& rings, const SegmentGrid& grid,
              const std::vector<EdgeRef>& refs) {
  const auto segments = grid.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    const EdgeRef ri = refs[i];
    grid.visit_candidates(s, [&](std::size_t j) {
      if (j <= i) return false;
      const Segment& t = segments[j];
      const EdgeRef rj = refs[j];
      if (ri.ring == rj.ring) {
        const std::size_t n = rings[ri.ring]->size();
        const bool next = rj.local == ri.local + 1;
        const bool wrap = ri.local == 0 && rj.local == n - 1;
        if (next || wrap) {
          // Adjacent edges only meet at their shared vertex unless they fold back.
          const Point shared = next ? s.b : s.a;
          const Point p = next ? s.a : s.b;
          const Point q = next ? t.b : t.a;
          if (orient2d(p, shared, q) == 0.0 && dot(p - shared, q - shared) > 0.0) {
            throw ValidationError(ring_name(ri.ring) + " folds back on itself at vertex " +
                                  std::to_string(next ? rj.local : ri.local));
          }
          return false;
        }
        if (segments_intersect(s, t)) {
          throw ValidationError(ring_name(ri.ring) + " self-intersects (edges " +
                                std::to_string(ri.local) + " and " +
                                std::to_string(rj.local) + ")");
        }
        return false;
      }
      if (segments_intersect(s, t)) {
        throw ValidationError(ring_name(rj.ring) + " touches or crosses " +
                              ring_name(ri.ring));
      }
      return false;
    });
  }

  const Ring& outer = *rings[0];
  std::vector<BoundingBox> boxes;
  for (const Ring* r : rings) boxes.push_back(bounding_box(r->vertices()));
  for (std::size_t h = 1; h < rings.size(); ++h) {
    const Point probe = (*rings[h])[0];
    if (!point_in_ring(probe, outer)) {
      throw ValidationError(ring_name(h) + " lies outside the outer ring");
    }
    for (std::size_t g = 1; g < rings.size(); ++g) {
      if (g != h && boxes[g].contains(probe) && point_in_ring(probe, *rings[g])) {
        throw ValidationError(ring_name(h) + " lies inside " + ring_name(g));
      }
    }
  }
}

}  // namespace

AreaShape::AreaShape(Ring outer, std::vector<Ring> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
  const double outer_area = outer_.signed_area();
  if (outer_area == 0.0) throw ValidationError("outer has zero area");
  if (outer_area < 0.0) outer_ = outer_.reversed();
  for (std::size_t h = 0; h < holes_.size(); ++h) {
    const double a = holes_[h].signed_area();
    if (a == 0.0) throw ValidationError(ring_name(h + 1) + " has zero area");
    if (a > 0.0) holes_[h] = holes_[h].reversed();
  }

  std::vector<const Ring*> rings{&outer_};
  for (const Ring& h : holes_) rings.push_back(&h);
  std::vector<Segment> segments;
  std::vector<EdgeRef> refs;
  segments.reserve(vertex_count());
  refs.reserve(vertex_count());
  for (std::size_t r = 0; r < rings.size(); ++r) {
    for (std::size_t i = 0; i < rings[r]->size(); ++i) {
      segments.push_back(rings[r]->edge(i));
      refs.push_back({r, i});
    }
  }
  auto grid = std::make_shared<const SegmentGrid>(std::move(segments));
  validate(rings, *grid, refs);
  index_ = std::move(grid);
}

std::size_t AreaShape::vertex_count() const {
  std::size_t n = outer_.size();
  for (const Ring& h : holes_) n += h.size();
  return n;
}

bool point_in_area(Point p, const AreaShape& area) { return area.index().ray_parity(p); }

bool segment_crosses_boundary(const Segment& s, const AreaShape& area) {
  return area.index().intersects_any(s);
}

bool segment_in_area(const Segment& s, const AreaShape& area) {
  return point_in_area(s.a, area) && point_in_area(s.b, area) &&
         !segment_crosses_boundary(s, area);
}

}  // namespace arclabel
