#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "arclabel/geometry.hpp"
#include "arclabel/segment_grid.hpp"

namespace arclabel {

/// Closed polygonal chain; the closing edge is implicit. Holds at least
/// three vertices, no two consecutive ones equal.
class Ring {
 public:
  Ring() = default;
  /// Throws ValidationError on fewer than 3 vertices, non-finite
  /// coordinates or repeated consecutive vertices.
  explicit Ring(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  Segment edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  /// Positive for counter-clockwise rings.
  double signed_area() const;
  Ring reversed() const;

 private:
  std::vector<Point> vertices_;
};

/// Polygon with holes: the area to label. Construction normalizes the
/// outer ring to counter-clockwise and holes to clockwise, validates the
/// topology and builds a spatial index over all boundary edges. Instances
/// are immutable and can be shared across threads.
class AreaShape {
 public:
  /// Throws ValidationError naming the offending ring ("outer", "hole 2")
  /// when a ring self-intersects, rings cross, a hole leaves the outer
  /// ring or holes nest.
  explicit AreaShape(Ring outer, std::vector<Ring> holes = {});

  const Ring& outer() const { return outer_; }
  std::span<const Ring> holes() const { return holes_; }

  /// All boundary edges, outer ring first.
  std::span<const Segment> boundary() const { return index_->segments(); }
  std::size_t vertex_count() const;
  BoundingBox bounds() const { return index_->bounds(); }
  const SegmentGrid& index() const { return *index_; }

 private:
  Ring outer_;
  std::vector<Ring> holes_;
  std::shared_ptr<const SegmentGrid> index_;
};

/// Even-odd membership with a half-open edge convention: interior points
/// of the outer ring outside every hole are inside; exact boundary points
/// get a deterministic answer.
bool point_in_area(Point p, const AreaShape& area);

/// Both endpoints inside and no boundary edge touched.
bool segment_in_area(const Segment& s, const AreaShape& area);

/// True iff `s` touches any boundary edge. Together with two inside
/// endpoints this decides segment_in_area.
bool segment_crosses_boundary(const Segment& s, const AreaShape& area);

}  // namespace arclabel
