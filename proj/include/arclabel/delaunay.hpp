#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "arclabel/area.hpp"
#include "arclabel/geometry.hpp"

namespace arclabel {

/// Half-edge Delaunay triangulation. Triangle t owns half-edges 3t, 3t+1,
/// 3t+2; `triangles[e]` is the vertex where half-edge e starts and
/// `halfedges[e]` the twin in the neighbouring triangle (kNone on the hull).
struct Triangulation {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<Point> points;
  std::vector<std::size_t> triangles;
  std::vector<std::size_t> halfedges;

  std::size_t triangle_count() const { return triangles.size() / 3; }
  std::array<std::size_t, 3> triangle(std::size_t t) const {
    return {triangles[3 * t], triangles[3 * t + 1], triangles[3 * t + 2]};
  }
  std::array<Point, 3> triangle_points(std::size_t t) const {
    return {points[triangles[3 * t]], points[triangles[3 * t + 1]], points[triangles[3 * t + 2]]};
  }
  static std::size_t next_halfedge(std::size_t e) { return e % 3 == 2 ? e - 2 : e + 1; }
  static std::size_t prev_halfedge(std::size_t e) { return e % 3 == 0 ? e + 2 : e - 1; }
};

/// Delaunay triangulation of a point set (randomized incremental insertion
/// with exact-sign predicates and a fixed seed, so output is reproducible).
/// Triangles are clockwise. Exact duplicates are collapsed first; throws
/// DegenerateInput when fewer than three distinct points remain or all are
/// collinear.
Triangulation triangulate(std::span<const Point> points);

/// Triangulation of every ring vertex of `area`.
Triangulation triangulate(const AreaShape& area);

}  // namespace arclabel
