#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arclabel/area.hpp"
#include "arclabel/geometry.hpp"

namespace arclabel {

/// Circle through three non-collinear points.
Circle circumcircle(Point a, Point b, Point c);

struct SkeletonNode {
  Point position;       // circumcenter of `triangle`
  double circumradius;  // distance from `position` to the triangle's vertices
  std::size_t triangle;
};

struct SkeletonEdge {
  std::size_t u;
  std::size_t v;
  double length;
  double clearance;
};

/// Undirected Voronoi-edge graph approximating the medial axis. Immutable
/// once built.
class SkeletonGraph {
 public:
  struct Neighbor {
    std::size_t node;
    std::size_t edge;
  };

  SkeletonGraph() = default;
  /// Builds adjacency lists; throws std::invalid_argument on dangling
  /// endpoints, self loops or duplicate edges.
  SkeletonGraph(std::vector<SkeletonNode> nodes, std::vector<SkeletonEdge> edges);

  std::span<const SkeletonNode> nodes() const { return nodes_; }
  std::span<const SkeletonEdge> edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Neighbor> neighbors(std::size_t node) const {
    return {adjacency_.data() + offsets_[node], adjacency_.data() + offsets_[node + 1]};
  }
  double max_clearance() const;

 private:
  std::vector<SkeletonNode> nodes_;
  std::vector<SkeletonEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Clearance of the Voronoi edge dual to the Delaunay edge shared by two
/// adjacent triangles. Circumcenters strictly on opposite sides of the
/// shared edge give half its length; otherwise (same side, on the line,
/// coincident) the smaller circumradius. Never exceeds either radius.
/// Throws std::invalid_argument unless the triangles share exactly two
/// vertices.
double edge_clearance(const std::array<Point, 3>& tri_a, const std::array<Point, 3>& tri_b);

/// Same rule from precomputed pieces: the shared Delaunay edge (u, v) and
/// both circumcircles.
double edge_clearance(Point u, Point v, const Circle& a, const Circle& b);

/// Medial-axis approximation: circumcenters of Delaunay triangles inside
/// the area, joined across shared Delaunay edges when the connecting
/// segment stays inside. Coincident circumcenters (cocircular vertex
/// groups) merge into one node. Throws EmptySkeleton when no edge
/// survives.
SkeletonGraph build_skeleton(const AreaShape& area);

/// Debug dump: GeoJSON MultiLineString geometry of all edges, with the
/// per-edge clearances in the same order.
std::string skeleton_to_geojson(const SkeletonGraph& graph);

}  // namespace arclabel
