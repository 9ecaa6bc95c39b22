#include "arclabel/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "arclabel/delaunay.hpp"
#include "arclabel/errors.hpp"
#include "arclabel/predicates.hpp"

namespace arclabel {

Circle circumcircle(Point a, Point b, Point c) {
  const Point d = b - a;
  const Point e = c - a;
  const double bl = dot(d, d);
  const double cl = dot(e, e);
  const double det = cross(d, e);
  if (det == 0.0) {
    if (orient2d(a, b, c) == 0.0) throw DegenerateInput("circumcircle of collinear points");
    const Point offset = circumcenter_offset_wide(a, b, c);
    return {a + offset, norm(offset)};
  }
  const Point offset{(e.y * bl - d.y * cl) * 0.5 / det, (d.x * cl - e.x * bl) * 0.5 / det};
  return {a + offset, norm(offset)};
}

SkeletonGraph::SkeletonGraph(std::vector<SkeletonNode> nodes, std::vector<SkeletonEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  offsets_.assign(nodes_.size() + 1, 0);
  for (const SkeletonEdge& e : edges_) {
    if (e.u >= nodes_.size() || e.v >= nodes_.size()) {
      throw std::invalid_argument("skeleton edge references a missing node");
    }
    if (e.u == e.v) throw std::invalid_argument("skeleton edge is a self loop");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[cursor[edges_[i].u]++] = {edges_[i].v, i};
    adjacency_[cursor[edges_[i].v]++] = {edges_[i].u, i};
  }
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[n]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[n + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    if (std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) {
          return a.node == b.node;
        }) != last) {
      throw std::invalid_argument("duplicate skeleton edge");
    }
  }
}

double SkeletonGraph::max_clearance() const {
  double best = 0.0;
  for (const SkeletonEdge& e : edges_) best = std::max(best, e.clearance);
  return best;
}

double edge_clearance(Point u, Point v, const Circle& a, const Circle& b) {
  const double side_a = orient2d(u, v, a.center);
  const double side_b = orient2d(u, v, b.center);
  const bool opposite = (side_a > 0.0 && side_b < 0.0) || (side_a < 0.0 && side_b > 0.0);
  const double smaller_radius = std::min(a.radius, b.radius);
  const double clearance = opposite ? 0.5 * distance(u, v) : smaller_radius;
  return std::min(clearance, smaller_radius);
}

double edge_clearance(const std::array<Point, 3>& tri_a, const std::array<Point, 3>& tri_b) {
  std::vector<Point> shared;
  for (const Point& p : tri_a) {
    if (std::find(tri_b.begin(), tri_b.end(), p) != tri_b.end()) shared.push_back(p);
  }
  if (shared.size() != 2) {
    throw std::invalid_argument("triangles must share exactly one edge");
  }
  return edge_clearance(shared[0], shared[1], circumcircle(tri_a[0], tri_a[1], tri_a[2]),
                        circumcircle(tri_b[0], tri_b[1], tri_b[2]));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index stays the representative.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Circumcenters closer than this (relative to the radius) are one node.
constexpr double kCoincidentTolerance = 1e-12;

}  // namespace

SkeletonGraph build_skeleton(const AreaShape& area) {
  const Triangulation tri = triangulate(area);
  const std::size_t triangle_count = tri.triangle_count();

  std::vector<Circle> circles(triangle_count);
  std::vector<char> valid(triangle_count, 0);
  for (std::size_t t = 0; t < triangle_count; ++t) {
    const auto [a, b, c] = tri.triangle_points(t);
    if (orient2d(a, b, c) == 0.0) continue;
    circles[t] = circumcircle(a, b, c);
    valid[t] = std::isfinite(circles[t].radius) ? 1 : 0;
  }

  DisjointSets groups(triangle_count);
  const std::size_t halfedge_count = tri.halfedges.size();
  for (std::size_t e = 0; e < halfedge_count; ++e) {
    const std::size_t twin = tri.halfedges[e];
    if (twin == Triangulation::kNone || twin < e) continue;
    const std::size_t ta = e / 3;
    const std::size_t tb = twin / 3;
    if (!valid[ta] || !valid[tb]) continue;
    const auto pa = tri.triangle_points(ta);
    const Point opposite_b = tri.points[tri.triangles[Triangulation::prev_halfedge(twin)]];
    const double r = std::max(circles[ta].radius, circles[tb].radius);
    if (incircle(pa[0], pa[1], pa[2], opposite_b) == 0.0 ||
        distance(circles[ta].center, circles[tb].center) <= kCoincidentTolerance * r) {
      groups.unite(ta, tb);
    }
  }

  std::vector<char> inside(triangle_count, 0);
  for (std::size_t t = 0; t < triangle_count; ++t) {
    if (valid[t] && groups.find(t) == t) inside[t] = point_in_area(circles[t].center, area);
  }

  struct Candidate {
    std::size_t a;
    std::size_t b;
    double clearance;
  };
  std::vector<Candidate> candidates;
  std::unordered_map<std::uint64_t, std::size_t> by_pair;
  candidates.reserve(triangle_count);
  by_pair.reserve(2 * triangle_count);
  for (std::size_t e = 0; e < halfedge_count; ++e) {
    const std::size_t twin = tri.halfedges[e];
    if (twin == Triangulation::kNone || twin < e) continue;
    const std::size_t ta = e / 3;
    const std::size_t tb = twin / 3;
    if (!valid[ta] || !valid[tb]) continue;
    std::size_t ra = groups.find(ta);
    std::size_t rb = groups.find(tb);
    if (ra == rb || !inside[ra] || !inside[rb]) continue;
    const Point u = tri.points[tri.triangles[e]];
    const Point v = tri.points[tri.triangles[Triangulation::next_halfedge(e)]];
    const double clearance = edge_clearance(u, v, circles[ta], circles[tb]);
    if (rb < ra) std::swap(ra, rb);
    const std::uint64_t key = (static_cast<std::uint64_t>(ra) << 32) | rb;
    const auto [it, fresh] = by_pair.try_emplace(key, candidates.size());
    if (fresh) {
      candidates.push_back({ra, rb, clearance});
    } else {
      candidates[it->second].clearance = std::min(candidates[it->second].clearance, clearance);
    }
  }

  std::vector<std::size_t> node_of(triangle_count, Triangulation::kNone);
  std::vector<Candidate> kept;
  kept.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    const Segment s{circles[c.a].center, circles[c.b].center};
    if (s.a == s.b || segment_crosses_boundary(s, area)) continue;
    kept.push_back(c);
    node_of[c.a] = 0;
    node_of[c.b] = 0;
  }
  if (kept.empty()) throw EmptySkeleton("no Voronoi edge lies inside the area");

  std::vector<SkeletonNode> nodes;
  for (std::size_t t = 0; t < triangle_count; ++t) {
    if (node_of[t] == Triangulation::kNone) continue;
    node_of[t] = nodes.size();
    nodes.push_back({circles[t].center, circles[t].radius, t});
  }
  std::vector<SkeletonEdge> edges;
  edges.reserve(kept.size());
  for (const Candidate& c : kept) {
    const std::size_t u = node_of[c.a];
    const std::size_t v = node_of[c.b];
    edges.push_back({u, v, distance(nodes[u].position, nodes[v].position), c.clearance});
  }
  std::sort(edges.begin(), edges.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return SkeletonGraph(std::move(nodes), std::move(edges));
}

std::string skeleton_to_geojson(const SkeletonGraph& graph) {
  nlohmann::json lines = nlohmann::json::array();
  nlohmann::json clearances = nlohmann::json::array();
  for (const SkeletonEdge& e : graph.edges()) {
    const Point a = graph.nodes()[e.u].position;
    const Point b = graph.nodes()[e.v].position;
    lines.push_back({{a.x, a.y}, {b.x, b.y}});
    clearances.push_back(e.clearance);
  }
  const nlohmann::json feature = {
      {"type", "Feature"},
      {"geometry", {{"type", "MultiLineString"}, {"coordinates", lines}}},
      {"properties", {{"clearance", clearances}}},
  };
  return feature.dump();
}

}  // namespace arclabel
