#include "arclabel/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "arclabel/errors.hpp"
#include "arclabel/predicates.hpp"

namespace arclabel {
namespace {

constexpr std::size_t kNone = Triangulation::kNone;

// Index along a Hilbert curve of order 16 over the unit square.
std::uint64_t hilbert_index(double fx, double fy) {
  constexpr std::uint32_t kSide = 1u << 16;
  auto x = static_cast<std::uint32_t>(std::clamp(fx, 0.0, 1.0) * (kSide - 1));
  auto y = static_cast<std::uint32_t>(std::clamp(fy, 0.0, 1.0) * (kSide - 1));
  std::uint64_t d = 0;
  for (std::uint32_t s = kSide / 2; s > 0; s /= 2) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = kSide - 1 - x;
        y = kSide - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

// Biased randomized insertion order: random rounds of doubling size, each
// round sorted along a Hilbert curve so that consecutive points are close.
std::vector<std::size_t> insertion_order(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(0x5eed);
  std::shuffle(order.begin(), order.end(), rng);

  const BoundingBox box = bounding_box(pts);
  const double w = std::max(box.max.x - box.min.x, 1e-300);
  const double h = std::max(box.max.y - box.min.y, 1e-300);
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = hilbert_index((pts[i].x - box.min.x) / w, (pts[i].y - box.min.y) / h);
  }
  std::size_t end = n;
  while (end > 0) {
    const std::size_t begin = end <= 64 ? 0 : end / 2;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
              order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](std::size_t a, std::size_t b) { return key[a] != key[b] ? key[a] < key[b] : a < b; });
    end = begin;
  }
  return order;
}

// Incremental Bowyer-Watson over counter-clockwise triangles. The hull is
// closed by ghost triangles sharing one vertex at infinity, so points
// outside the hull need no special casing.
class Builder {
 public:
  explicit Builder(const std::vector<Point>& pts) : pts_(pts), ghost_(pts.size()) {}

  void run(Triangulation& out);

 private:
  struct Tri {
    std::array<std::size_t, 3> v;   // edge k runs from v[k] to v[(k + 1) % 3]
    std::array<std::size_t, 3> nb;  // triangle across edge k
    bool alive = true;
  };

  bool is_ghost(const Tri& t) const { return t.v[0] == ghost_ || t.v[1] == ghost_ || t.v[2] == ghost_; }
  bool in_conflict(const Tri& t, Point p) const;
  std::size_t locate(Point p);
  void insert(std::size_t id);
  std::size_t new_tri(std::size_t a, std::size_t b, std::size_t c);
  static std::size_t edge_to(const Tri& t, std::size_t neighbour) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (t.nb[k] == neighbour) return k;
    }
    return kNone;
  }

  const std::vector<Point>& pts_;
  const std::size_t ghost_;
  std::vector<Tri> tris_;
  std::vector<std::size_t> free_;
  std::size_t last_ = 0;
  std::size_t walk_turn_ = 0;

  std::vector<std::size_t> cavity_;
  std::vector<std::size_t> stack_;
  std::vector<char> in_cavity_;
  std::vector<std::size_t> by_start_;
  std::vector<std::size_t> created_;
};

bool Builder::in_conflict(const Tri& t, Point p) const {
  for (std::size_t k = 0; k < 3; ++k) {
    if (t.v[k] != ghost_) continue;
    // Hull edge (x, y) with the outside on its left.
    const Point x = pts_[t.v[(k + 1) % 3]];
    const Point y = pts_[t.v[(k + 2) % 3]];
    const double o = orient2d(x, y, p);
    if (o != 0.0) return o > 0.0;
    return dot(p - x, y - x) > 0.0 && dot(p - y, x - y) > 0.0;
  }
  return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > 0.0;
}

std::size_t Builder::new_tri(std::size_t a, std::size_t b, std::size_t c) {
  Tri t{{a, b, c}, {kNone, kNone, kNone}, true};
  if (!free_.empty()) {
    const std::size_t id = free_.back();
    free_.pop_back();
    tris_[id] = t;
    in_cavity_[id] = 0;
    return id;
  }
  tris_.push_back(t);
  in_cavity_.push_back(0);
  return tris_.size() - 1;
}

// Visibility walk, which terminates on Delaunay triangulations. Ends in a
// finite triangle holding p or in the ghost triangle of a hull edge that
// sees p.
std::size_t Builder::locate(Point p) {
  std::size_t t = last_;
  if (is_ghost(tris_[t])) {
    const Tri& g = tris_[t];
    for (std::size_t k = 0; k < 3; ++k) {
      if (g.v[k] != ghost_ && g.v[(k + 1) % 3] != ghost_) t = g.nb[k];
    }
  }
  while (true) {
    const Tri& cur = tris_[t];
    if (is_ghost(cur)) return t;
    std::size_t next = kNone;
    const std::size_t first = walk_turn_++ % 3;
    for (std::size_t j = 0; j < 3 && next == kNone; ++j) {
      const std::size_t k = (first + j) % 3;
      if (orient2d(pts_[cur.v[k]], pts_[cur.v[(k + 1) % 3]], p) < 0.0) next = cur.nb[k];
    }
    if (next == kNone) return t;
    t = next;
  }
}

void Builder::insert(std::size_t id) {
  const Point p = pts_[id];
  const std::size_t start = locate(p);

  cavity_.clear();
  stack_.assign(1, start);
  in_cavity_[start] = 1;
  while (!stack_.empty()) {
    const std::size_t t = stack_.back();
    stack_.pop_back();
    cavity_.push_back(t);
    for (const std::size_t n : tris_[t].nb) {
      if (in_cavity_[n] || !in_conflict(tris_[n], p)) continue;
      in_cavity_[n] = 1;
      stack_.push_back(n);
    }
  }

  // Fan the cavity boundary around p. New triangle (u, w, p) keeps the
  // outside neighbour on edge 0 and is found again through its start u.
  created_.clear();
  for (const std::size_t t : cavity_) {
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t n = tris_[t].nb[k];
      if (in_cavity_[n]) continue;
      const std::size_t u = tris_[t].v[k];
      const std::size_t w = tris_[t].v[(k + 1) % 3];
      const std::size_t j = edge_to(tris_[n], t);
      const std::size_t nt = new_tri(u, w, id);
      tris_[nt].nb[0] = n;
      tris_[n].nb[j] = nt;
      by_start_[u] = nt;
      created_.push_back(nt);
    }
  }
  for (const std::size_t nt : created_) {
    const std::size_t w = tris_[nt].v[1];
    const std::size_t other = by_start_[w];
    tris_[nt].nb[1] = other;
    tris_[other].nb[2] = nt;
  }
  for (const std::size_t t : cavity_) {
    tris_[t].alive = false;
    in_cavity_[t] = 0;
    free_.push_back(t);
  }
  last_ = created_.front();
}

void Builder::run(Triangulation& out) {
  const std::size_t n = pts_.size();
  std::vector<std::size_t> order = insertion_order(pts_);

  // Seed with the first two points and the next one off their line.
  std::size_t third = kNone;
  for (std::size_t i = 2; i < n; ++i) {
    if (orient2d(pts_[order[0]], pts_[order[1]], pts_[order[i]]) != 0.0) {
      third = i;
      break;
    }
  }
  if (third == kNone) throw DegenerateInput("all points are collinear");
  std::swap(order[2], order[third]);
  std::size_t a = order[0];
  std::size_t b = order[1];
  const std::size_t c = order[2];
  if (orient2d(pts_[a], pts_[b], pts_[c]) < 0.0) std::swap(a, b);

  by_start_.assign(n + 1, kNone);
  tris_.reserve(2 * n + 4);
  const std::size_t t0 = new_tri(a, b, c);
  const std::size_t g0 = new_tri(b, a, ghost_);
  const std::size_t g1 = new_tri(c, b, ghost_);
  const std::size_t g2 = new_tri(a, c, ghost_);
  tris_[t0].nb = {g0, g1, g2};
  tris_[g0].nb = {t0, g2, g1};
  tris_[g1].nb = {t0, g0, g2};
  tris_[g2].nb = {t0, g1, g0};
  last_ = t0;

  for (std::size_t i = 3; i < n; ++i) insert(order[i]);

  // Finite triangles leave clockwise: (a, b, c) becomes (a, c, b), so
  // output edge k is internal edge 2 - k reversed.
  std::vector<std::size_t> index(tris_.size(), kNone);
  std::size_t count = 0;
  for (std::size_t t = 0; t < tris_.size(); ++t) {
    if (tris_[t].alive && !is_ghost(tris_[t])) index[t] = count++;
  }
  out.triangles.resize(3 * count);
  out.halfedges.assign(3 * count, kNone);
  for (std::size_t t = 0; t < tris_.size(); ++t) {
    if (index[t] == kNone) continue;
    const Tri& tri = tris_[t];
    const std::size_t base = 3 * index[t];
    out.triangles[base] = tri.v[0];
    out.triangles[base + 1] = tri.v[2];
    out.triangles[base + 2] = tri.v[1];
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t n_tri = tri.nb[k];
      if (index[n_tri] == kNone) continue;
      const std::size_t j = edge_to(tris_[n_tri], t);
      out.halfedges[base + 2 - k] = 3 * index[n_tri] + 2 - j;
    }
  }
}

}  // namespace

Triangulation triangulate(std::span<const Point> points) {
  Triangulation out;
  out.points.assign(points.begin(), points.end());
  std::sort(out.points.begin(), out.points.end(),
            [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  if (out.points.size() < 3) throw DegenerateInput("fewer than three distinct points");
  for (const Point& p : out.points) {
    if (!is_finite(p)) throw DegenerateInput("non-finite coordinate");
  }
  Builder(out.points).run(out);
  return out;
}

Triangulation triangulate(const AreaShape& area) {
  std::vector<Point> points;
  points.reserve(area.vertex_count());
  points.insert(points.end(), area.outer().vertices().begin(), area.outer().vertices().end());
  for (const Ring& h : area.holes()) {
    points.insert(points.end(), h.vertices().begin(), h.vertices().end());
  }
  return triangulate(points);
}

}  // namespace arclabel
