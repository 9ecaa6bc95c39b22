#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "arclabel/delaunay.hpp"
#include "arclabel/errors.hpp"
#include "arclabel/predicates.hpp"
#include "oracles.hpp"

using namespace arclabel;

namespace {

double tri_area(const std::array<Point, 3>& t) {
  return 0.5 * std::abs((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x));
}

// Andrew's monotone chain, for the hull-area check.
double hull_area(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  const auto turn = [](Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  double a = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Point p = h[i], q = h[(i + 1) % h.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * std::abs(a);
}

// Counts (triangle, vertex) pairs where the vertex is strictly inside the
// circumcircle by more than a relative tolerance.
int empty_circle_violations(const Triangulation& t) {
  int bad = 0;
  for (std::size_t i = 0; i < t.triangle_count(); ++i) {
    const auto [a, b, c] = t.triangle_points(i);
    const Circle cc = oracle::circumcircle(a, b, c);
    for (const Point& p : t.points) {
      if (p == a || p == b || p == c) continue;
      if (distance(p, cc.center) < cc.radius * (1.0 - 1e-9)) ++bad;
    }
  }
  return bad;
}

void check_halfedges(const Triangulation& t) {
  for (std::size_t e = 0; e < t.halfedges.size(); ++e) {
    const std::size_t twin = t.halfedges[e];
    if (twin == Triangulation::kNone) continue;
    CHECK(t.halfedges[twin] == e);
    CHECK(t.triangles[e] == t.triangles[Triangulation::next_halfedge(twin)]);
    CHECK(t.triangles[twin] == t.triangles[Triangulation::next_halfedge(e)]);
  }
}

}  // namespace

TEST_CASE("orientation and in-circle predicates") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) > 0);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) < 0);
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
  // Nearly collinear input that naive evaluation gets wrong.
  CHECK(orient2d({0.5, 0.5}, {12, 12}, {24, 24}) == 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) > 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}) < 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);
}

TEST_CASE("unit square gives two triangles sharing one diagonal") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Triangulation t = triangulate(pts);
  REQUIRE(t.triangle_count() == 2);
  int shared = 0;
  for (const std::size_t h : t.halfedges) shared += h != Triangulation::kNone ? 1 : 0;
  CHECK(shared == 2);
  check_halfedges(t);
}

TEST_CASE("three points give one triangle") {
  const std::vector<Point> pts{{0, 0}, {3, 0}, {1, 2}};
  CHECK(triangulate(pts).triangle_count() == 1);
}

TEST_CASE("regular hexagon gives four triangles with empty circumcircles") {
  std::vector<Point> pts;
  for (int i = 0; i < 6; ++i) pts.push_back({std::cos(i * kPi / 3), std::sin(i * kPi / 3)});
  const Triangulation t = triangulate(pts);
  CHECK(t.triangle_count() == 4);
  CHECK(empty_circle_violations(t) == 0);
  double area = 0.0;
  for (std::size_t i = 0; i < t.triangle_count(); ++i) area += tri_area(t.triangle_points(i));
  CHECK(area == doctest::Approx(hull_area(pts)));
}

TEST_CASE("degenerate inputs") {
  const std::vector<Point> collinear{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(triangulate(collinear), DegenerateInput);
  const std::vector<Point> dup{{0, 0}, {0, 0}, {1, 0}, {1, 0}};
  CHECK_THROWS_AS(triangulate(dup), DegenerateInput);
  const std::vector<Point> with_dups{{0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 0}};
  const Triangulation t = triangulate(with_dups);
  CHECK(t.triangle_count() == 1);
}

TEST_CASE("property: random point sets are Delaunay and cover the hull") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    std::vector<Point> pts(200 + 20 * trial);
    for (Point& p : pts) p = {u(rng), u(rng)};
    const Triangulation t = triangulate(pts);
    CHECK(empty_circle_violations(t) == 0);
    double area = 0.0;
    for (std::size_t i = 0; i < t.triangle_count(); ++i) area += tri_area(t.triangle_points(i));
    CHECK(area == doctest::Approx(hull_area(pts)).epsilon(1e-9));
    check_halfedges(t);
  }
}

TEST_CASE("property: grid points (many cocircular quadruples)") {
  std::vector<Point> pts;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  const Triangulation t = triangulate(pts);
  CHECK(t.triangle_count() == 2 * 14 * 14);
  CHECK(empty_circle_violations(t) == 0);
}

TEST_CASE("densified polygon boundary") {
  std::mt19937_64 rng(9);
  const AreaShape area = oracle::random_area(rng, 40, true, 0.5);
  const Triangulation t = triangulate(area);
  CHECK(t.points.size() == area.vertex_count());
  CHECK(empty_circle_violations(t) == 0);
}
