#include "arclabel/arcfit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "arclabel/errors.hpp"

namespace arclabel {
namespace {

constexpr int kMaxIterations = 50;
constexpr double kRelativeStep = 1e-10;
constexpr double kCapFactor = 1000.0;

// Points translated to their centroid and scaled to unit RMS distance,
// which keeps both fits well conditioned for map coordinates.
struct Normalized {
  Point centroid;
  double scale = 1.0;
  std::vector<Point> points;

  explicit Normalized(std::span<const Point> input) {
    for (const Point& p : input) centroid = centroid + p;
    centroid = (1.0 / static_cast<double>(input.size())) * centroid;
    double sum_sq = 0.0;
    for (const Point& p : input) sum_sq += squared_distance(p, centroid);
    scale = std::sqrt(sum_sq / static_cast<double>(input.size()));
    if (!(scale > 0.0)) scale = 1.0;
    points.reserve(input.size());
    for (const Point& p : input) points.push_back((1.0 / scale) * (p - centroid));
  }

  Circle to_world(const Circle& c) const {
    return {centroid + scale * c.center, scale * c.radius};
  }
};

std::optional<Circle> kasa(std::span<const Point> pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point p = pts[static_cast<std::size_t>(i)];
    a(i, 0) = p.x;
    a(i, 1) = p.y;
    a(i, 2) = 1.0;
    b(i) = -(p.x * p.x + p.y * p.y);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < 3) return std::nullopt;
  const Eigen::Vector3d def = qr.solve(b);
  const Point center{-0.5 * def(0), -0.5 * def(1)};
  const double r2 = dot(center, center) - def(2);
  if (!(r2 > 0.0) || !std::isfinite(r2)) return std::nullopt;
  return Circle{center, std::sqrt(r2)};
}

Circle refine(std::span<const Point> pts, Circle start) {
  Eigen::Vector3d x(start.center.x, start.center.y, start.radius);
  double cost = fit_residual(pts, start);
  double lambda = 1e-3;
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd jac(n, 3);
  Eigen::VectorXd res(n);

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Point p = pts[static_cast<std::size_t>(i)];
      const double dx = p.x - x(0);
      const double dy = p.y - x(1);
      const double d = std::hypot(dx, dy);
      res(i) = d - x(2);
      jac(i, 0) = d > 0.0 ? -dx / d : 0.0;
      jac(i, 1) = d > 0.0 ? -dy / d : 0.0;
      jac(i, 2) = -1.0;
    }
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d grad = jac.transpose() * res;

    Eigen::Matrix3d damped = jtj;
    damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
    const Eigen::Vector3d step = damped.ldlt().solve(-grad);
    if (!step.allFinite()) break;
    const Eigen::Vector3d trial = x + step;
    const double trial_cost = fit_residual(pts, {{trial(0), trial(1)}, trial(2)});
    if (trial_cost <= cost) {
      x = trial;
      cost = trial_cost;
      lambda = std::max(lambda * 0.1, 1e-15);
      if (step.norm() <= kRelativeStep * (x.norm() + kRelativeStep)) break;
    } else {
      lambda *= 10.0;
      if (lambda > 1e16) break;
    }
  }
  return {{x(0), x(1)}, std::abs(x(2))};
}

// Unit normal of the points' principal direction, oriented towards
// `side` when given, else towards positive y (positive x on ties).
Point principal_normal(const Normalized& norm_pts, const std::optional<Point>& side) {
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const Point& p : norm_pts.points) {
    cov(0, 0) += p.x * p.x;
    cov(0, 1) += p.x * p.y;
    cov(1, 1) += p.y * p.y;
  }
  cov(1, 0) = cov(0, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
  // Eigenvalues ascend, so column 0 is the direction of least spread.
  Point normal{eig.eigenvectors()(0, 0), eig.eigenvectors()(1, 0)};
  normal = (1.0 / norm(normal)) * normal;
  double orientation = side ? dot(*side, normal) : 0.0;
  if (orientation == 0.0) orientation = normal.y != 0.0 ? normal.y : normal.x;
  return orientation < 0.0 ? -1.0 * normal : normal;
}

}  // namespace

double fit_residual(std::span<const Point> points, const Circle& circle) {
  double sum = 0.0;
  for (const Point& p : points) {
    const double d = distance(p, circle.center) - circle.radius;
    sum += d * d;
  }
  return sum;
}

double radius_cap(std::span<const Point> points) {
  return kCapFactor * bounding_box(points).diagonal();
}

std::optional<Circle> fit_circle_algebraic(std::span<const Point> points) {
  if (points.size() < 3) return std::nullopt;
  const Normalized norm_pts(points);
  const auto circle = kasa(norm_pts.points);
  if (!circle) return std::nullopt;
  return norm_pts.to_world(*circle);
}

CircleFit fit_circle(std::span<const Point> points) {
  std::vector<Point> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end(),
            [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) throw DegenerateInput("circle fit needs three distinct points");
  for (const Point& p : distinct) {
    if (!is_finite(p)) throw DegenerateInput("circle fit on non-finite point");
  }

  const Normalized norm_pts(points);
  const double cap = radius_cap(points);
  const auto start = kasa(norm_pts.points);

  std::optional<Circle> fitted;
  if (start) {
    const Circle refined = refine(norm_pts.points, *start);
    const Circle world = norm_pts.to_world(refined);
    if (std::isfinite(world.radius) && world.radius > 0.0 && world.radius <= cap) {
      return {world, fit_residual(points, world), false};
    }
    if (is_finite(world.center)) fitted = world;
  }

  std::optional<Point> side;
  if (fitted) side = (1.0 / norm_pts.scale) * (fitted->center - norm_pts.centroid);
  const Point normal = principal_normal(norm_pts, side);
  const Circle capped{norm_pts.centroid + cap * normal, cap};
  return {capped, fit_residual(points, capped), true};
}

}  // namespace arclabel
