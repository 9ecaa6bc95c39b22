#pragma once

#include <optional>
#include <span>

#include "arclabel/geometry.hpp"

namespace arclabel {

struct CircleFit {
  Circle circle;
  /// Sum over the points of (|p - c| - r)^2.
  double residual = 0.0;
  /// The fitted radius exceeded radius_cap() and the circle was replaced
  /// by a near-straight one of exactly that radius.
  bool capped = false;
};

/// Geometric least-squares objective of `circle` over `points`.
double fit_residual(std::span<const Point> points, const Circle& circle);

/// Largest radius a fit may return: 1000 times the diagonal of the
/// points' bounding box.
double radius_cap(std::span<const Point> points);

/// Algebraic (Kasa) fit: linear least squares on x^2 + y^2 + Dx + Ey + F.
/// nullopt when the points are (numerically) collinear.
std::optional<Circle> fit_circle_algebraic(std::span<const Point> points);

/// Algebraic start refined by Levenberg-Marquardt on the geometric
/// objective (at most 50 iterations, stops once the relative parameter
/// change drops below 1e-10). Fits with radius above radius_cap(), and
/// collinear inputs, come back capped: centre on the normal through the
/// centroid at distance radius_cap(). Throws DegenerateInput for fewer
/// than three distinct points.
CircleFit fit_circle(std::span<const Point> points);

}  // namespace arclabel
