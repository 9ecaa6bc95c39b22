#pragma once

#include "arclabel/geometry.hpp"

namespace arclabel {

/// Sign-exact orientation test: > 0 when a, b, c turn counter-clockwise,
/// < 0 when clockwise, 0 when collinear. The magnitude is only an estimate
/// (twice the signed triangle area) and exact sign is guaranteed for inputs
/// whose exponents span less than ~200 bits.
double orient2d(Point a, Point b, Point c);

/// Sign-exact in-circle test: > 0 when d lies inside the circle through
/// a, b, c (given counter-clockwise a, b, c), < 0 outside, 0 cocircular.
double incircle(Point a, Point b, Point c, Point d);

/// Circumcenter of a, b, c relative to a, evaluated in extended precision.
/// For use when the double determinant underflows to zero; collinear input
/// gives an infinite offset.
Point circumcenter_offset_wide(Point a, Point b, Point c);

}  // namespace arclabel
