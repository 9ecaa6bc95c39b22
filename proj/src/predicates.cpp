#include "arclabel/predicates.hpp"

#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace arclabel {
namespace {

// Differences of doubles and the degree-4 in-circle polynomial stay exact
// in 320 bits as long as the coordinates share a similar exponent range.
using Wide = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<320, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

constexpr double kEpsilon = 1.1102230246251565e-16;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIncircleBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

double sign_of(const Wide& v) {
  if (v > 0) return 1.0;
  if (v < 0) return -1.0;
  return 0.0;
}

double orient2d_exact(Point a, Point b, Point c) {
  const Wide acx = Wide(a.x) - Wide(c.x);
  const Wide bcx = Wide(b.x) - Wide(c.x);
  const Wide acy = Wide(a.y) - Wide(c.y);
  const Wide bcy = Wide(b.y) - Wide(c.y);
  return sign_of(acx * bcy - acy * bcx);
}

double incircle_exact(Point a, Point b, Point c, Point d) {
  const Wide adx = Wide(a.x) - Wide(d.x);
  const Wide ady = Wide(a.y) - Wide(d.y);
  const Wide bdx = Wide(b.x) - Wide(d.x);
  const Wide bdy = Wide(b.y) - Wide(d.y);
  const Wide cdx = Wide(c.x) - Wide(d.x);
  const Wide cdy = Wide(c.y) - Wide(d.y);
  const Wide alift = adx * adx + ady * ady;
  const Wide blift = bdx * bdx + bdy * bdy;
  const Wide clift = cdx * cdx + cdy * cdy;
  const Wide det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                   clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

}  // namespace

Point circumcenter_offset_wide(Point a, Point b, Point c) {
  const Wide dx = Wide(b.x) - Wide(a.x);
  const Wide dy = Wide(b.y) - Wide(a.y);
  const Wide ex = Wide(c.x) - Wide(a.x);
  const Wide ey = Wide(c.y) - Wide(a.y);
  const Wide bl = dx * dx + dy * dy;
  const Wide cl = ex * ex + ey * ey;
  const Wide det = dx * ey - dy * ex;
  if (det == 0) return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  const Wide ox = (ey * bl - dy * cl) / (2 * det);
  const Wide oy = (dx * cl - ex * bl) / (2 * det);
  return {static_cast<double>(ox), static_cast<double>(oy)};
}

double orient2d(Point a, Point b, Point c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound || -det > bound) return det;
  if (left == 0.0 && right == 0.0) return 0.0;
  return orient2d_exact(a, b, c);
}

double incircle(Point a, Point b, Point c, Point d) {
  const double adx = a.x - d.x;
  const double ady = a.y - d.y;
  const double bdx = b.x - d.x;
  const double bdy = b.y - d.y;
  const double cdx = c.x - d.x;
  const double cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy;
  const double cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady;
  const double adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy;
  const double bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound || -det > bound) return det;
  return incircle_exact(a, b, c, d);
}

}  // namespace arclabel
