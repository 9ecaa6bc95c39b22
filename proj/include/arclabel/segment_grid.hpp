#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "arclabel/geometry.hpp"

namespace arclabel {

/// Uniform bucket grid over a fixed set of segments. Every segment is
/// registered in each cell its (slightly padded) supercover touches, so
/// traversal queries never miss a candidate.
class SegmentGrid {
 public:
  SegmentGrid() = default;
  explicit SegmentGrid(std::vector<Segment> segments);

  std::span<const Segment> segments() const { return segments_; }
  const BoundingBox& bounds() const { return bounds_; }
  int columns() const { return columns_; }
  int rows() const { return rows_; }

  /// Even-odd parity of a +x ray from `p` using the half-open rule
  /// (a.y > p.y) != (b.y > p.y); true means an odd number of crossings.
  bool ray_parity(Point p) const;

  /// True iff `s` shares a point with any registered segment.
  bool intersects_any(const Segment& s) const;

  /// Calls `fn(index)` for candidate segments near `s` until it returns
  /// true. An index may be reported more than once.
  template <typename Fn>
  bool visit_candidates(const Segment& s, Fn&& fn) const {
    return visit_cells(s, [&](std::size_t cell) {
      for (std::uint32_t k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
        if (fn(static_cast<std::size_t>(items_[k]))) return true;
      }
      return false;
    });
  }

 private:
  int column_of(double x) const;
  int row_of(double y) const;

  // Supercover of `s` over the grid; `fn(cell)` returns true to stop early.
  template <typename Fn>
  bool visit_cells(const Segment& s, Fn&& fn) const {
    if (offsets_.empty()) return false;
    const double pad_x = 1e-6 * cell_w_;
    const double pad_y = 1e-6 * cell_h_;
    const double xmin = std::min(s.a.x, s.b.x) - pad_x;
    const double xmax = std::max(s.a.x, s.b.x) + pad_x;
    const double ymin = std::min(s.a.y, s.b.y) - pad_y;
    const double ymax = std::max(s.a.y, s.b.y) + pad_y;
    if (xmax < bounds_.min.x || xmin > bounds_.max.x || ymax < bounds_.min.y ||
        ymin > bounds_.max.y) {
      return false;
    }
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const bool steep = std::abs(dx) <= 1e-12 * std::abs(dy);
    const int c0 = column_of(xmin);
    const int c1 = column_of(xmax);
    for (int c = c0; c <= c1; ++c) {
      double y_lo = ymin;
      double y_hi = ymax;
      if (!steep && dx != 0.0) {
        const double sx0 = std::max(xmin, bounds_.min.x + c * cell_w_);
        const double sx1 = std::min(xmax, bounds_.min.x + (c + 1) * cell_w_);
        const double ya = s.a.y + (sx0 - s.a.x) * dy / dx;
        const double yb = s.a.y + (sx1 - s.a.x) * dy / dx;
        y_lo = std::max(ymin, std::min(ya, yb) - pad_y);
        y_hi = std::min(ymax, std::max(ya, yb) + pad_y);
      }
      const int r0 = row_of(y_lo);
      const int r1 = row_of(y_hi);
      for (int r = r0; r <= r1; ++r) {
        if (fn(static_cast<std::size_t>(r) * columns_ + c)) return true;
      }
    }
    return false;
  }

  std::vector<Segment> segments_;
  BoundingBox bounds_;
  int columns_ = 1;
  int rows_ = 1;
  double cell_w_ = 1.0;
  double cell_h_ = 1.0;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> items_;
};

}  // namespace arclabel
