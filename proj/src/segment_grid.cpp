#include "arclabel/segment_grid.hpp"

namespace arclabel {

SegmentGrid::SegmentGrid(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const Segment& s : segments_) {
    bounds_.extend(s.a);
    bounds_.extend(s.b);
  }
  if (segments_.empty()) return;

  const double n = static_cast<double>(segments_.size());
  double w = bounds_.width();
  double h = bounds_.height();
  const double scale = std::max({w, h, 1e-300});
  w = std::max(w, 1e-9 * scale);
  h = std::max(h, 1e-9 * scale);
  constexpr int kMaxSide = 4096;
  columns_ = std::clamp(static_cast<int>(std::lround(std::sqrt(n * w / h))), 1, kMaxSide);
  rows_ = std::clamp(static_cast<int>(std::lround(n / columns_)), 1, kMaxSide);
  cell_w_ = w / columns_;
  cell_h_ = h / rows_;

  const std::size_t cells = static_cast<std::size_t>(columns_) * rows_;
  offsets_.assign(cells + 1, 0);
  for (const Segment& s : segments_) {
    visit_cells(s, [&](std::size_t cell) {
      ++offsets_[cell + 1];
      return false;
    });
  }
  for (std::size_t c = 0; c < cells; ++c) offsets_[c + 1] += offsets_[c];
  items_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    visit_cells(segments_[i], [&](std::size_t cell) {
      items_[cursor[cell]++] = static_cast<std::uint32_t>(i);
      return false;
    });
  }
}

int SegmentGrid::column_of(double x) const {
  const double c = std::floor((x - bounds_.min.x) / cell_w_);
  if (!(c > 0.0)) return 0;
  return c >= columns_ - 1 ? columns_ - 1 : static_cast<int>(c);
}

int SegmentGrid::row_of(double y) const {
  const double r = std::floor((y - bounds_.min.y) / cell_h_);
  if (!(r > 0.0)) return 0;
  return r >= rows_ - 1 ? rows_ - 1 : static_cast<int>(r);
}

bool SegmentGrid::ray_parity(Point p) const {
  if (offsets_.empty() || p.y < bounds_.min.y || p.y > bounds_.max.y || p.x > bounds_.max.x) {
    return false;
  }
  const int row = row_of(p.y);
  bool odd = false;
  for (int c = column_of(p.x); c < columns_; ++c) {
    const std::size_t cell = static_cast<std::size_t>(row) * columns_ + c;
    for (std::uint32_t k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
      const Segment& s = segments_[items_[k]];
      if ((s.a.y > p.y) == (s.b.y > p.y)) continue;
      const double xi = s.a.x + (p.y - s.a.y) * (s.b.x - s.a.x) / (s.b.y - s.a.y);
      // Each crossing is claimed by exactly one column.
      if (xi > p.x && column_of(xi) == c) odd = !odd;
    }
  }
  return odd;
}

bool SegmentGrid::intersects_any(const Segment& s) const {
  return visit_candidates(s, [&](std::size_t i) { return segments_intersect(s, segments_[i]); });
}

}  // namespace arclabel
