#include <cmath>
#include <stdexcept>

#include "arclabel/io.hpp"

namespace arclabel {
namespace {

Ring densify_ring(const Ring& ring, double max_edge) {
  std::vector<Point> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Segment e = ring.edge(i);
    const auto parts = static_cast<std::size_t>(std::max(1.0, std::ceil(e.length() / max_edge)));
    out.push_back(e.a);
    for (std::size_t j = 1; j < parts; ++j) {
      out.push_back(e.at(static_cast<double>(j) / static_cast<double>(parts)));
    }
  }
  return Ring(std::move(out));
}

}  // namespace

AreaShape densify_boundary(const AreaShape& area, double max_edge) {
  if (!(max_edge > 0.0)) throw std::invalid_argument("max_edge must be positive");
  std::vector<Ring> holes;
  holes.reserve(area.holes().size());
  for (const Ring& h : area.holes()) holes.push_back(densify_ring(h, max_edge));
  return AreaShape(densify_ring(area.outer(), max_edge), std::move(holes));
}

double default_max_edge(const AreaShape& area) { return area.bounds().diagonal() / 200.0; }

}  // namespace arclabel
