#include "arclabel/labeler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>

#include "arclabel/errors.hpp"
#include "arclabel/skeleton.hpp"

namespace arclabel {

std::string_view to_string(NoFitReason reason) {
  switch (reason) {
    case NoFitReason::empty_skeleton:
      return "empty_skeleton";
    case NoFitReason::degenerate_input:
      return "degenerate_input";
    case NoFitReason::no_paths:
      return "no_paths";
    case NoFitReason::no_placement:
      return "no_placement";
    case NoFitReason::below_min_height:
      return "below_min_height";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Point> band_outline(const Placement& p, std::size_t samples) {
  const double inner = p.circle.radius - 0.5 * p.height;
  const double outer = p.circle.radius + 0.5 * p.height;
  const double start = p.center_angle - 0.5 * p.extent;
  const double end = p.center_angle + 0.5 * p.extent;
  constexpr std::size_t kCapPoints = 8;
  const std::size_t arc_points = std::max<std::size_t>(2, (samples - 2 * kCapPoints + 1) / 2 + 1);

  const auto on_circle = [&](double radius, double theta) {
    return Point{p.circle.center.x + radius * std::cos(theta),
                 p.circle.center.y + radius * std::sin(theta)};
  };
  std::vector<Point> outline;
  outline.reserve(2 * (arc_points + kCapPoints));
  for (std::size_t i = 0; i < arc_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(arc_points - 1);
    outline.push_back(on_circle(inner, start + t * (end - start)));
  }
  for (std::size_t i = 1; i <= kCapPoints; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kCapPoints + 1);
    outline.push_back(on_circle(inner + t * (outer - inner), end));
  }
  for (std::size_t i = 0; i < arc_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(arc_points - 1);
    outline.push_back(on_circle(outer, end - t * (end - start)));
  }
  for (std::size_t i = 1; i <= kCapPoints; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kCapPoints + 1);
    outline.push_back(on_circle(outer - t * (outer - inner), start));
  }
  return outline;
}

Placement with_extent(const Placement& p, double extent, double aspect) {
  Placement q = p;
  q.extent = extent;
  const LabelBox box = extent_to_box(extent, p.circle.radius, aspect);
  q.length = box.length;
  q.height = box.height;
  return q;
}

// Largest verified placement on the candidate's arc, or nullopt.
std::optional<Placement> verified(const Placement& p, const AreaShape& area,
                                  const LabelerConfig& config) {
  if (verify_containment(p, area, config.verify_samples)) return p;
  double lo = 0.0;
  double hi = p.extent;
  for (int step = 0; step < config.bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (verify_containment(with_extent(p, mid, config.aspect), area, config.verify_samples)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(lo > 0.0)) return std::nullopt;
  return with_extent(p, lo, config.aspect);
}

bool taller(const Placement& a, const Placement& b) {
  if (a.height != b.height) return a.height > b.height;
  return a.circle.radius > b.circle.radius;
}

std::vector<Point> fit_points(const SkeletonGraph& graph, const CandidatePath& path) {
  std::vector<Point> pts;
  pts.reserve(path.nodes.size() + 1);
  for (const std::size_t n : path.nodes) pts.push_back(graph.nodes()[n].position);
  if (pts.size() == 2) pts.insert(pts.begin() + 1, 0.5 * (pts[0] + pts[1]));
  return pts;
}

}  // namespace

bool verify_containment(const Placement& placement, const AreaShape& area, std::size_t samples) {
  if (placement.extent <= 0.0 || placement.height <= 0.0) {
    return point_in_area(placement.circle.at_angle(placement.center_angle), area);
  }
  const std::vector<Point> outline = band_outline(placement, std::max<std::size_t>(samples, 16));
  for (const Point& q : outline) {
    if (!point_in_area(q, area)) return false;
  }
  for (std::size_t i = 0; i < outline.size(); ++i) {
    const Segment chord{outline[i], outline[(i + 1) % outline.size()]};
    if (segment_crosses_boundary(chord, area)) return false;
  }
  return true;
}

LabelResult label_area(const AreaShape& area, const LabelerConfig& config) {
  LabelResult result;
  result.nodes = area.vertex_count();

  auto start = Clock::now();
  SkeletonGraph graph;
  try {
    graph = build_skeleton(area);
  } catch (const EmptySkeleton&) {
    result.timings.medial_axis = seconds_since(start);
    result.reason = NoFitReason::empty_skeleton;
    return result;
  } catch (const DegenerateInput&) {
    result.timings.medial_axis = seconds_since(start);
    result.reason = NoFitReason::degenerate_input;
    return result;
  }
  result.timings.medial_axis = seconds_since(start);

  start = Clock::now();
  PathSearchOptions options;
  options.k = config.k;
  std::vector<CandidatePath> paths = enumerate_paths(graph, config.aspect, options);
  for (CandidatePath& path : paths) {
    const std::vector<Point> pts = fit_points(graph, path);
    try {
      CircleFit fit = fit_circle(pts);
      result.candidates.push_back({std::move(path), fit, std::nullopt});
    } catch (const DegenerateInput&) {
      // Coincident node positions: no circle to follow.
    }
  }
  result.timings.paths = seconds_since(start);
  if (result.candidates.empty()) {
    result.reason = NoFitReason::no_paths;
    return result;
  }

  start = Clock::now();
  PlacementConfig unlimited = config.placement;
  unlimited.min_height = 0.0;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    LabelCandidate& c = result.candidates[i];
    c.placement = optimal_on_arc(c.fit.circle, area, config.aspect, unlimited);
    if (c.placement) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return taller(*result.candidates[a].placement, *result.candidates[b].placement);
  });
  // Verification only ever shrinks a label, so candidates whose optimum is
  // no taller than the best verified label need no check.
  for (const std::size_t i : order) {
    LabelCandidate& c = result.candidates[i];
    if (result.best && !taller(*c.placement, *result.best)) break;
    const double raw_extent = c.placement->extent;
    c.placement = verified(*c.placement, area, config);
    c.shrunk = c.placement && c.placement->extent < raw_extent;
    if (c.placement && (!result.best || taller(*c.placement, *result.best))) {
      result.best = c.placement;
    }
  }
  result.timings.placement = seconds_since(start);

  if (!result.best) {
    result.reason = NoFitReason::no_placement;
  } else if (result.best->height < config.placement.min_height) {
    result.best.reset();
    result.reason = NoFitReason::below_min_height;
  }
  return result;
}

std::vector<LabelResult> label_all(std::span<const AreaShape> areas, const LabelerConfig& config,
                                   bool parallel) {
  std::vector<LabelResult> results(areas.size());
  const auto count = static_cast<std::ptrdiff_t>(areas.size());
  if (!parallel) {
    for (std::ptrdiff_t i = 0; i < count; ++i) results[i] = label_area(areas[i], config);
    return results;
  }
  std::vector<std::exception_ptr> errors(areas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      results[i] = label_area(areas[i], config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace arclabel
