#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arclabel/area.hpp"
#include "arclabel/geometry.hpp"

namespace arclabel {

/// Radial reach of the label band used when deciding whether a boundary
/// segment interferes. `full` lets a label of height H reach H to either
/// side of the support circle (a segment at distance d blocks once H > d).
/// `centered` matches the band actually drawn, [r - H/2, r + H/2], so a
/// segment blocks once H > 2d.
enum class BandReach { full, centered };

enum class Binding { cap, wedge, interval_end };

std::string_view to_string(Binding binding);
std::string_view to_string(BandReach reach);

struct PlacementConfig {
  double max_extent = kPi / 3.0;
  double min_height = 0.0;
  BandReach reach = BandReach::centered;
};

struct LabelBox {
  double length = 0.0;
  double height = 0.0;
};

/// Solves H = A L and L = (r - H/2) alpha together.
LabelBox extent_to_box(double alpha, double radius, double aspect);

/// Angular extent at which the label height equals `height`. Throws
/// HeightExceedsDiameter when height >= 2 r.
double alpha_for_height(double height, double radius, double aspect);

/// min(2/A, max_extent, 2 pi): 2/A is the extent at which H reaches r.
double extent_cap(double aspect, double max_extent);

/// Constraint from one boundary segment on the extent of a label centred
/// at angle x: base_extent on `flat`, rising with slope 2 on both sides.
struct Wedge {
  double base_extent = 0.0;
  AngularInterval flat;

  double value_at(double theta) const {
    return base_extent + 2.0 * flat.distance_to(theta);
  }
};

/// nullopt when the box is too far from the circle to interfere with any
/// label up to the height cap.
std::optional<Wedge> make_wedge(const AnnularBox& box, const Circle& circle, double aspect,
                                BandReach reach = BandReach::full);

/// Maximal arcs of `circle` inside the area, counter-clockwise. A single
/// full interval when the circle never meets the boundary and lies
/// inside; empty when it lies outside.
std::vector<AngularInterval> feasible_intervals(const Circle& circle, const AreaShape& area);

/// The one-dimensional problem left once circle and area are fixed:
/// maximize F(x) = min(cap, 2 (x - lo), 2 (hi - x), wedge values at x)
/// over the feasible intervals. Interval ends do not bind on a full
/// circle.
struct ArcProblem {
  std::vector<AngularInterval> intervals;
  std::vector<Wedge> wedges;
  double cap = 0.0;
};

struct ArcOptimum {
  double center_angle = 0.0;
  double extent = 0.0;
  Binding binding = Binding::cap;
};

/// Objective F at angle x; -infinity outside every feasible interval.
double arc_objective(const ArcProblem& problem, double x);

/// Ascending sweep over wedge bases with an ordered set of candidate
/// gaps. O(n log n) in the number of wedges. Among maximizers picks the
/// one closest to its interval's midpoint (pi/2 on a full circle), then
/// the smallest angle. nullopt when the best extent is <= 0.
std::optional<ArcOptimum> solve_sweep(const ArcProblem& problem);

/// Evaluates F on a uniform grid of about `grid` angles spread over the
/// feasible intervals (endpoints included); same tie-breaking as the
/// sweep. `parallel` splits the evaluation across OpenMP threads and
/// returns exactly the serial answer.
std::optional<ArcOptimum> solve_bruteforce(const ArcProblem& problem, std::size_t grid,
                                           bool parallel = false);

ArcProblem build_arc_problem(const Circle& circle, const AreaShape& area, double aspect,
                             const PlacementConfig& config = {});

struct Placement {
  Circle circle;
  double center_angle = 0.0;
  double extent = 0.0;
  double length = 0.0;
  double height = 0.0;
  Binding binding = Binding::cap;
};

/// Largest label on `circle`; nullopt when nothing positive fits or the
/// label would be lower than config.min_height.
std::optional<Placement> optimal_on_arc(const Circle& circle, const AreaShape& area,
                                        double aspect, const PlacementConfig& config = {});

std::optional<Placement> optimal_on_arc_bruteforce(const Circle& circle, const AreaShape& area,
                                                   double aspect, std::size_t grid,
                                                   const PlacementConfig& config = {},
                                                   bool parallel = false);

}  // namespace arclabel
