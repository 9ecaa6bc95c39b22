#include "arclabel/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "arclabel/errors.hpp"

namespace arclabel {

std::string_view to_string(Binding binding) {
  switch (binding) {
    case Binding::cap:
      return "cap";
    case Binding::wedge:
      return "wedge";
    case Binding::interval_end:
      return "interval_end";
  }
  return "unknown";
}

std::string_view to_string(BandReach reach) {
  return reach == BandReach::full ? "full" : "centered";
}

LabelBox extent_to_box(double alpha, double radius, double aspect) {
  const double length = radius * alpha / (1.0 + 0.5 * aspect * alpha);
  return {length, aspect * length};
}

double alpha_for_height(double height, double radius, double aspect) {
  if (height < 0.0) throw std::invalid_argument("label height must be non-negative");
  if (height >= 2.0 * radius) {
    throw HeightExceedsDiameter("label height reaches the support circle's diameter");
  }
  return height / (aspect * (radius - 0.5 * height));
}

double extent_cap(double aspect, double max_extent) {
  return std::min({2.0 / aspect, max_extent, kTwoPi});
}

std::optional<Wedge> make_wedge(const AnnularBox& box, const Circle& circle, double aspect,
                                BandReach reach) {
  const double r = circle.radius;
  double d = 0.0;
  if (r < box.rho_min || r > box.rho_max) {
    d = std::min(std::abs(box.rho_min - r), std::abs(r - box.rho_max));
  }
  // A label never grows beyond H = r (the extent cap 2/A).
  const double blocking_height = reach == BandReach::full ? d : 2.0 * d;
  if (blocking_height >= r) return std::nullopt;
  const double base = d == 0.0 ? 0.0 : alpha_for_height(blocking_height, r, aspect);
  return Wedge{base, AngularInterval::from_start(box.angular.lo - 0.5 * base,
                                                 box.angular.span() + base)};
}

std::vector<AngularInterval> feasible_intervals(const Circle& circle, const AreaShape& area) {
  const Point c = circle.center;
  const double r = circle.radius;
  std::vector<double> angles;
  for (const Segment& s : area.boundary()) {
    const Point d = s.b - s.a;
    const Point f = s.a - c;
    const double a = dot(d, d);
    const double half_b = dot(f, d);
    const double cc = dot(f, f) - r * r;
    const double disc = half_b * half_b - a * cc;
    if (disc < 0.0 || a == 0.0) continue;
    const double root = std::sqrt(disc);
    // Stable pair of roots of a t^2 + 2 half_b t + cc = 0.
    const double q = -(half_b + std::copysign(root, half_b));
    double ts[2] = {q / a, q != 0.0 ? cc / q : q / a};
    for (double t : ts) {
      if (t < 0.0 || t > 1.0) continue;
      const Point p = s.at(t) - c;
      angles.push_back(normalize_angle(std::atan2(p.y, p.x)));
    }
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  if (angles.empty()) {
    if (point_in_area(circle.at_angle(0.0), area)) return {AngularInterval::full()};
    return {};
  }

  const std::size_t n = angles.size();
  std::vector<char> inside(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = angles[i];
    const double hi = i + 1 < n ? angles[i + 1] : angles[0] + kTwoPi;
    inside[i] = point_in_area(circle.at_angle(0.5 * (lo + hi)), area) ? 1 : 0;
  }
  if (std::all_of(inside.begin(), inside.end(), [](char v) { return v != 0; })) {
    return {AngularInterval::full()};
  }

  // Start right after an outside gap so merged runs never wrap the list.
  std::size_t first = 0;
  while (inside[first]) ++first;
  std::vector<AngularInterval> out;
  std::size_t i = (first + 1) % n;
  for (std::size_t visited = 0; visited < n;) {
    if (!inside[i]) {
      i = (i + 1) % n;
      ++visited;
      continue;
    }
    const double lo = angles[i];
    double span = 0.0;
    while (visited < n && inside[i]) {
      const double hi = i + 1 < n ? angles[i + 1] : angles[0] + kTwoPi;
      span += hi - angles[i];
      i = (i + 1) % n;
      ++visited;
    }
    out.push_back(AngularInterval::from_start(lo, span));
  }
  std::sort(out.begin(), out.end(),
            [](const AngularInterval& a, const AngularInterval& b) { return a.lo < b.lo; });
  return out;
}

namespace {

enum class Edge : unsigned char { interval_end, wedge };

struct Gap {
  double right;
  Edge left_kind;
  Edge right_kind;
  double preferred;  // midpoint of the feasible interval the gap lies in
};

// Candidate maximizer: the point of [a, b] closest to `preferred`, ties
// resolved towards the smaller normalized angle.
struct Choice {
  double angle = 0.0;
  double offset = std::numeric_limits<double>::infinity();
  bool valid = false;
};

Choice closest_in(double a, double b, double preferred) {
  if (b < a) a = b = 0.5 * (a + b);
  Choice best;
  for (int k = -2; k <= 2; ++k) {
    const double target = preferred + kTwoPi * k;
    const double x = std::clamp(target, a, b);
    const double offset = std::abs(x - target);
    const double angle = normalize_angle(x);
    if (!best.valid || offset < best.offset ||
        (offset == best.offset && angle < best.angle)) {
      best = {angle, offset, true};
    }
  }
  return best;
}

bool better(const Choice& c, const Choice& best) {
  if (!best.valid) return true;
  if (c.offset != best.offset) return c.offset < best.offset;
  return c.angle < best.angle;
}

constexpr double kFullCirclePreferred = kPi / 2.0;

class GapSweep {
 public:
  void add(double left, Gap gap) {
    const auto found = gaps_.find(left);
    if (found != gaps_.end()) {
      if (found->second.right >= gap.right) return;
      erase(found);
    }
    gaps_.emplace(left, gap);
    widths_.insert(gap.right - left);
  }

  double max_width() const {
    return widths_.empty() ? -std::numeric_limits<double>::infinity() : *widths_.rbegin();
  }

  // Applies the constraint of a wedge with blocked core [beta1, beta2]
  // to every gap alive at `level`.
  void cut(double beta1, double beta2, double level) {
    affected_.clear();
    auto it = gaps_.lower_bound(beta2);
    while (it != gaps_.begin()) {
      --it;
      if (it->second.right - it->first < level) {
        it = erase(it);
        continue;
      }
      if (it->second.right <= beta1) break;
      affected_.emplace_back(it->first, it->second);
    }
    for (const auto& [left, gap] : affected_) {
      consumed_.emplace_back(left, gap);
      erase(gaps_.find(left));
      if (beta1 - left >= level) add(left, {beta1, gap.left_kind, Edge::wedge, gap.preferred});
      if (gap.right - beta2 >= level) {
        add(beta2, {gap.right, Edge::wedge, gap.right_kind, gap.preferred});
      }
    }
  }

  void begin_level() { consumed_.clear(); }
  const std::vector<std::pair<double, Gap>>& consumed() const { return consumed_; }
  const std::map<double, Gap>& gaps() const { return gaps_; }

 private:
  std::map<double, Gap>::iterator erase(std::map<double, Gap>::iterator it) {
    widths_.erase(widths_.find(it->second.right - it->first));
    return gaps_.erase(it);
  }

  std::map<double, Gap> gaps_;
  std::multiset<double> widths_;
  std::vector<std::pair<double, Gap>> affected_;
  std::vector<std::pair<double, Gap>> consumed_;
};

struct CoreWedge {
  double base;
  double beta1;
  double beta2;
};

CoreWedge core_of(const Wedge& w) {
  const double beta1 = w.flat.lo + 0.5 * w.base_extent;
  return {w.base_extent, beta1, beta1 + (w.flat.span() - w.base_extent)};
}

}  // namespace

double arc_objective(const ArcProblem& problem, double x) {
  double value = -std::numeric_limits<double>::infinity();
  for (const AngularInterval& iv : problem.intervals) {
    if (iv.is_full()) {
      value = problem.cap;
      break;
    }
    if (!iv.contains(x)) continue;
    const double from_lo = normalize_angle(x - iv.lo);
    const double to_hi = iv.span() - from_lo;
    value = std::max(value, std::min({problem.cap, 2.0 * from_lo, 2.0 * to_hi}));
  }
  if (value == -std::numeric_limits<double>::infinity()) return value;
  for (const Wedge& w : problem.wedges) value = std::min(value, w.value_at(x));
  return value;
}

std::optional<ArcOptimum> solve_sweep(const ArcProblem& problem) {
  if (problem.intervals.empty() || !(problem.cap > 0.0)) return std::nullopt;
  const bool full_circle = problem.intervals.size() == 1 && problem.intervals[0].is_full();

  std::vector<CoreWedge> heap;
  heap.reserve(problem.wedges.size());
  for (const Wedge& w : problem.wedges) {
    if (w.base_extent < problem.cap) heap.push_back(core_of(w));
  }
  const auto later = [](const CoreWedge& a, const CoreWedge& b) {
    if (a.base != b.base) return a.base > b.base;
    return a.beta1 > b.beta1;
  };
  std::make_heap(heap.begin(), heap.end(), later);

  GapSweep sweep;
  if (!full_circle) {
    for (const AngularInterval& iv : problem.intervals) {
      sweep.add(iv.lo, {iv.hi, Edge::interval_end, Edge::interval_end, 0.5 * (iv.lo + iv.hi)});
    }
  } else if (heap.empty()) {
    return ArcOptimum{kFullCirclePreferred, problem.cap, Binding::cap};
  }

  // Level below which the gap set is known to be non-empty, together
  // with the gaps that were alive there.
  double last_level = -std::numeric_limits<double>::infinity();
  bool last_level_full_circle = false;

  while (!heap.empty()) {
    const double level = heap.front().base;
    if (full_circle && last_level == -std::numeric_limits<double>::infinity()) {
      // The first wedge turns the circle into its complementary arc.
      const CoreWedge& w = heap.front();
      sweep.begin_level();
      last_level_full_circle = true;
      if (w.beta1 + kTwoPi - w.beta2 >= level) {
        sweep.add(w.beta2, {w.beta1 + kTwoPi, Edge::wedge, Edge::wedge, kFullCirclePreferred});
      }
    } else {
      if (sweep.max_width() < level) break;
      sweep.begin_level();
      last_level_full_circle = false;
    }
    last_level = level;
    while (!heap.empty() && heap.front().base == level) {
      const CoreWedge w = heap.front();
      std::pop_heap(heap.begin(), heap.end(), later);
      heap.pop_back();
      for (int m = -1; m <= 2; ++m) sweep.cut(w.beta1 + kTwoPi * m, w.beta2 + kTwoPi * m, level);
    }
  }

  const double widest = sweep.max_width();
  double best_level = std::min(widest, problem.cap);
  const bool from_last_level = last_level > best_level;
  if (from_last_level) best_level = last_level;
  if (!(best_level > 0.0)) return std::nullopt;

  Binding binding = Binding::cap;
  if (from_last_level || best_level < problem.cap) binding = Binding::wedge;

  Choice best;
  Binding best_binding = binding;
  const auto consider = [&](double left, const Gap& gap) {
    if (gap.right - left < best_level) return;
    const Choice c = closest_in(left + 0.5 * best_level, gap.right - 0.5 * best_level,
                                gap.preferred);
    if (better(c, best)) {
      best = c;
      if (!from_last_level && best_level < problem.cap) {
        const bool wedge = gap.left_kind == Edge::wedge || gap.right_kind == Edge::wedge;
        best_binding = wedge ? Binding::wedge : Binding::interval_end;
      }
    }
  };
  if (from_last_level) {
    if (last_level_full_circle) {
      return ArcOptimum{kFullCirclePreferred, best_level, Binding::wedge};
    }
    for (const auto& [left, gap] : sweep.consumed()) consider(left, gap);
  } else {
    for (const auto& [left, gap] : sweep.gaps()) consider(left, gap);
  }
  if (!best.valid) return std::nullopt;
  return ArcOptimum{best.angle, best_level, best_binding};
}

ArcProblem build_arc_problem(const Circle& circle, const AreaShape& area, double aspect,
                             const PlacementConfig& config) {
  ArcProblem problem;
  problem.cap = extent_cap(aspect, config.max_extent);
  problem.intervals = feasible_intervals(circle, area);
  if (problem.intervals.empty()) return problem;

  const Point c = circle.center;
  const auto add_boxes = [&](const std::vector<AnnularBox>& boxes) {
    for (const AnnularBox& box : boxes) {
      if (auto w = make_wedge(box, circle, aspect, config.reach)) problem.wedges.push_back(*w);
    }
  };
  for (const Segment& s : area.boundary()) {
    try {
      add_boxes(annular_bbox(s, c));
    } catch (const DegenerateSegment&) {
      // The segment runs through the centre: box each half as a radial
      // spoke from the centre to the endpoint.
      for (const Point& e : {s.a, s.b}) {
        if (e == c) continue;
        const double theta = normalize_angle(std::atan2(e.y - c.y, e.x - c.x));
        add_boxes({AnnularBox{0.0, distance(e, c), {theta, theta}}});
      }
    }
  }
  return problem;
}

namespace {

std::optional<Placement> to_placement(const Circle& circle, double aspect,
                                      const PlacementConfig& config,
                                      const std::optional<ArcOptimum>& opt) {
  if (!opt || !(opt->extent > 0.0)) return std::nullopt;
  const LabelBox box = extent_to_box(opt->extent, circle.radius, aspect);
  if (box.height < config.min_height) return std::nullopt;
  return Placement{circle, opt->center_angle, opt->extent, box.length, box.height, opt->binding};
}

}  // namespace

std::optional<Placement> optimal_on_arc(const Circle& circle, const AreaShape& area,
                                        double aspect, const PlacementConfig& config) {
  const ArcProblem problem = build_arc_problem(circle, area, aspect, config);
  return to_placement(circle, aspect, config, solve_sweep(problem));
}

std::optional<Placement> optimal_on_arc_bruteforce(const Circle& circle, const AreaShape& area,
                                                   double aspect, std::size_t grid,
                                                   const PlacementConfig& config,
                                                   bool parallel) {
  const ArcProblem problem = build_arc_problem(circle, area, aspect, config);
  return to_placement(circle, aspect, config, solve_bruteforce(problem, grid, parallel));
}

}  // namespace arclabel
