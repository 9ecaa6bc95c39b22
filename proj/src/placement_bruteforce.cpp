#include <algorithm>
#include <cmath>
#include <limits>

#include "arclabel/placement.hpp"

namespace arclabel {
namespace {

struct Sample {
  double angle;
  double preferred;
  const AngularInterval* interval;  // nullptr on a full circle
};

struct Evaluation {
  double value;
  Binding binding;
};

Evaluation evaluate(const ArcProblem& problem, const Sample& s) {
  Evaluation e{problem.cap, Binding::cap};
  if (s.interval != nullptr) {
    const double from_lo = s.angle - s.interval->lo;
    const double end = 2.0 * std::min(from_lo, s.interval->span() - from_lo);
    if (end < e.value) e = {end, Binding::interval_end};
  }
  for (const Wedge& w : problem.wedges) {
    if (w.base_extent >= e.value) continue;
    // Same as w.value_at() without the fmod: sample angles stay in [0, 4pi).
    double d = s.angle - w.flat.lo;
    while (d < 0.0) d += kTwoPi;
    while (d >= kTwoPi) d -= kTwoPi;
    const double span = w.flat.span();
    const double gap = d <= span ? 0.0 : std::min(d - span, kTwoPi - d);
    const double v = w.base_extent + 2.0 * gap;
    if (v < e.value) e = {v, Binding::wedge};
  }
  return e;
}

}  // namespace

std::optional<ArcOptimum> solve_bruteforce(const ArcProblem& problem, std::size_t grid,
                                           bool parallel) {
  if (problem.intervals.empty() || grid == 0) return std::nullopt;

  std::vector<Sample> samples;
  const bool full_circle = problem.intervals.size() == 1 && problem.intervals[0].is_full();
  if (full_circle) {
    samples.reserve(grid);
    for (std::size_t j = 0; j < grid; ++j) {
      samples.push_back({kTwoPi * static_cast<double>(j) / static_cast<double>(grid), kPi / 2.0,
                         nullptr});
    }
  } else {
    double total = 0.0;
    for (const AngularInterval& iv : problem.intervals) total += iv.span();
    for (const AngularInterval& iv : problem.intervals) {
      const double share = total > 0.0 ? iv.span() / total : 1.0;
      const auto n = std::max<std::size_t>(
          2, static_cast<std::size_t>(std::ceil(share * static_cast<double>(grid))) + 1);
      const double mid = 0.5 * (iv.lo + iv.hi);
      for (std::size_t j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(n - 1);
        samples.push_back({iv.lo + t * iv.span(), mid, &iv});
      }
    }
  }

  std::vector<Evaluation> values(samples.size());
  const auto count = static_cast<std::ptrdiff_t>(samples.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) values[i] = evaluate(problem, samples[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) values[i] = evaluate(problem, samples[i]);
  }

  // Serial reduction keeps the tie-break independent of thread count.
  std::optional<std::size_t> best;
  double best_offset = 0.0;
  double best_angle = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double angle = normalize_angle(samples[i].angle);
    const double offset = circular_distance(samples[i].angle, samples[i].preferred);
    if (best) {
      const double v = values[i].value;
      const double bv = values[*best].value;
      if (v < bv) continue;
      if (v == bv && (offset > best_offset || (offset == best_offset && angle >= best_angle))) {
        continue;
      }
    }
    best = i;
    best_offset = offset;
    best_angle = angle;
  }
  if (!best || !(values[*best].value > 0.0)) return std::nullopt;
  return ArcOptimum{best_angle, values[*best].value, values[*best].binding};
}

}  // namespace arclabel
