#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "arclabel/io.hpp"
#include "arclabel/labeler.hpp"
#include "arclabel/placement.hpp"

using namespace arclabel;

namespace {

// Star-shaped polygon around the origin with radii in [6, 10], densified
// to roughly `target` boundary vertices.
AreaShape star(std::mt19937_64& rng, std::size_t corners, double target) {
  std::uniform_real_distribution<double> radius(6.0, 10.0);
  std::vector<Point> ring;
  for (std::size_t i = 0; i < corners; ++i) {
    const double a = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(corners);
    const double r = radius(rng);
    ring.push_back({r * std::cos(a), r * std::sin(a)});
  }
  const AreaShape coarse{Ring(ring)};
  double perimeter = 0.0;
  for (const Segment& s : coarse.boundary()) perimeter += s.length();
  return densify_boundary(coarse, perimeter / target);
}

ArcProblem problem_with_segments(std::size_t segments) {
  std::mt19937_64 rng(7);
  const AreaShape area = star(rng, 24, static_cast<double>(segments));
  return build_arc_problem({{0.5, -0.3}, 5.0}, area, 0.15);
}

std::vector<AreaShape> batch(std::size_t count, double target) {
  std::mt19937_64 rng(11);
  std::vector<AreaShape> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(star(rng, 30, target));
  return out;
}

void bm_sweep(benchmark::State& state) {
  const ArcProblem p = problem_with_segments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_sweep(p));
  state.counters["wedges"] = static_cast<double>(p.wedges.size());
}

void bm_bruteforce_serial(benchmark::State& state) {
  const ArcProblem p = problem_with_segments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bruteforce(p, 100000, false));
  state.counters["wedges"] = static_cast<double>(p.wedges.size());
}

void bm_bruteforce_parallel(benchmark::State& state) {
  const ArcProblem p = problem_with_segments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bruteforce(p, 100000, true));
  state.counters["wedges"] = static_cast<double>(p.wedges.size());
}

void bm_label_all(benchmark::State& state, bool parallel) {
  const std::vector<AreaShape> areas = batch(32, static_cast<double>(state.range(0)));
  const LabelerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(label_all(areas, cfg, parallel));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(areas.size()));
}

}  // namespace

BENCHMARK(bm_sweep)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_bruteforce_serial)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bruteforce_parallel)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_label_all, serial, false)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_label_all, parallel, true)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
