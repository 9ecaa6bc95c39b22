#include "arclabel/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arclabel {
namespace {

double phase_seconds(const PhaseTimings& t, std::size_t phase) {
  switch (phase) {
    case 0:
      return t.medial_axis;
    case 1:
      return t.paths;
    default:
      return t.placement;
  }
}

}  // namespace

std::array<PhaseStats, 3> aggregate_phases(const std::vector<BenchRow>& rows, std::size_t* used) {
  std::array<PhaseStats, 3> stats{};
  std::array<std::vector<double>, 3> per_node;
  for (const BenchRow& row : rows) {
    if (!row.all_phases || row.nodes == 0) continue;
    for (std::size_t ph = 0; ph < 3; ++ph) {
      per_node[ph].push_back(phase_seconds(row.timings, ph) * 1e6 / static_cast<double>(row.nodes));
    }
  }
  if (used != nullptr) *used = per_node[0].size();
  for (std::size_t ph = 0; ph < 3; ++ph) {
    const std::vector<double>& v = per_node[ph];
    if (v.empty()) continue;
    const auto n = static_cast<double>(v.size());
    double sum = 0.0;
    for (const double x : v) sum += x;
    const double mean = sum / n;
    double sq = 0.0;
    for (const double x : v) sq += (x - mean) * (x - mean);
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    stats[ph] = {mean, std::sqrt(sq / n), *lo > 0.0 ? *hi / *lo : HUGE_VAL, *lo, *hi};
  }
  return stats;
}

BenchReport run_benchmark(const Dataset& dataset, const LabelerConfig& config) {
  BenchReport report;
  report.rows.reserve(dataset.areas.size());
  report.results.reserve(dataset.areas.size());
  const auto start = std::chrono::steady_clock::now();
  for (const AreaRecord& area : dataset.areas) {
    LabelResult result = label_area(area.shape, config);
    BenchRow row{area.id, result.nodes, result.timings, result.best.has_value(),
                 !result.candidates.empty()};
    report.total_seconds += result.timings.total();
    report.labeled += row.labeled ? 1 : 0;
    report.rows.push_back(std::move(row));
    report.results.push_back(std::move(result));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.phases = aggregate_phases(report.rows, &report.aggregated_rows);
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "area_id,nodes,t_medial_axis,t_paths,t_placement\n";
  for (const BenchRow& row : report.rows) {
    std::string id = row.area_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (const char c : id) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      id = quoted + "\"";
    }
    out << id << ',' << row.nodes << ',' << row.timings.medial_axis * 1e6 << ','
        << row.timings.paths * 1e6 << ',' << row.timings.placement * 1e6 << '\n';
  }
  return out.str();
}

std::string bench_table(const BenchReport& report) {
  std::size_t nodes = 0;
  for (const BenchRow& row : report.rows) nodes += row.nodes;
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "areas %zu (labelled %zu, aggregated %zu), nodes %zu\n",
                report.rows.size(), report.labeled, report.aggregated_rows, nodes);
  out += line;
  std::snprintf(line, sizeof line, "%-12s %10s %10s %10s\n", "phase", "mean", "std", "spread");
  out += line;
  for (std::size_t ph = 0; ph < 3; ++ph) {
    const PhaseStats& s = report.phases[ph];
    std::snprintf(line, sizeof line, "%-12s %10.3f %10.3f %10.2f\n", kPhaseNames[ph], s.mean,
                  s.stddev, s.spread);
    out += line;
  }
  std::snprintf(line, sizeof line, "total %.3f s (phases), %.3f s (wall)\n", report.total_seconds,
                report.wall_seconds);
  out += line;
  return out;
}

}  // namespace arclabel
