#pragma once

#include <array>
#include <string>
#include <vector>

#include "arclabel/io.hpp"
#include "arclabel/labeler.hpp"

namespace arclabel {

struct BenchRow {
  std::string area_id;
  std::size_t nodes = 0;
  PhaseTimings timings;  // seconds
  bool labeled = false;
  /// Reached the placement phase (at least one candidate path).
  bool all_phases = false;
};

/// Mean, standard deviation and spread (max / min) of microseconds per
/// node for one phase.
struct PhaseStats {
  double mean = 0.0;
  double stddev = 0.0;
  double spread = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Medial axis, paths, placement. Taken over the rows that ran all
  /// three phases.
  std::array<PhaseStats, 3> phases;
  std::size_t aggregated_rows = 0;
  std::size_t labeled = 0;
  double total_seconds = 0.0;  // sum of all row phase times
  double wall_seconds = 0.0;   // elapsed time of the whole run
  std::vector<LabelResult> results;
};

inline constexpr std::array<const char*, 3> kPhaseNames = {"medial_axis", "paths", "placement"};

/// Labels every area sequentially and times each phase.
BenchReport run_benchmark(const Dataset& dataset, const LabelerConfig& config);

/// Aggregates rows that ran all three phases (population std).
std::array<PhaseStats, 3> aggregate_phases(const std::vector<BenchRow>& rows,
                                           std::size_t* used = nullptr);

/// area_id,nodes,t_medial_axis,t_paths,t_placement with times in
/// microseconds.
std::string bench_csv(const BenchReport& report);

/// Human-readable per-phase table: mean, std and spread of us/node.
std::string bench_table(const BenchReport& report);

}  // namespace arclabel
