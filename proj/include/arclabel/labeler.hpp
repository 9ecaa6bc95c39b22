#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arclabel/arcfit.hpp"
#include "arclabel/area.hpp"
#include "arclabel/pathfinder.hpp"
#include "arclabel/placement.hpp"

namespace arclabel {

enum class NoFitReason { empty_skeleton, degenerate_input, no_paths, no_placement, below_min_height };

std::string_view to_string(NoFitReason reason);

struct LabelerConfig {
  double aspect = 0.18;
  std::size_t k = 8;
  PlacementConfig placement;
  std::size_t verify_samples = 256;
  int bisection_steps = 40;
};

/// Wall-clock seconds per phase. Circle fitting counts towards paths.
struct PhaseTimings {
  double medial_axis = 0.0;
  double paths = 0.0;
  double placement = 0.0;

  double total() const { return medial_axis + paths + placement; }
};

struct LabelCandidate {
  CandidatePath path;
  CircleFit fit;
  /// Best placement on the fitted circle. Verified (and possibly shrunk)
  /// unless it was already no taller than the winner.
  std::optional<Placement> placement;
  /// Verification failed at the optimum and the extent was bisected.
  bool shrunk = false;
};

struct LabelResult {
  std::optional<Placement> best;
  std::optional<NoFitReason> reason;  // set exactly when best is empty
  std::vector<LabelCandidate> candidates;
  PhaseTimings timings;
  std::size_t nodes = 0;  // boundary vertices of the area
};

/// True iff the outline of the band [r - H/2, r + H/2] x [center -
/// extent/2, center + extent/2], sampled with at least `samples` points,
/// stays inside the area and none of its chords touches the boundary. A
/// zero extent degenerates to the baseline point.
bool verify_containment(const Placement& placement, const AreaShape& area,
                        std::size_t samples = 256);

/// Skeleton, candidate paths, one circle per path and the best placement
/// on each circle; keeps the tallest verified label (larger radius on
/// ties). A placement failing verification is shrunk by bisection on its
/// extent and competes at the shrunk size; candidates are checked from
/// the tallest down until no unchecked one can win.
LabelResult label_area(const AreaShape& area, const LabelerConfig& config = {});

/// Labels every area; results come back in input order. `parallel`
/// spreads areas over OpenMP threads.
std::vector<LabelResult> label_all(std::span<const AreaShape> areas, const LabelerConfig& config,
                                   bool parallel = false);

}  // namespace arclabel
