#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arclabel/skeleton.hpp"

namespace arclabel {

/// Subgraph of a skeleton restricted to edges with clearance >= threshold.
/// A view: the underlying graph must outlive it.
class SkeletonView {
 public:
  SkeletonView(const SkeletonGraph& graph, double threshold)
      : graph_(&graph), threshold_(threshold) {}

  const SkeletonGraph& graph() const { return *graph_; }
  double threshold() const { return threshold_; }
  bool has_edge(std::size_t edge) const {
    return graph_->edges()[edge].clearance >= threshold_;
  }
  /// Node with at least one retained edge.
  bool has_node(std::size_t node) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> edge_ids() const;

 private:
  const SkeletonGraph* graph_;
  double threshold_;
};

/// Subgraph holding exactly the edges with clearance >= `threshold`.
SkeletonView prune_by_clearance(const SkeletonGraph& graph, double threshold);

struct FarthestResult {
  std::size_t node = 0;
  double distance = 0.0;
  /// From the nearest source to `node`.
  std::vector<std::size_t> path;
};

/// Multi-source Dijkstra over edge lengths. Returns the node whose
/// distance to its nearest source is largest (lowest id on ties) with the
/// path back to that source; nullopt when `sources` is empty.
std::optional<FarthestResult> farthest_from(const SkeletonView& view,
                                            std::span<const std::size_t> sources);

/// One node per connected component of the view: the node farthest from
/// the component's lowest-id node.
std::vector<std::size_t> component_far_nodes(const SkeletonView& view);

/// Double sweep: farthest pair from component_far_nodes. Exact longest
/// shortest path on trees.
std::optional<FarthestResult> longest_path_estimate(const SkeletonView& view);

struct CandidatePath {
  std::vector<std::size_t> nodes;
  double length = 0.0;
  double min_clearance = 0.0;
  double threshold = 0.0;
};

/// Minimum path length that lets a label of `aspect` use the full height
/// promised by `clearance`.
inline double min_path_length(double clearance, double aspect) {
  return 2.0 * clearance / aspect;
}

struct PathSearchStep {
  double threshold;
  /// Longest path estimate of the pruned graph from component seeds only.
  double sweep_length;
  std::size_t reported;
};

struct PathSearchOptions {
  std::size_t k = 8;
  /// Threshold halvings of the label area before giving up.
  int max_reductions = 10;
  /// When set, one PathSearchStep is appended per visited threshold.
  std::vector<PathSearchStep>* trace = nullptr;
};

/// Up to k diverse paths: start at the maximum clearance, report the
/// longest path estimate while it reaches min_path_length, feed every
/// reported vertex back as a Dijkstra source, and lower the threshold by
/// sqrt(2) whenever the search comes up short.
std::vector<CandidatePath> enumerate_paths(const SkeletonGraph& graph, double aspect,
                                           const PathSearchOptions& options = {});

}  // namespace arclabel
