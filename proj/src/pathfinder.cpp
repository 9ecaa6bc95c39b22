#include "arclabel/pathfinder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

namespace arclabel {

bool SkeletonView::has_node(std::size_t node) const {
  for (const auto& nb : graph_->neighbors(node)) {
    if (has_edge(nb.edge)) return true;
  }
  return false;
}

std::size_t SkeletonView::edge_count() const {
  std::size_t n = 0;
  for (std::size_t e = 0; e < graph_->edge_count(); ++e) n += has_edge(e) ? 1 : 0;
  return n;
}

std::vector<std::size_t> SkeletonView::edge_ids() const {
  std::vector<std::size_t> ids;
  for (std::size_t e = 0; e < graph_->edge_count(); ++e) {
    if (has_edge(e)) ids.push_back(e);
  }
  return ids;
}

SkeletonView prune_by_clearance(const SkeletonGraph& graph, double threshold) {
  return SkeletonView(graph, threshold);
}

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();
constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<std::size_t> pred_edge;

  explicit ShortestPaths(std::size_t n) : dist(n, kUnreached), pred_edge(n, kNoNode) {}
};

// Settles everything reachable from `sources`; returns the farthest
// settled node (lowest id on ties) or kNoNode.
std::size_t run_dijkstra(const SkeletonView& view, std::span<const std::size_t> sources,
                         ShortestPaths& sp) {
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const std::size_t s : sources) {
    if (sp.dist[s] == 0.0) continue;
    sp.dist[s] = 0.0;
    sp.pred_edge[s] = kNoNode;
    queue.emplace(0.0, s);
  }
  const SkeletonGraph& g = view.graph();
  std::size_t far = kNoNode;
  double far_dist = -1.0;
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > sp.dist[u]) continue;
    if (d > far_dist || (d == far_dist && u < far)) {
      far = u;
      far_dist = d;
    }
    for (const auto& nb : g.neighbors(u)) {
      if (!view.has_edge(nb.edge)) continue;
      const double nd = d + g.edges()[nb.edge].length;
      if (nd < sp.dist[nb.node]) {
        sp.dist[nb.node] = nd;
        sp.pred_edge[nb.node] = nb.edge;
        queue.emplace(nd, nb.node);
      }
    }
  }
  return far;
}

std::vector<std::size_t> trace_back(const SkeletonGraph& g, const ShortestPaths& sp,
                                    std::size_t node) {
  std::vector<std::size_t> path{node};
  while (sp.pred_edge[node] != kNoNode) {
    const SkeletonEdge& e = g.edges()[sp.pred_edge[node]];
    node = e.u == node ? e.v : e.u;
    path.push_back(node);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<FarthestResult> farthest_from(const SkeletonView& view,
                                            std::span<const std::size_t> sources) {
  if (sources.empty()) return std::nullopt;
  ShortestPaths sp(view.graph().node_count());
  const std::size_t far = run_dijkstra(view, sources, sp);
  if (far == kNoNode) return std::nullopt;
  return FarthestResult{far, sp.dist[far], trace_back(view.graph(), sp, far)};
}

std::vector<std::size_t> component_far_nodes(const SkeletonView& view) {
  const std::size_t n = view.graph().node_count();
  ShortestPaths sp(n);
  std::vector<std::size_t> seeds;
  for (std::size_t u = 0; u < n; ++u) {
    if (sp.dist[u] != kUnreached || !view.has_node(u)) continue;
    const std::size_t root[] = {u};
    seeds.push_back(run_dijkstra(view, root, sp));
  }
  return seeds;
}

std::optional<FarthestResult> longest_path_estimate(const SkeletonView& view) {
  const std::vector<std::size_t> seeds = component_far_nodes(view);
  return farthest_from(view, seeds);
}

std::vector<CandidatePath> enumerate_paths(const SkeletonGraph& graph, double aspect,
                                           const PathSearchOptions& options) {
  std::vector<CandidatePath> paths;
  if (graph.empty() || options.k == 0) return paths;

  const double max_clearance = graph.max_clearance();
  const double floor = std::ldexp(max_clearance, -options.max_reductions);
  std::vector<char> reported(graph.node_count(), 0);
  double threshold = max_clearance;

  while (paths.size() < options.k) {
    const SkeletonView view = prune_by_clearance(graph, threshold);
    std::vector<std::size_t> sources = component_far_nodes(view);
    const std::size_t seeds = sources.size();
    for (std::size_t u = 0; u < graph.node_count(); ++u) {
      if (reported[u] && view.has_node(u)) sources.push_back(u);
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    PathSearchStep* step = nullptr;
    if (options.trace != nullptr) {
      const auto sweep =
          farthest_from(view, std::span<const std::size_t>(component_far_nodes(view)));
      options.trace->push_back({threshold, sweep ? sweep->distance : 0.0, 0});
      step = &options.trace->back();
    }

    // Keep searching at this threshold while paths are long enough.
    while (seeds > 0 && paths.size() < options.k) {
      const auto found = farthest_from(view, sources);
      if (!found || found->path.size() < 2 || !(found->distance > 0.0) ||
          found->distance < min_path_length(threshold, aspect)) {
        break;
      }
      CandidatePath path;
      path.nodes = found->path;
      path.length = found->distance;
      path.threshold = threshold;
      path.min_clearance = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        for (const auto& nb : graph.neighbors(path.nodes[i])) {
          if (nb.node == path.nodes[i + 1] && view.has_edge(nb.edge)) {
            path.min_clearance = std::min(path.min_clearance, graph.edges()[nb.edge].clearance);
            break;
          }
        }
      }
      for (const std::size_t u : path.nodes) {
        if (!reported[u]) {
          reported[u] = 1;
          sources.insert(std::upper_bound(sources.begin(), sources.end(), u), u);
        }
      }
      paths.push_back(std::move(path));
      if (step != nullptr) ++step->reported;
    }
    if (paths.size() >= options.k) break;

    if (threshold <= 0.0) break;
    threshold /= std::sqrt(2.0);
    if (threshold < floor) break;
  }
  return paths;
}

}  // namespace arclabel
