#include "subjectnet/motifs.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

#include "subjectnet/errors.hpp"

namespace subjectnet {

namespace {

std::vector<std::vector<std::size_t>> tree_adjacency(const SpanningTree& tree) {
  std::size_t n = tree.nodes.size();
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[tree.nodes[i]] = i;
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const TreeEdge& edge : tree.edges) {
    auto a = index.find(edge.a);
    auto b = index.find(edge.b);
    if (a == index.end() || b == index.end()) {
      throw ValidationError("tree edge references unknown node");
    }
    adjacency[a->second].push_back(b->second);
    adjacency[b->second].push_back(a->second);
  }
  return adjacency;
}

// Hop distances from `start`; unreachable nodes keep SIZE_MAX.
std::vector<std::size_t> hop_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::size_t start) {
  std::vector<std::size_t> dist(adjacency.size(), SIZE_MAX);
  dist[start] = 0;
  std::queue<std::size_t> queue;
  queue.push(start);
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop();
    for (std::size_t next : adjacency[node]) {
      if (dist[next] == SIZE_MAX) {
        dist[next] = dist[node] + 1;
        queue.push(next);
      }
    }
  }
  return dist;
}

void require_tree(const SpanningTree& tree,
                  const std::vector<std::vector<std::size_t>>& adjacency) {
  std::size_t n = tree.nodes.size();
  if (tree.edges.size() != n - 1) {
    throw ValidationError("not a tree: " + std::to_string(tree.edges.size()) +
                          " edges for " + std::to_string(n) + " nodes");
  }
  auto dist = hop_distances(adjacency, 0);
  if (std::count(dist.begin(), dist.end(), SIZE_MAX) != 0) {
    throw ValidationError("not a tree: disconnected");
  }
}

// Farthest node from `start`, smallest index on ties.
std::pair<std::size_t, std::size_t> farthest(
    const std::vector<std::vector<std::size_t>>& adjacency, std::size_t start) {
  auto dist = hop_distances(adjacency, start);
  std::size_t best = start, best_dist = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] != SIZE_MAX && dist[i] > best_dist) {
      best = i;
      best_dist = dist[i];
    }
  }
  return {best, best_dist};
}

}  // namespace

TreeMetrics tree_metrics(const SpanningTree& tree) {
  std::size_t n = tree.nodes.size();
  if (n < 2) {
    throw ValidationError("tree metrics need at least 2 nodes, got " + std::to_string(n));
  }
  auto adjacency = tree_adjacency(tree);
  require_tree(tree, adjacency);

  TreeMetrics metrics;
  metrics.node_count = n;

  // Double sweep: farthest node from an arbitrary start is one endpoint of a
  // longest path; the sweep from it yields the diameter. Exact on trees.
  std::size_t endpoint = farthest(adjacency, 0).first;
  metrics.diameter = farthest(adjacency, endpoint).second;

  for (const auto& neighbors : adjacency) {
    if (neighbors.size() == 1) ++metrics.leaf_count;
  }

  metrics.star_path = static_cast<double>(metrics.diameter) / static_cast<double>(n - 1);
  double gap = static_cast<double>(metrics.diameter) - static_cast<double>(metrics.leaf_count);
  metrics.motif_gap = std::abs(gap) / static_cast<double>(n);
  return metrics;
}

std::vector<NodeInfo> node_report(const SpanningTree& tree) {
  auto adjacency = tree_adjacency(tree);
  std::size_t n = tree.nodes.size();
  if (n == 0) return {};
  require_tree(tree, adjacency);

  std::vector<NodeInfo> report(n);
  std::size_t min_ecc = SIZE_MAX;
  for (std::size_t i = 0; i < n; ++i) {
    auto dist = hop_distances(adjacency, i);
    NodeInfo& info = report[i];
    info.code = tree.nodes[i];
    info.degree = adjacency[i].size();
    info.eccentricity = *std::max_element(dist.begin(), dist.end());
    info.is_leaf = info.degree == 1;
    min_ecc = std::min(min_ecc, info.eccentricity);
  }
  for (NodeInfo& info : report) info.is_center = info.eccentricity == min_ecc;
  return report;
}

}  // namespace subjectnet
