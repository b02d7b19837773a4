#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subjectnet/categories.hpp"

namespace subjectnet {

// Subject-paper incidence structure. Edges only cross the two partitions.
struct BipartiteGraph {
  std::vector<int> subjects;                        // sorted, distinct
  std::vector<std::string> papers;                  // record ids, subset order
  std::vector<std::pair<int, std::size_t>> edges;   // (subject code, paper index)
};

// One subject node per distinct extra subject, one paper node per record,
// one edge per (paper, extra subject) incidence. Papers without extras
// contribute nothing.
BipartiteGraph induce_bipartite(const CategorySubset& subset);

// Symmetric integer-weighted co-occurrence graph. Keys are (i, j) with
// i < j; stored weights are >= 1. Isolated nodes (subjects that occur but
// never co-occur) stay in `nodes`.
struct WeightedGraph {
  std::vector<int> nodes;                      // sorted
  std::map<std::pair<int, int>, int> weights;

  int weight(int a, int b) const;              // 0 when the edge is absent
  bool has_node(int code) const;
  std::size_t edge_count() const { return weights.size(); }
  long long total_weight() const;
};

// Weight of (i, j) = number of papers adjacent to both subjects.
WeightedGraph project_one_mode(const BipartiteGraph& bipartite);

// Induced subgraph on the largest connected component; ties between
// equal-size components go to the one containing the smallest node code.
WeightedGraph largest_connected_component(const WeightedGraph& graph);

inline constexpr double kNoDistance = std::numeric_limits<double>::infinity();

// Reciprocal-weight distances over one connected component: d = 1/weight for
// edges, infinity for non-edges, 0 on the diagonal.
struct DistanceMatrix {
  std::vector<int> nodes;       // sorted
  std::vector<double> cells;    // n*n row-major

  std::size_t size() const { return nodes.size(); }
  double at(std::size_t a, std::size_t b) const { return cells[a * nodes.size() + b]; }
  double& at(std::size_t a, std::size_t b) { return cells[a * nodes.size() + b]; }
};

// Throws ValidationError when the graph is not connected; extract the
// component first.
DistanceMatrix to_distance_matrix(const WeightedGraph& graph);

}  // namespace subjectnet
