#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "subjectnet/graph.hpp"

namespace subjectnet {

struct MergeEvent {
  std::size_t step = 0;            // 1-based
  int cluster_a = 0;               // cluster ids = smallest member code
  int cluster_b = 0;
  std::vector<int> members_a;      // sorted member codes at merge time
  std::vector<int> members_b;
  double distance = 0.0;
  std::pair<int, int> edge{0, 0};  // node pair realizing the minimum, first < second
};

// The dendrogram: N-1 ordered merges for an N-node connected input. Merge
// distances are non-decreasing and the realized edges form the MST.
struct MergeSequence {
  std::vector<int> nodes;          // sorted
  std::vector<MergeEvent> events;

  // Maximum (= final) merge distance.
  double threshold() const;
};

// Nearest-neighbor agglomeration over the distance matrix. At every step the
// globally minimum inter-cluster single-link distance is merged; ties are
// broken by the lexicographically smallest realizing (min code, max code)
// pair. Throws ValidationError for fewer than 2 nodes or a disconnected
// matrix (the message names two unreachable clusters).
MergeSequence single_link_cluster(const DistanceMatrix& d);

struct TreeEdge {
  int a = 0;  // a < b
  int b = 0;
  double distance = 0.0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct SpanningTree {
  std::vector<int> nodes;        // sorted
  std::vector<TreeEdge> edges;   // N-1 for an N-node tree

  double total_distance() const;
};

// Tree edges = the realized edges of the merge events.
SpanningTree mst_from_merges(const MergeSequence& sequence);

// Independent greedy MST with the same (distance, min code, max code) edge
// order; verification oracle for the clustering route.
SpanningTree kruskal_mst(const DistanceMatrix& d);

struct ColorAssignment {
  double multiplier = 1.2;       // T
  double cut = 0.0;              // T * threshold
  std::map<int, int> color_of;   // node -> color index
  int color_count = 0;
};

// Cuts the dendrogram at T * threshold: nodes share a color iff they were
// joined strictly below the cut. Color indices follow the order of each
// cluster's smallest member code. T must be > 0.
ColorAssignment assign_colors(const MergeSequence& sequence, double multiplier);

}  // namespace subjectnet
