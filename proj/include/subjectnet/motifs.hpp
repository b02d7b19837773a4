#pragma once

#include <cstddef>
#include <vector>

#include "subjectnet/cluster.hpp"

namespace subjectnet {

// Shape coefficients locating a tree on the star-to-path spectrum. A pure
// star has diameter 2 and n-1 leaves; a pure path has diameter n-1 and 2
// leaves. Diameter counts hops, not edge distances.
struct TreeMetrics {
  std::size_t node_count = 0;
  std::size_t diameter = 0;
  std::size_t leaf_count = 0;
  double star_path = 0.0;   // diameter / (n - 1)
  double motif_gap = 0.0;   // |diameter - leaves| / n
};

// Throws ValidationError for n < 2 or a structure that is not a tree.
TreeMetrics tree_metrics(const SpanningTree& tree);

struct NodeInfo {
  int code = 0;
  std::size_t degree = 0;
  std::size_t eccentricity = 0;  // max hop distance to any node
  bool is_leaf = false;
  bool is_center = false;        // minimum eccentricity (1 or 2 nodes in a tree)
};

// Per-node connectivity report, sorted by code.
std::vector<NodeInfo> node_report(const SpanningTree& tree);

}  // namespace subjectnet
