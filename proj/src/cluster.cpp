#include "subjectnet/cluster.hpp"

#include <algorithm>
#include <numeric>

#include "subjectnet/errors.hpp"

namespace subjectnet {

namespace {

struct Candidate {
  double distance = kNoDistance;
  std::pair<int, int> edge{0, 0};

  bool operator<(const Candidate& other) const {
    if (distance != other.distance) return distance < other.distance;
    return edge < other.edge;
  }
};

std::string join_codes(const std::vector<int>& codes) {
  std::string out = "{";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(codes[i]);
  }
  return out + "}";
}

// Union-find over node indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

double MergeSequence::threshold() const {
  return events.empty() ? 0.0 : events.back().distance;
}

MergeSequence single_link_cluster(const DistanceMatrix& d) {
  std::size_t n = d.size();
  if (n < 2) {
    throw ValidationError("clustering needs at least 2 nodes, got " +
                          std::to_string(n));
  }

  // Active clusters hold sorted member codes; dist/edge keep, per cluster
  // pair, the single-link minimum and the lexicographically smallest node
  // pair realizing it.
  std::vector<std::vector<int>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {d.nodes[i]};
  std::vector<std::vector<Candidate>> link(n, std::vector<Candidate>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      link[i][j] = {d.at(i, j),
                    {std::min(d.nodes[i], d.nodes[j]), std::max(d.nodes[i], d.nodes[j])}};
    }
  }
  std::vector<bool> active(n, true);

  MergeSequence sequence;
  sequence.nodes = d.nodes;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t best_i = n, best_j = n;
    Candidate best;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (best_i == n || link[i][j] < best) {
          best = link[i][j];
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best.distance == kNoDistance) {
      std::size_t first = best_i, second = best_j;
      throw ValidationError("disconnected distance matrix: no finite distance between clusters " +
                            join_codes(members[first]) + " and " + join_codes(members[second]));
    }

    MergeEvent event;
    event.step = step;
    event.cluster_a = members[best_i].front();
    event.cluster_b = members[best_j].front();
    event.members_a = members[best_i];
    event.members_b = members[best_j];
    event.distance = best.distance;
    event.edge = best.edge;
    sequence.events.push_back(std::move(event));

    // Merge best_j into best_i; single-link update keeps the smaller of the
    // two candidates toward every other cluster.
    std::vector<int> merged;
    std::merge(members[best_i].begin(), members[best_i].end(),
               members[best_j].begin(), members[best_j].end(),
               std::back_inserter(merged));
    members[best_i] = std::move(merged);
    active[best_j] = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == best_i) continue;
      Candidate& to_i = link[std::min(best_i, k)][std::max(best_i, k)];
      const Candidate& to_j = link[std::min(best_j, k)][std::max(best_j, k)];
      to_i = std::min(to_i, to_j);
    }
  }
  return sequence;
}

double SpanningTree::total_distance() const {
  double sum = 0.0;
  for (const TreeEdge& edge : edges) sum += edge.distance;
  return sum;
}

SpanningTree mst_from_merges(const MergeSequence& sequence) {
  SpanningTree tree;
  tree.nodes = sequence.nodes;
  tree.edges.reserve(sequence.events.size());
  for (const MergeEvent& event : sequence.events) {
    tree.edges.push_back({event.edge.first, event.edge.second, event.distance});
  }
  return tree;
}

SpanningTree kruskal_mst(const DistanceMatrix& d) {
  std::size_t n = d.size();
  if (n < 2) {
    throw ValidationError("MST needs at least 2 nodes, got " + std::to_string(n));
  }

  struct IndexedEdge {
    double distance;
    int a, b;              // codes, a < b
    std::size_t ia, ib;    // matrix indices
  };
  std::vector<IndexedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.at(i, j) != kNoDistance) {
        edges.push_back({d.at(i, j), std::min(d.nodes[i], d.nodes[j]),
                         std::max(d.nodes[i], d.nodes[j]), i, j});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const IndexedEdge& x, const IndexedEdge& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  SpanningTree tree;
  tree.nodes = d.nodes;
  DisjointSets sets(n);
  for (const IndexedEdge& edge : edges) {
    if (sets.join(edge.ia, edge.ib)) {
      tree.edges.push_back({edge.a, edge.b, edge.distance});
      if (tree.edges.size() == n - 1) break;
    }
  }
  if (tree.edges.size() != n - 1) {
    throw ValidationError("disconnected graph: spanning tree has " +
                          std::to_string(tree.edges.size()) + " edges for " +
                          std::to_string(n) + " nodes");
  }
  return tree;
}

ColorAssignment assign_colors(const MergeSequence& sequence, double multiplier) {
  if (multiplier <= 0.0) {
    throw ValidationError("color threshold multiplier must be positive");
  }

  ColorAssignment assignment;
  assignment.multiplier = multiplier;
  assignment.cut = multiplier * sequence.threshold();

  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < sequence.nodes.size(); ++i) index[sequence.nodes[i]] = i;
  DisjointSets sets(sequence.nodes.size());
  for (const MergeEvent& event : sequence.events) {
    if (event.distance < assignment.cut) {
      sets.join(index[event.edge.first], index[event.edge.second]);
    }
  }

  // Color indices in order of each cluster's smallest member; nodes are
  // sorted, so the first visit of a root fixes its color.
  std::map<std::size_t, int> color_of_root;
  for (int code : sequence.nodes) {
    std::size_t root = sets.find(index[code]);
    auto [it, inserted] = color_of_root.emplace(root, assignment.color_count);
    if (inserted) ++assignment.color_count;
    assignment.color_of[code] = it->second;
  }
  return assignment;
}

}  // namespace subjectnet
