#include "subjectnet/graph.hpp"

#include <algorithm>
#include <set>

#include "subjectnet/errors.hpp"

namespace subjectnet {

BipartiteGraph induce_bipartite(const CategorySubset& subset) {
  BipartiteGraph bg;
  std::set<int> subjects;
  for (const PaperRecord& record : subset.records) {
    if (!record.has_extra_subject()) continue;
    std::size_t paper = bg.papers.size();
    bg.papers.push_back(record.id);
    for (int code : record.extra_subjects()) {
      subjects.insert(code);
      bg.edges.emplace_back(code, paper);
    }
  }
  bg.subjects.assign(subjects.begin(), subjects.end());
  return bg;
}

int WeightedGraph::weight(int a, int b) const {
  if (a == b) return 0;
  auto it = weights.find({std::min(a, b), std::max(a, b)});
  return it == weights.end() ? 0 : it->second;
}

bool WeightedGraph::has_node(int code) const {
  return std::binary_search(nodes.begin(), nodes.end(), code);
}

long long WeightedGraph::total_weight() const {
  long long sum = 0;
  for (const auto& [edge, w] : weights) sum += w;
  return sum;
}

WeightedGraph project_one_mode(const BipartiteGraph& bipartite) {
  // Common-neighbor counting over per-subject paper sets. The test suite
  // checks this against a direct per-paper pair tally.
  std::map<int, std::vector<std::size_t>> papers_of;
  for (const auto& [subject, paper] : bipartite.edges) {
    papers_of[subject].push_back(paper);
  }
  for (auto& [subject, papers] : papers_of) {
    std::sort(papers.begin(), papers.end());
    papers.erase(std::unique(papers.begin(), papers.end()), papers.end());
  }

  WeightedGraph graph;
  graph.nodes = bipartite.subjects;
  for (auto i = papers_of.begin(); i != papers_of.end(); ++i) {
    for (auto j = std::next(i); j != papers_of.end(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(i->second.begin(), i->second.end(),
                            j->second.begin(), j->second.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        graph.weights[{i->first, j->first}] = static_cast<int>(shared.size());
      }
    }
  }
  return graph;
}

namespace {

// Component containing `start`, as sorted codes.
std::vector<int> component_of(const std::map<int, std::vector<int>>& adjacency,
                              int start) {
  std::set<int> seen{start};
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    int node = frontier.back();
    frontier.pop_back();
    auto it = adjacency.find(node);
    if (it == adjacency.end()) continue;
    for (int next : it->second) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<int, std::vector<int>> adjacency_of(const WeightedGraph& graph) {
  std::map<int, std::vector<int>> adjacency;
  for (const auto& [edge, w] : graph.weights) {
    adjacency[edge.first].push_back(edge.second);
    adjacency[edge.second].push_back(edge.first);
  }
  return adjacency;
}

}  // namespace

WeightedGraph largest_connected_component(const WeightedGraph& graph) {
  if (graph.nodes.empty()) return {};

  auto adjacency = adjacency_of(graph);
  std::vector<int> best;
  std::set<int> assigned;
  for (int node : graph.nodes) {  // ascending, so ties keep the earliest
    if (assigned.count(node)) continue;
    std::vector<int> component = component_of(adjacency, node);
    assigned.insert(component.begin(), component.end());
    if (component.size() > best.size()) best = std::move(component);
  }

  WeightedGraph out;
  out.nodes = std::move(best);
  for (const auto& [edge, w] : graph.weights) {
    if (std::binary_search(out.nodes.begin(), out.nodes.end(), edge.first)) {
      out.weights[edge] = w;
    }
  }
  return out;
}

DistanceMatrix to_distance_matrix(const WeightedGraph& graph) {
  if (!graph.nodes.empty()) {
    auto adjacency = adjacency_of(graph);
    std::vector<int> reachable = component_of(adjacency, graph.nodes.front());
    if (reachable.size() != graph.nodes.size()) {
      throw ValidationError(
          "graph is not connected (" + std::to_string(reachable.size()) + " of " +
          std::to_string(graph.nodes.size()) +
          " nodes reachable); extract the largest component first");
    }
  }

  DistanceMatrix d;
  d.nodes = graph.nodes;
  std::size_t n = d.nodes.size();
  d.cells.assign(n * n, kNoDistance);
  for (std::size_t a = 0; a < n; ++a) d.at(a, a) = 0.0;
  std::map<int, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a) index[d.nodes[a]] = a;
  for (const auto& [edge, w] : graph.weights) {
    std::size_t a = index[edge.first];
    std::size_t b = index[edge.second];
    d.at(a, b) = d.at(b, a) = 1.0 / w;
  }
  return d;
}

}  // namespace subjectnet
