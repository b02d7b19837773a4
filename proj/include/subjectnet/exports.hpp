#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subjectnet/cluster.hpp"
#include "subjectnet/motifs.hpp"
#include "subjectnet/stats.hpp"

namespace subjectnet {

// Text emitters for every file the pipeline writes. All output is
// deterministic: rows follow canonical category order, nodes and edges are
// sorted by code, and real numbers are printed with 4 fixed decimals.

std::string format_real(double value);  // "%.4f"

struct SummaryRow {
  Category category = Category::All;
  CategorySummary summary;
};

// header: category,size,mean_authors,pct_female,n_single,mean_subjects,n_xsubject
std::string summary_csv(const std::vector<SummaryRow>& rows);

// header: category,year,count,xsubject_count,single_count
std::string yearly_csv(const std::vector<Category>& categories,
                       const YearlyDistribution& full,
                       const YearlyDistribution& xsubject,
                       const YearlyDistribution& single);

// header: rank,code,name,<category tokens...>; empty cell when a category
// has no subject occurrences at all.
std::string subject_freq_csv(const SubjectFrequencyTable& table,
                             const std::vector<Category>& categories,
                             const SubjectRegistry& registry);

// header: subject_i,subject_j,weight; sorted by (i, j).
std::string edge_list_csv(const WeightedGraph& graph);

// Parses the edge_list_csv format back into a graph (oracle-check input).
WeightedGraph parse_edge_list(std::istream& in);

// Nodes with registry names plus weighted edges.
std::string graph_json(const WeightedGraph& graph, const SubjectRegistry& registry,
                       std::string_view label);

// Ordered merge events: step, the two clusters' members, the realized edge,
// and the merge distance; threshold alongside.
std::string dendrogram_json(const MergeSequence& sequence, std::string_view label);

// Color assignment save / load, so one network's clusters can color another
// network's tree.
std::string color_assignment_json(const ColorAssignment& colors);
ColorAssignment parse_color_assignment(std::istream& in);

struct MetricsRow {
  Category category = Category::All;
  TreeMetrics metrics;
  double pct_female = 0.0;
};

// header: category,N,d,l,star_path,motif_gap,pct_female
std::string metrics_csv(const std::vector<MetricsRow>& rows);

// Undirected DOT graph: node labels from the registry, edge labels the
// co-occurrence weights, fill colors from the assignment (white when a node
// has no color). Node statements ordered by code, edges by (i, j).
std::string to_dot(const SpanningTree& tree, const ColorAssignment& colors,
                   const SubjectRegistry& registry, const WeightedGraph& weights,
                   std::string_view graph_name);

}  // namespace subjectnet
