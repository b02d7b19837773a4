#include "subjectnet/exports.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <set>

#include "json.hpp"
#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
};

std::string opt_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string{};
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string format_real(double value) {
  // to_chars keeps the output locale-independent, unlike printf.
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value,
                                 std::chars_format::fixed, 4);
  return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "category,size,mean_authors,pct_female,n_single,mean_subjects,n_xsubject\n";
  for (const SummaryRow& row : rows) {
    out += std::string(category_token(row.category)) + ',' +
           std::to_string(row.summary.size) + ',' +
           opt_real(row.summary.mean_authors) + ',' +
           opt_real(row.summary.pct_female) + ',' +
           std::to_string(row.summary.single_author_count) + ',' +
           opt_real(row.summary.mean_subjects) + ',' +
           std::to_string(row.summary.xsubject_count) + '\n';
  }
  return out;
}

std::string yearly_csv(const std::vector<Category>& categories,
                       const YearlyDistribution& full,
                       const YearlyDistribution& xsubject,
                       const YearlyDistribution& single) {
  std::string out = "category,year,count,xsubject_count,single_count\n";
  for (Category category : categories) {
    for (int year = kYearMin; year <= kYearMax; ++year) {
      std::size_t slot = static_cast<std::size_t>(year - kYearMin);
      out += std::string(category_token(category)) + ',' + std::to_string(year) + ',' +
             std::to_string(full.counts.at(category)[slot]) + ',' +
             std::to_string(xsubject.counts.at(category)[slot]) + ',' +
             std::to_string(single.counts.at(category)[slot]) + '\n';
    }
  }
  return out;
}

std::string subject_freq_csv(const SubjectFrequencyTable& table,
                             const std::vector<Category>& categories,
                             const SubjectRegistry& registry) {
  std::string out = "rank,code,name";
  for (Category category : categories) {
    out += ',';
    out += category_token(category);
  }
  out += '\n';

  std::map<Category, std::vector<std::pair<int, double>>> rows;
  for (Category category : categories) rows[category] = table.rows(category);

  for (std::size_t r = 0; r < table.ranked_codes.size(); ++r) {
    int code = table.ranked_codes[r];
    out += std::to_string(r + 1) + ',' + std::to_string(code) + ',' +
           csv::quote_field(registry.name_of(code));
    for (Category category : categories) {
      const auto& row = rows[category];
      out += ',';
      if (!row.empty()) out += format_real(row[r].second);
    }
    out += '\n';
  }
  return out;
}

std::string edge_list_csv(const WeightedGraph& graph) {
  std::string out = "subject_i,subject_j,weight\n";
  for (const auto& [edge, weight] : graph.weights) {
    out += std::to_string(edge.first) + ',' + std::to_string(edge.second) + ',' +
           std::to_string(weight) + '\n';
  }
  return out;
}

WeightedGraph parse_edge_list(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || csv::join_row(*header) != "subject_i,subject_j,weight") {
    throw ValidationError("edge list: expected header 'subject_i,subject_j,weight'");
  }
  WeightedGraph graph;
  std::set<int> nodes;
  while (auto row = reader.next()) {
    std::size_t line = reader.line();
    if (row->size() != 3) {
      throw ValidationError("edge list line " + std::to_string(line) +
                            ": expected 3 fields");
    }
    auto a = text::parse_int((*row)[0]);
    auto b = text::parse_int((*row)[1]);
    auto w = text::parse_int((*row)[2]);
    if (!a || !b || !w) {
      throw ValidationError("edge list line " + std::to_string(line) +
                            ": non-integer field");
    }
    if (*a == *b) {
      throw ValidationError("edge list line " + std::to_string(line) + ": self loop");
    }
    if (*w < 1) {
      throw ValidationError("edge list line " + std::to_string(line) +
                            ": weight must be >= 1");
    }
    int lo = static_cast<int>(std::min(*a, *b));
    int hi = static_cast<int>(std::max(*a, *b));
    if (!graph.weights.emplace(std::pair{lo, hi}, static_cast<int>(*w)).second) {
      throw ValidationError("edge list line " + std::to_string(line) +
                            ": duplicate edge");
    }
    nodes.insert(lo);
    nodes.insert(hi);
  }
  graph.nodes.assign(nodes.begin(), nodes.end());
  return graph;
}

std::string graph_json(const WeightedGraph& graph, const SubjectRegistry& registry,
                       std::string_view label) {
  ordered_json doc;
  doc["category"] = label;
  doc["nodes"] = ordered_json::array();
  for (int code : graph.nodes) {
    doc["nodes"].push_back({{"code", code}, {"name", registry.name_of(code)}});
  }
  doc["edges"] = ordered_json::array();
  for (const auto& [edge, weight] : graph.weights) {
    doc["edges"].push_back(
        {{"source", edge.first}, {"target", edge.second}, {"weight", weight}});
  }
  return doc.dump(2) + "\n";
}

std::string dendrogram_json(const MergeSequence& sequence, std::string_view label) {
  ordered_json doc;
  doc["category"] = label;
  doc["threshold"] = sequence.threshold();
  doc["merges"] = ordered_json::array();
  for (const MergeEvent& event : sequence.events) {
    doc["merges"].push_back({{"step", event.step},
                             {"distance", event.distance},
                             {"edge", {event.edge.first, event.edge.second}},
                             {"cluster_a", event.members_a},
                             {"cluster_b", event.members_b}});
  }
  return doc.dump(2) + "\n";
}

std::string color_assignment_json(const ColorAssignment& colors) {
  ordered_json doc;
  doc["multiplier"] = colors.multiplier;
  doc["cut"] = colors.cut;
  doc["color_count"] = colors.color_count;
  doc["colors"] = ordered_json::array();
  for (const auto& [code, color] : colors.color_of) {
    doc["colors"].push_back({{"code", code}, {"color", color}});
  }
  return doc.dump(2) + "\n";
}

ColorAssignment parse_color_assignment(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::exception& err) {
    throw ValidationError(std::string("color assignment: ") + err.what());
  }
  ColorAssignment colors;
  try {
    colors.multiplier = doc.at("multiplier").get<double>();
    colors.cut = doc.at("cut").get<double>();
    colors.color_count = doc.at("color_count").get<int>();
    for (const auto& entry : doc.at("colors")) {
      colors.color_of[entry.at("code").get<int>()] = entry.at("color").get<int>();
    }
  } catch (const ordered_json::exception& err) {
    throw ValidationError(std::string("color assignment: ") + err.what());
  }
  return colors;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out = "category,N,d,l,star_path,motif_gap,pct_female\n";
  for (const MetricsRow& row : rows) {
    out += std::string(category_token(row.category)) + ',' +
           std::to_string(row.metrics.node_count) + ',' +
           std::to_string(row.metrics.diameter) + ',' +
           std::to_string(row.metrics.leaf_count) + ',' +
           format_real(row.metrics.star_path) + ',' +
           format_real(row.metrics.motif_gap) + ',' +
           format_real(row.pct_female) + '\n';
  }
  return out;
}

std::string to_dot(const SpanningTree& tree, const ColorAssignment& colors,
                   const SubjectRegistry& registry, const WeightedGraph& weights,
                   std::string_view graph_name) {
  std::string out = "graph " + std::string(graph_name) + " {\n";
  out += "  node [shape=ellipse, style=filled];\n";
  for (int code : tree.nodes) {
    std::string fill = "#ffffff";
    if (auto it = colors.color_of.find(code); it != colors.color_of.end()) {
      fill = kPalette[static_cast<std::size_t>(it->second) % kPalette.size()];
    }
    out += "  s" + std::to_string(code) + " [label=\"" +
           dot_escape(registry.name_of(code)) + "\", fillcolor=\"" + fill + "\"];\n";
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(tree.edges.size());
  for (const TreeEdge& edge : tree.edges) edges.emplace_back(edge.a, edge.b);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) {
    out += "  s" + std::to_string(a) + " -- s" + std::to_string(b) + " [label=\"" +
           std::to_string(weights.weight(a, b)) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace subjectnet
