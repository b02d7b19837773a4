#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "subjectnet/exports.hpp"
#include "subjectnet/ingest.hpp"

namespace subjectnet {

struct RunConfig {
  std::filesystem::path input;                       // corpus CSV, or raw CSV when lexicon set
  std::optional<std::filesystem::path> lexicon;      // presence switches input to raw ingestion
  std::filesystem::path out_dir;
  std::vector<Category> categories{kAllCategories.begin(), kAllCategories.end()};
  double color_multiplier = 1.2;                     // T, must be > 0
  std::size_t top_k = 6;                             // 1..29
  bool xsubject_only = false;                        // restrict summary rows
  SubjectMean subject_mean = SubjectMean::IncludeMain;

  // Tree coloring normally comes from the All-category dendrogram of this
  // run; a saved assignment (colors.json of an earlier run) overrides it.
  std::optional<std::filesystem::path> colors_from;

  // Artifact groups; the stats / network / mst subcommands switch these off
  // selectively, a report run keeps all three.
  bool emit_stats = true;     // summary.csv, yearly.csv, subject_freq.csv
  bool emit_network = true;   // edges_<cat>.csv, graph_<cat>.json
  bool emit_trees = true;     // colors.json, dendrogram_<cat>.json, mst_<cat>.dot,
                              // metrics.csv
};

struct CategoryReport {
  Category category = Category::All;
  CategorySummary summary;
  std::optional<TreeMetrics> tree;  // absent when trees were not requested
  ColorAssignment colors;           // the assignment the tree was rendered with
  std::size_t raw_node_count = 0;   // occurring subjects before component extraction
  std::vector<std::filesystem::path> files;
};

// End-to-end run: (optional ingestion ->) stats tables -> per-category
// co-occurrence network, dendrogram, MST and metrics, all written under
// out_dir. Trees are colored with the assignment cut from the All-category
// dendrogram. Reports come back in canonical category order. On failure every
// file written by this run is removed before the error propagates.
std::vector<CategoryReport> run(const RunConfig& config);

}  // namespace subjectnet
