#include "subjectnet/pipeline.hpp"

#include <fstream>
#include <set>

#include "subjectnet/corpus_io.hpp"
#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"

namespace subjectnet {

namespace {

std::vector<Category> canonical_selection(const std::vector<Category>& requested) {
  if (requested.empty()) {
    throw ValidationError("no categories selected");
  }
  std::set<Category> wanted(requested.begin(), requested.end());
  std::vector<Category> out;
  for (Category category : kAllCategories) {
    if (wanted.count(category)) out.push_back(category);
  }
  return out;
}

// Writes one output file and records it so a failed run can clean up.
void emit(const std::filesystem::path& path, const std::string& content,
          std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
  written.push_back(path);
}

struct CategoryNetwork {
  WeightedGraph graph;       // full one-mode projection, isolated nodes kept
  WeightedGraph component;   // largest connected component
};

CategoryNetwork build_network(const Corpus& corpus, Category category) {
  CategoryNetwork network;
  CategorySubset subset = select(corpus, category, /*xsubject_only=*/true);
  network.graph = project_one_mode(induce_bipartite(subset));
  network.component = largest_connected_component(network.graph);
  return network;
}

struct CategoryTrees {
  MergeSequence merges;
  SpanningTree tree;
};

CategoryTrees build_trees(const CategoryNetwork& network) {
  if (network.component.nodes.size() < 2) {
    throw ValidationError("co-occurrence component has fewer than 2 subjects");
  }
  CategoryTrees trees;
  trees.merges = single_link_cluster(to_distance_matrix(network.component));
  trees.tree = mst_from_merges(trees.merges);
  return trees;
}

}  // namespace

std::vector<CategoryReport> run(const RunConfig& config) {
  if (config.color_multiplier <= 0.0) {
    throw ValidationError("color threshold multiplier must be positive");
  }
  if (config.top_k < 1 || config.top_k > 29) {
    throw ValidationError("top_k must be in 1..29");
  }
  std::vector<Category> categories = canonical_selection(config.categories);

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + config.out_dir.string() +
                  ": " + ec.message());
  }

  std::vector<std::filesystem::path> written;
  try {
    const SubjectRegistry& registry = SubjectRegistry::standard();
    Corpus corpus{registry, {}};
    if (config.lexicon) {
      GenderLexicon lexicon = GenderLexicon::from_file(*config.lexicon);
      IngestResult ingested = ingest_raw_file(config.input, lexicon, registry);
      corpus = std::move(ingested.corpus);
      emit(config.out_dir / "corpus.csv", serialize_corpus(corpus), written);
      std::string rejects = "id,line,reason\n";
      for (const RejectedRecord& reject : ingested.rejects) {
        rejects += csv::join_row({reject.id, std::to_string(reject.line), reject.reason});
        rejects += '\n';
      }
      emit(config.out_dir / "rejects.csv", rejects, written);
    } else {
      corpus = load_corpus(config.input, registry);
    }

    if (config.emit_stats) {
      std::vector<SummaryRow> summary_rows;
      for (Category category : categories) {
        summary_rows.push_back(
            {category, summarize(select(corpus, category, config.xsubject_only),
                                 config.subject_mean)});
      }
      emit(config.out_dir / "summary.csv", summary_csv(summary_rows), written);
      emit(config.out_dir / "yearly.csv",
           yearly_csv(categories, yearly_counts(corpus, false, false),
                      yearly_counts(corpus, true, false),
                      yearly_counts(corpus, false, true)),
           written);
      emit(config.out_dir / "subject_freq.csv",
           subject_freq_csv(subject_frequencies(corpus, config.top_k), categories,
                            corpus.registry),
           written);
    }

    std::vector<CategoryReport> reports;
    if (!config.emit_network && !config.emit_trees) {
      for (Category category : categories) {
        CategoryReport report;
        report.category = category;
        report.summary = summarize(select(corpus, category, config.xsubject_only),
                                   config.subject_mean);
        reports.push_back(std::move(report));
      }
      return reports;
    }

    // Cluster colors come from the All-category dendrogram so the same
    // subject keeps the same color across every tree; a saved assignment
    // can replace it.
    CategoryNetwork all_network;
    bool have_all_network = false;
    ColorAssignment colors;
    if (config.emit_trees) {
      if (config.colors_from) {
        std::ifstream in(*config.colors_from);
        if (!in) throw IoError("cannot open color assignment: " +
                               config.colors_from->string());
        colors = parse_color_assignment(in);
      } else {
        try {
          all_network = build_network(corpus, Category::All);
          have_all_network = true;
          colors = assign_colors(build_trees(all_network).merges,
                                 config.color_multiplier);
        } catch (const ValidationError& err) {
          throw ValidationError(std::string("category 'all': ") + err.what());
        }
      }
      emit(config.out_dir / "colors.json", color_assignment_json(colors), written);
    }

    std::vector<MetricsRow> metrics_rows;
    for (Category category : categories) {
      std::string token{category_token(category)};
      try {
        CategoryNetwork network = have_all_network && category == Category::All
                                      ? all_network
                                      : build_network(corpus, category);
        CategoryReport report;
        report.category = category;
        report.summary = summarize(select(corpus, category, config.xsubject_only),
                                   config.subject_mean);
        if (config.emit_trees) report.colors = colors;
        report.raw_node_count = network.graph.nodes.size();

        auto file = [&](const std::string& name, const std::string& content) {
          std::filesystem::path path = config.out_dir / name;
          emit(path, content, written);
          report.files.push_back(path);
        };
        if (config.emit_network) {
          file("edges_" + token + ".csv", edge_list_csv(network.graph));
          file("graph_" + token + ".json",
               graph_json(network.graph, corpus.registry, token));
        }
        if (config.emit_trees) {
          CategoryTrees trees = build_trees(network);
          report.tree = tree_metrics(trees.tree);
          file("dendrogram_" + token + ".json", dendrogram_json(trees.merges, token));
          file("mst_" + token + ".dot",
               to_dot(trees.tree, colors, corpus.registry, network.component,
                      "mst_" + token));
          CategorySummary network_summary =
              summarize(select(corpus, category, /*xsubject_only=*/true));
          metrics_rows.push_back(
              {category, *report.tree, network_summary.pct_female.value_or(0.0)});
        }
        reports.push_back(std::move(report));
      } catch (const ValidationError& err) {
        throw ValidationError("category '" + token + "': " + err.what());
      }
    }
    if (config.emit_trees) {
      emit(config.out_dir / "metrics.csv", metrics_csv(metrics_rows), written);
    }
    return reports;
  } catch (...) {
    for (const std::filesystem::path& path : written) {
      std::error_code ignore;
      std::filesystem::remove(path, ignore);
    }
    throw;
  }
}

}  // namespace subjectnet
