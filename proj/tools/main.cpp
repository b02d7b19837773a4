// Command-line front end: ingestion, statistics tables, co-occurrence
// networks, spanning trees and the full report pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subjectnet/corpus_io.hpp"
#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"
#include "subjectnet/pipeline.hpp"

namespace fs = std::filesystem;
using namespace subjectnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

std::vector<Category> parse_categories(const std::vector<std::string>& tokens) {
  if (tokens.empty()) {
    return {kAllCategories.begin(), kAllCategories.end()};
  }
  std::vector<Category> out;
  for (const std::string& token : tokens) {
    auto category = category_from_token(token);
    if (!category) {
      throw ValidationError("unknown category '" + token +
                            "' (expected all, wexc, winc, wm, minc, mexc)");
    }
    out.push_back(*category);
  }
  return out;
}

void print_reports(const std::vector<CategoryReport>& reports) {
  for (const CategoryReport& report : reports) {
    std::cout << category_token(report.category) << ": papers=" << report.summary.size
              << " xsubject=" << report.summary.xsubject_count
              << " subjects=" << report.raw_node_count;
    if (report.tree) {
      std::cout << " tree_n=" << report.tree->node_count << " d=" << report.tree->diameter
                << " l=" << report.tree->leaf_count
                << " star_path=" << format_real(report.tree->star_path);
    }
    std::cout << "\n";
  }
}

int run_oracle_check(const fs::path& input) {
  std::ifstream in(input);
  if (!in) throw IoError("cannot open edge list: " + input.string());
  WeightedGraph graph = parse_edge_list(in);
  WeightedGraph component = largest_connected_component(graph);
  if (component.nodes.size() < 2) {
    throw ValidationError("largest component has fewer than 2 nodes");
  }
  DistanceMatrix distances = to_distance_matrix(component);
  SpanningTree from_clustering = mst_from_merges(single_link_cluster(distances));
  SpanningTree from_kruskal = kruskal_mst(distances);

  std::cout << "nodes=" << graph.nodes.size() << " edges=" << graph.edge_count()
            << " component=" << component.nodes.size() << "\n";
  std::cout << "single-link total: " << format_real(from_clustering.total_distance())
            << "\n";
  std::cout << "kruskal total:     " << format_real(from_kruskal.total_distance())
            << "\n";

  bool totals_equal =
      from_clustering.total_distance() == from_kruskal.total_distance();
  bool edges_equal = from_clustering.edges == from_kruskal.edges;
  std::cout << "edge sets: " << (edges_equal ? "identical" : "differ") << "\n";
  if (totals_equal && edges_equal) {
    std::cout << "oracle-check: PASS\n";
    return kExitOk;
  }
  std::cout << "oracle-check: FAIL\n";
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gender-disaggregated subject co-occurrence networks, "
               "spanning trees and tree-shape metrics from bibliographic records"};
  app.require_subcommand(1);

  std::string input;
  std::string lexicon;
  std::string out_dir;
  std::vector<std::string> category_tokens;
  double color_multiplier = 1.2;
  std::size_t top_k = 6;
  bool xsubject_only = false;
  bool extras_only = false;

  auto add_common = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("--input", input, "Input file")->required();
    if (needs_out) cmd->add_option("--out", out_dir, "Output directory")->required();
    return cmd;
  };

  CLI::App* ingest = add_common(
      app.add_subcommand("ingest", "Convert raw records to the corpus encoding"), true);
  ingest->add_option("--lexicon", lexicon, "Given-name gender lexicon CSV");

  CLI::App* stats = add_common(
      app.add_subcommand("stats", "Per-category summary, yearly and frequency tables"),
      true);
  stats->add_option("--top-k", top_k, "Subjects in the frequency table");
  stats->add_flag("--xsubject-only", xsubject_only,
                  "Restrict summary rows to papers with extra subjects");
  stats->add_flag("--extras-only", extras_only,
                  "Count extra subjects only in the subject mean");
  stats->add_option("--categories", category_tokens, "Category selection")
      ->delimiter(',');

  CLI::App* network = add_common(
      app.add_subcommand("network", "Weighted subject co-occurrence graphs"), true);
  network->add_option("--categories", category_tokens, "Category selection")
      ->delimiter(',');

  std::string colors_from;
  CLI::App* mst = add_common(
      app.add_subcommand("mst", "Dendrograms, spanning trees and tree metrics"), true);
  mst->add_option("--categories", category_tokens, "Category selection")->delimiter(',');
  mst->add_option("--color-T", color_multiplier, "Cluster color cut multiplier");
  mst->add_option("--colors-from", colors_from,
                  "Apply a saved colors.json instead of recomputing");

  CLI::App* report =
      add_common(app.add_subcommand("report", "Full pipeline run"), true);
  report->add_option("--lexicon", lexicon, "Ingest raw records through this lexicon");
  report->add_option("--categories", category_tokens, "Category selection")
      ->delimiter(',');
  report->add_option("--color-T", color_multiplier, "Cluster color cut multiplier");
  report->add_option("--colors-from", colors_from,
                     "Apply a saved colors.json instead of recomputing");
  report->add_option("--top-k", top_k, "Subjects in the frequency table");
  report->add_flag("--xsubject-only", xsubject_only,
                   "Restrict summary rows to papers with extra subjects");
  report->add_flag("--extras-only", extras_only,
                   "Count extra subjects only in the subject mean");

  CLI::App* oracle = add_common(
      app.add_subcommand("oracle-check",
                         "Verify single-link MST against the greedy oracle"),
      false);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config;
    config.input = input;
    if (!lexicon.empty()) config.lexicon = lexicon;
    if (!colors_from.empty()) config.colors_from = colors_from;
    config.out_dir = out_dir;
    config.categories = parse_categories(category_tokens);
    config.color_multiplier = color_multiplier;
    config.top_k = top_k;
    config.xsubject_only = xsubject_only;
    config.subject_mean =
        extras_only ? SubjectMean::ExtrasOnly : SubjectMean::IncludeMain;

    if (oracle->parsed()) {
      return run_oracle_check(config.input);
    }
    if (ingest->parsed()) {
      GenderLexicon lex = lexicon.empty() ? GenderLexicon{}
                                          : GenderLexicon::from_file(lexicon);
      IngestResult result =
          ingest_raw_file(config.input, lex, SubjectRegistry::standard());
      fs::create_directories(config.out_dir);
      save_corpus(result.corpus, config.out_dir / "corpus.csv");
      std::ofstream rejects(config.out_dir / "rejects.csv", std::ios::binary);
      if (!rejects) throw IoError("cannot write rejects.csv");
      rejects << "id,line,reason\n";
      for (const RejectedRecord& r : result.rejects) {
        rejects << csv::join_row({r.id, std::to_string(r.line), r.reason}) << "\n";
      }
      std::cout << "accepted=" << result.corpus.records.size()
                << " rejected=" << result.rejects.size() << "\n";
      return kExitOk;
    }

    // stats / network / mst are restrictions of the full report run.
    if (stats->parsed()) {
      config.emit_network = config.emit_trees = false;
    } else if (network->parsed()) {
      config.emit_stats = config.emit_trees = false;
    } else if (mst->parsed()) {
      config.emit_stats = config.emit_network = false;
    }
    std::vector<CategoryReport> reports = run(config);
    if (report->parsed() || mst->parsed()) print_reports(reports);
    return kExitOk;
  } catch (const ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitIo;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInternal;
  }
}
