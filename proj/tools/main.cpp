#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nectar/cover_io.hpp"
#include "nectar/engine.hpp"
#include "nectar/errors.hpp"
#include "nectar/metrics.hpp"
#include "nectar/objectives.hpp"
#include "nectar/planted.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;     // unreadable or unparseable input
constexpr int kExitUsage = 64; // invalid flags or flag combination

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct DetectOptions {
  std::string input;
  std::string output;
  std::optional<double> beta;
  bool beta_sweep = false;
  double alpha = 0.8;
  int max_iter = 20;
  double tr_rate = 5.0;
  std::string objective = "auto";
  std::string mode = "node";
  std::uint64_t seed = 0;
};

int run_detect(const DetectOptions& opts) {
  if (opts.beta && opts.beta_sweep) {
    std::cerr << "detect: --beta and --beta-sweep are mutually exclusive\n";
    return kExitUsage;
  }

  std::ifstream in(opts.input);
  if (!in) {
    std::cerr << "detect: cannot read " << opts.input << "\n";
    return kExitIo;
  }

  nectar::AlgorithmConfig config;
  config.alpha = opts.alpha;
  config.max_iter = opts.max_iter;
  config.tr_rate = opts.tr_rate;
  config.rng_seed = opts.seed;
  if (opts.objective == "qext") {
    config.objective = nectar::ObjectiveChoice::QExt;
  } else if (opts.objective == "wocc") {
    config.objective = nectar::ObjectiveChoice::Wocc;
  }
  if (opts.mode == "community") config.mode = nectar::SearchMode::CommunityCentric;
  if (opts.beta) config.beta = *opts.beta;

  try {
    nectar::Graph graph = nectar::Graph::load_edge_list(in);
    if (graph.self_loops_skipped() > 0) {
      std::cerr << "detect: skipped " << graph.self_loops_skipped()
                << " self-loop(s)\n";
    }
    config.validate();

    nectar::RunReport report = [&] {
      if (opts.beta) return nectar::run(graph, config);
      // Default protocol: sweep the grid of the resolved objective.
      nectar::ObjectiveKind kind =
          config.objective == nectar::ObjectiveChoice::QExt ? nectar::ObjectiveKind::QExt
          : config.objective == nectar::ObjectiveChoice::Wocc
              ? nectar::ObjectiveKind::Wocc
              : nectar::select_objective(graph, config.tr_rate);
      std::vector<double> grid = nectar::default_beta_grid(kind);
      return nectar::beta_sweep(graph, config, grid);
    }();

    std::ofstream out(opts.output);
    if (!out) {
      std::cerr << "detect: cannot write " << opts.output << "\n";
      return kExitIo;
    }
    nectar::write_cover(out, report.cover, graph.labels());

    std::cout << "objective=" << nectar::to_string(report.objective) << "\n"
              << "beta=" << format_value(report.beta) << "\n"
              << "iterations=" << report.iterations << "\n"
              << "converged=" << (report.converged ? 1 : 0) << "\n"
              << "objective_value=" << format_value(report.objective_value) << "\n"
              << "communities=" << report.cover.community_count() << "\n";
    return kExitOk;
  } catch (const nectar::ParseError& e) {
    std::cerr << "detect: " << opts.input << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "detect: " << e.what() << "\n";
    return kExitUsage;
  }
}

struct EvaluateOptions {
  std::string detected;
  std::string truth;
  bool match = false;
  std::optional<std::size_t> universe;
  std::string report_path;
};

int run_evaluate(const EvaluateOptions& opts) {
  std::ifstream detected_in(opts.detected);
  if (!detected_in) {
    std::cerr << "evaluate: cannot read " << opts.detected << "\n";
    return kExitIo;
  }
  std::ifstream truth_in(opts.truth);
  if (!truth_in) {
    std::cerr << "evaluate: cannot read " << opts.truth << "\n";
    return kExitIo;
  }

  try {
    nectar::LabelInterner interner;
    std::vector<nectar::NodeSet> detected = nectar::read_cover(detected_in, interner);
    std::vector<nectar::NodeSet> truth = nectar::read_cover(truth_in, interner);
    std::size_t n = interner.size();
    if (opts.universe) {
      if (*opts.universe < n) {
        std::cerr << "evaluate: --n is smaller than the number of distinct labels ("
                  << n << ")\n";
        return kExitUsage;
      }
      n = *opts.universe;
    }

    nectar::EvaluationReport report =
        nectar::evaluate_covers(detected, truth, n, opts.match);

    std::ostringstream block;
    block << "nmi=" << format_value(report.nmi) << "\n"
          << "omega=" << format_value(report.omega) << "\n"
          << "avg_f1=" << format_value(report.avg_f1) << "\n";
    if (opts.match) block << "matched_cover_size=" << report.matched_cover_size << "\n";
    std::cout << block.str();

    std::ostringstream records;
    auto record = [&](const std::string& metric, const std::string& value) {
      records << "metric=" << metric << " value=" << value << " detected="
              << opts.detected << " truth=" << opts.truth << " matched="
              << (opts.match ? 1 : 0) << "\n";
    };
    record("nmi", format_value(report.nmi));
    record("omega", format_value(report.omega));
    record("avg_f1", format_value(report.avg_f1));
    if (opts.match) {
      record("matched_cover_size", std::to_string(report.matched_cover_size));
    }
    std::cout << records.str();

    if (!opts.report_path.empty()) {
      std::ofstream report_out(opts.report_path);
      if (!report_out) {
        std::cerr << "evaluate: cannot write " << opts.report_path << "\n";
        return kExitIo;
      }
      report_out << records.str();
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "evaluate: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "evaluate: " << e.what() << "\n";
    return kExitIo;
  }
}

struct GenerateOptions {
  nectar::PlantedPartitionSpec spec;
  std::string graph_path;
  std::string truth_path;
};

int run_generate(const GenerateOptions& opts) {
  try {
    nectar::PlantedGraph planted = nectar::generate_planted(opts.spec);

    std::ofstream graph_out(opts.graph_path);
    if (!graph_out) {
      std::cerr << "generate: cannot write " << opts.graph_path << "\n";
      return kExitIo;
    }
    const nectar::Graph& g = planted.graph;
    for (nectar::NodeId u = 0; u < g.node_count(); ++u) {
      for (nectar::NodeId v : g.neighbors(u)) {
        if (u < v) graph_out << g.label(u) << ' ' << g.label(v) << '\n';
      }
    }

    std::ofstream truth_out(opts.truth_path);
    if (!truth_out) {
      std::cerr << "generate: cannot write " << opts.truth_path << "\n";
      return kExitIo;
    }
    nectar::write_cover(truth_out, planted.truth, g.labels());

    std::cout << "nodes=" << g.node_count() << "\n"
              << "edges=" << g.edge_count() << "\n"
              << "communities=" << planted.truth.size() << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "generate: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping community detection by node-centric local search"};
  app.require_subcommand(1);

  DetectOptions detect;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Detect overlapping communities in an edge list");
  detect_cmd->add_option("--input", detect.input, "Edge list file")->required();
  detect_cmd->add_option("--output", detect.output, "Cover output file")->required();
  double beta_value = 0.0;
  CLI::Option* beta_opt =
      detect_cmd->add_option("--beta", beta_value, "Relative-gain threshold (>= 1)");
  detect_cmd->add_flag("--beta-sweep", detect.beta_sweep,
                       "Sweep the default beta grid (default when --beta is absent)");
  detect_cmd->add_option("--alpha", detect.alpha, "Merge overlap threshold in (0,1]");
  detect_cmd->add_option("--max-iter", detect.max_iter, "Maximum external iterations");
  detect_cmd->add_option("--tr-rate", detect.tr_rate,
                         "Triangle rate above which WOCC is selected");
  detect_cmd->add_option("--objective", detect.objective, "auto|qext|wocc")
      ->check(CLI::IsMember({"auto", "qext", "wocc"}));
  detect_cmd->add_option("--mode", detect.mode, "node|community")
      ->check(CLI::IsMember({"node", "community"}));
  detect_cmd->add_option("--seed", detect.seed, "RNG seed");

  EvaluateOptions evaluate;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Score a detected cover against ground truth");
  evaluate_cmd->add_option("--detected", evaluate.detected, "Detected cover file")
      ->required();
  evaluate_cmd->add_option("--truth", evaluate.truth, "Ground-truth cover file")
      ->required();
  evaluate_cmd->add_flag("--match", evaluate.match,
                         "Match detected communities to ground truth first");
  std::size_t universe = 0;
  CLI::Option* universe_opt = evaluate_cmd->add_option(
      "--n", universe, "Universe size (default: union of labels)");
  evaluate_cmd->add_option("--report", evaluate.report_path,
                           "Also write the structured records to a file");

  GenerateOptions generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Generate a planted-partition benchmark graph");
  generate_cmd->add_option("--communities", generate.spec.communities, "Block count");
  generate_cmd->add_option("--size", generate.spec.community_size, "Block size");
  generate_cmd->add_option("--p-in", generate.spec.p_in, "Intra-block edge probability");
  generate_cmd->add_option("--p-out", generate.spec.p_out, "Cross-block edge probability");
  generate_cmd->add_option("--overlap", generate.spec.overlap_nodes,
                           "Number of overlap nodes");
  generate_cmd->add_option("--memberships", generate.spec.memberships_per_overlap_node,
                           "Blocks per overlap node");
  generate_cmd->add_option("--seed", generate.spec.seed, "RNG seed");
  generate_cmd->add_option("--graph", generate.graph_path, "Edge list output")->required();
  generate_cmd->add_option("--truth", generate.truth_path, "Ground-truth cover output")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (detect_cmd->parsed()) {
    if (*beta_opt) detect.beta = beta_value;
    return run_detect(detect);
  }
  if (evaluate_cmd->parsed()) {
    if (*universe_opt) evaluate.universe = universe;
    return run_evaluate(evaluate);
  }
  return run_generate(generate);
}
