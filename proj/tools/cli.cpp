#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "experiments.hpp"
#include "npd/detail/parallel.hpp"
#include "npd/divergence.hpp"
#include "npd/edge_list.hpp"
#include "npd/serialize.hpp"

namespace npd::cli {

namespace {

/// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  bool directed = false;
  bool weighted = false;
  std::size_t bins = 100;
  bool bins_given = false;
  WeightTransform transform = WeightTransform::reciprocal;
  bool transform_given = false;
  bool legacy = false;
  std::string format = "json";
  std::string output;
};

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string basename(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

void validate(const RunConfig& cfg) {
  if (!cfg.weighted && (cfg.bins_given || cfg.transform_given)) {
    throw UsageError("--bins and --transform require --weighted");
  }
  if (cfg.bins == 0) throw UsageError("--bins must be at least 1");
  if (cfg.legacy && cfg.weighted) {
    throw UsageError("--legacy compares hop-count portraits; drop --weighted");
  }
}

Graph load(const RunConfig& cfg, const std::string& path, std::ostream& err) {
  ParsedGraph parsed = read_edge_list(path, {cfg.directed, cfg.weighted});
  if (parsed.self_loops_dropped) {
    fmt::print(err, "warning: {}: dropped {} self-loop(s)\n", path, parsed.self_loops_dropped);
  }
  if (parsed.duplicates_collapsed) {
    fmt::print(err, "warning: {}: collapsed {} duplicate edge(s)\n", path,
               parsed.duplicates_collapsed);
  }
  if (parsed.graph.n_nodes() == 0) {
    throw ParseError(ParseError::Kind::malformed, 0, path + ": no edges found");
  }
  return std::move(parsed.graph);
}

std::vector<Graph> load_all(const RunConfig& cfg, std::ostream& err) {
  std::vector<Graph> graphs;
  for (const auto& path : cfg.inputs) {
    try {
      graphs.push_back(load(cfg, path, err));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.line(), path + ": " + e.what());
    }
  }
  return graphs;
}

DivergenceReport compare_pair(const RunConfig& cfg, const Graph& a, const Graph& b) {
  return cfg.weighted ? weighted_portrait_divergence(a, b, cfg.bins, cfg.transform)
                      : portrait_divergence(a, b);
}

void cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = load_all(cfg, err);
  const DivergenceReport report = compare_pair(cfg, graphs[0], graphs[1]);
  std::optional<double> delta;
  if (cfg.legacy) delta = legacy_delta(graphs[0], graphs[1]);

  if (cfg.format == "json") {
    auto j = report_to_json(report);
    if (delta) j["legacy_delta"] = *delta;
    out << j.dump() << '\n';
  } else {
    out << "d_js,kl_p_m_bits,kl_q_m_bits" << (delta ? ",legacy_delta" : "") << '\n';
    out << num(report.d_js) << ',' << num(report.kl_p_m) << ',' << num(report.kl_q_m);
    if (delta) out << ',' << num(*delta);
    out << '\n';
  }
}

void cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = load_all(cfg, err);
  const std::size_t k = graphs.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }

  std::vector<std::vector<double>> matrix(k, std::vector<double>(k, 0.0));
  if (cfg.weighted) {
    // Each pair gets its own shared binning.
    detail::parallel_for(pairs.size(), [&](std::size_t p) {
      auto [i, j] = pairs[p];
      matrix[i][j] = matrix[j][i] = compare_pair(cfg, graphs[i], graphs[j]).d_js;
    });
  } else {
    std::vector<JointDistribution> joints(k);
    detail::parallel_for(k, [&](std::size_t i) { joints[i] = joint_distribution(portrait(graphs[i])); });
    detail::parallel_for(pairs.size(), [&](std::size_t p) {
      auto [i, j] = pairs[p];
      matrix[i][j] = matrix[j][i] = jensen_shannon(joints[i], joints[j]).d_js;
    });
  }

  std::vector<std::string> names;
  for (const auto& path : cfg.inputs) names.push_back(basename(path));
  if (cfg.format == "json") {
    out << nlohmann::json{{"labels", names}, {"matrix", matrix}}.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < k; ++j) out << (j ? "," : "") << num(row[j]);
    out << '\n';
  }
}

void cmd_portrait(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.weighted && !cfg.bins_given) {
    throw UsageError("a weighted portrait needs an explicit --bins");
  }
  const Graph g = load_all(cfg, err).front();
  const Portrait p = cfg.weighted
                         ? weighted_portrait(g, make_shared_bins(g, g, cfg.bins, cfg.transform),
                                             cfg.transform)
                         : portrait(g);
  if (cfg.format == "json") {
    out << portrait_to_json(p).dump() << '\n';
  } else {
    write_portrait_csv(out, p);
  }
}

std::vector<std::size_t> parse_counts(const std::string& list) {
  std::vector<std::size_t> counts;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      counts.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--rewirings expects comma-separated counts, got '" + item + "'");
    }
  }
  if (counts.empty()) throw UsageError("--rewirings is empty");
  return counts;
}

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::size_t n_nodes = 300;
  double mean_degree = 6.0;
  std::size_t pairs = 30;
  double er_p = 3.0 / 299.0;
  std::size_t ba_m = 3;
  std::string rewirings = "0,10,100,1000";
  std::size_t samples = 30;
  std::string output;
};

void cmd_experiment(const ExperimentConfig& cfg, std::ostream& out) {
  if (cfg.name == "ensemble-distributions") {
    experiments::EnsembleParams params;
    params.n_nodes = cfg.n_nodes;
    params.mean_degree = cfg.mean_degree;
    params.pairs = cfg.pairs;
    params.seed = cfg.seed;
    out << "condition,pair,d_js\n";
    for (const auto& s : experiments::ensemble_distributions(params)) {
      out << s.condition << ',' << s.pair << ',' << num(s.d_js) << '\n';
    }
  } else if (cfg.name == "rewiring-curve") {
    experiments::RewiringParams params;
    params.n_nodes = cfg.n_nodes;
    params.er_p = cfg.er_p;
    params.ba_m = cfg.ba_m;
    params.rewirings = parse_counts(cfg.rewirings);
    params.samples = cfg.samples;
    params.seed = cfg.seed;
    out << "model,rewiring,n_rewirings,samples,mean_d_js,sd_d_js\n";
    for (const auto& p : experiments::rewiring_curve(params)) {
      out << p.model << ',' << p.rewiring << ',' << p.n_rewirings << ',' << p.samples << ','
          << num(p.mean) << ',' << num(p.sd) << '\n';
    }
  } else {
    throw UsageError("unknown experiment '" + cfg.name +
                     "' (expected ensemble-distributions or rewiring-curve)");
  }
}

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--directed", cfg.directed, "Treat edges as directed");
  cmd->add_flag("--weighted", cfg.weighted, "Read a third weight column");
  cmd->add_option("--bins", cfg.bins, "Number of quantile bins for weighted portraits")
      ->each([&cfg](const std::string&) { cfg.bins_given = true; });
  const std::map<std::string, WeightTransform> transforms{
      {"reciprocal", WeightTransform::reciprocal}, {"identity", WeightTransform::identity}};
  cmd->add_option("--transform", cfg.transform, "Edge cost: reciprocal (1/w) or identity (w)")
      ->transform(CLI::CheckedTransformer(transforms, CLI::ignore_case))
      ->each([&cfg](const std::string&) { cfg.transform_given = true; });
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", cfg.output, "Write results to this path instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network portraits and portrait divergences"};
  app.name("npd");
  app.require_subcommand(1);

  RunConfig compare_cfg, matrix_cfg, portrait_cfg;
  matrix_cfg.format = "csv";
  ExperimentConfig experiment_cfg;

  auto* compare = app.add_subcommand("compare", "Divergence between two edge-list files");
  compare->add_option("inputs", compare_cfg.inputs, "Two edge-list files")
      ->required()
      ->expected(2);
  add_graph_options(compare, compare_cfg);
  compare->add_flag("--legacy", compare_cfg.legacy, "Also report the KS-based Delta");

  auto* matrix = app.add_subcommand("matrix", "All-pairs divergence matrix over k files");
  matrix->add_option("inputs", matrix_cfg.inputs, "Edge-list files (layers or snapshots)")
      ->required()
      ->expected(2, CLI::detail::expected_max_vector_size);
  add_graph_options(matrix, matrix_cfg);

  auto* portrait_cmd = app.add_subcommand("portrait", "Print the portrait of one network");
  portrait_cmd->add_option("input", portrait_cfg.inputs, "Edge-list file")
      ->required()
      ->expected(1);
  add_graph_options(portrait_cmd, portrait_cfg);

  auto* experiment = app.add_subcommand("experiment", "Synthetic ensemble experiments (CSV)");
  experiment->add_option("name", experiment_cfg.name,
                         "ensemble-distributions or rewiring-curve")
      ->required();
  experiment->add_option("--seed", experiment_cfg.seed, "Base seed");
  experiment->add_option("--nodes", experiment_cfg.n_nodes, "Nodes per graph")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
  experiment->add_option("--mean-degree", experiment_cfg.mean_degree,
                         "Mean degree for ensemble-distributions")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--pairs", experiment_cfg.pairs, "Pairs per condition");
  experiment->add_option("--er-p", experiment_cfg.er_p, "ER edge probability (rewiring-curve)")
      ->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--ba-m", experiment_cfg.ba_m, "BA attachment count (rewiring-curve)")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--rewirings", experiment_cfg.rewirings,
                         "Comma-separated rewiring counts");
  experiment->add_option("--samples", experiment_cfg.samples, "Samples per point");
  experiment->add_option("--output", experiment_cfg.output, "Write CSV to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  auto with_output = [&](const std::string& path, auto&& body) {
    if (path.empty()) {
      body(out);
      return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    body(file);
  };

  try {
    if (compare->parsed()) {
      validate(compare_cfg);
      with_output(compare_cfg.output, [&](std::ostream& o) { cmd_compare(compare_cfg, o, err); });
    } else if (matrix->parsed()) {
      validate(matrix_cfg);
      with_output(matrix_cfg.output, [&](std::ostream& o) { cmd_matrix(matrix_cfg, o, err); });
    } else if (portrait_cmd->parsed()) {
      validate(portrait_cfg);
      with_output(portrait_cfg.output,
                  [&](std::ostream& o) { cmd_portrait(portrait_cfg, o, err); });
    } else if (experiment->parsed()) {
      with_output(experiment_cfg.output,
                  [&](std::ostream& o) { cmd_experiment(experiment_cfg, o); });
    }
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    fmt::print(err, "parse error: {}\n", e.what());
    // A weight column that disagrees with --weighted is a flag mismatch.
    return e.kind() == ParseError::Kind::weight_columns ? kUsage : kParse;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kFailure;
  }
  return kSuccess;
}

}  // namespace npd::cli
