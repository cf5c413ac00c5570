/*
   Copyright 2026 The blocktest authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blocktest/detect.hpp"
#include "blocktest/gen.hpp"
#include "blocktest/io.hpp"
#include "blocktest/metrics.hpp"
#include "blocktest/rng.hpp"
#include "blocktest/sweep.hpp"

namespace {

using namespace blocktest;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

SurrogateFit parse_fit(const std::string& name) {
  if (name == "moment-ratio") return SurrogateFit::MomentRatio;
  if (name == "density") return SurrogateFit::Density;
  if (name == "calibrated-density") return SurrogateFit::CalibratedDensity;
  throw CLI::ValidationError("--fit", "unknown fit mode: " + name);
}

struct TestFlags {
  double significance = 0.05;
  int surrogates = 50;
  std::vector<double> gamma{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  std::string fit = "calibrated-density";
  bool no_connected_surrogates = false;
  int max_kde_pairs = 0;
  int threads = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--significance", significance, "Rejection threshold for the p-value")
        ->capture_default_str();
    cmd->add_option("--surrogates", surrogates, "Null ensemble size")->capture_default_str();
    cmd->add_option("--gamma", gamma,
                    "Dissimilarity weights: distance,clustering,centrality (sum to 1)")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--fit", fit,
                    "Null density rule: moment-ratio | density | calibrated-density")
        ->capture_default_str();
    cmd->add_flag("--no-connected-surrogates", no_connected_surrogates,
                  "Keep disconnected surrogate draws instead of redrawing");
    cmd->add_option("--max-kde-pairs", max_kde_pairs,
                    "Cap the pairwise dissimilarities entering the KDE (0 = all)")
        ->capture_default_str();
    cmd->add_option("--threads", threads,
                    "Worker threads (0 = BLOCKTEST_THREADS or all cores)")
        ->capture_default_str();
  }

  TestConfig to_config() const {
    TestConfig cfg;
    cfg.significance = significance;
    cfg.surrogates = surrogates;
    cfg.weights = {gamma[0], gamma[1], gamma[2]};
    cfg.fit = parse_fit(fit);
    cfg.connected_surrogates = !no_connected_surrogates;
    cfg.max_kde_pairs = max_kde_pairs;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }
};

std::ostream& open_or_stdout(std::optional<std::ofstream>& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.emplace(path);
  if (!*file) throw io::IoError("cannot write " + path);
  return *file;
}

int cmd_generate(int n, int k, std::vector<int> block_sizes, double w_in, double w_out,
                 const std::string& theta_source, const std::string& theta_file,
                 std::uint64_t seed, const std::string& out_edges, const std::string& out_labels) {
  if (block_sizes.empty()) {
    if (n < 1 || k < 1) throw CLI::ValidationError("--n/--k", "need positive sizes");
    block_sizes.assign(k, n / k);
    for (int i = 0; i < n % k; ++i) ++block_sizes[i];
  }
  const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (n > 0 && total != n)
    throw CLI::ValidationError("--block-sizes", "block sizes sum to " + std::to_string(total) +
                                                    ", not --n");

  std::vector<double> theta;
  if (theta_source == "halfnormal") {
    theta = sample_theta_adjusted_halfnormal(total, derive_seed(seed, 0));
  } else if (theta_source == "file") {
    std::ifstream in(theta_file);
    if (!in) throw io::IoError("cannot open " + theta_file);
    double value = 0.0;
    while (in >> value) theta.push_back(value);
    if (static_cast<int>(theta.size()) != total)
      throw io::IoError(theta_file + ": expected " + std::to_string(total) + " theta values, got " +
                        std::to_string(theta.size()));
  } else {
    throw CLI::ValidationError("--theta", "must be 'halfnormal' or 'file'");
  }

  auto spec = DcsbmSpec::uniform(block_sizes, w_in, w_out, std::move(theta));
  auto sample = sample_dcsbm(spec, derive_seed(seed, 1));

  io::LabeledGraph labeled = io::with_numeric_labels(std::move(sample.graph));
  io::write_edge_list(out_edges, labeled);

  io::LabelAssignment truth;
  truth.reserve(total);
  for (VertexId v = 0; v < total; ++v)
    truth.emplace_back(std::to_string(v), sample.truth.labels[v]);
  io::write_labels_file(out_labels, truth);

  std::cout << "generated " << total << " vertices, " << labeled.graph.edge_count()
            << " edges into " << out_edges << " (truth: " << out_labels << ")\n";
  return kExitOk;
}

int cmd_detect(const std::string& input, std::uint64_t seed, const TestFlags& flags,
               std::vector<double> beta, int min_size, int max_depth, bool bonferroni,
               const std::string& out) {
  DetectConfig cfg;
  cfg.test = flags.to_config();
  cfg.split.beta1 = beta.at(0);
  cfg.split.beta2 = beta.at(1);
  cfg.split.threads = flags.threads;
  cfg.min_test_size = min_size;
  cfg.max_depth = max_depth;
  cfg.bonferroni_by_depth = bonferroni;
  cfg.seed = seed;
  cfg.validate();

  auto labeled = io::read_edge_list(input);
  const auto start = std::chrono::steady_clock::now();
  auto result = detect_communities(labeled.graph, cfg);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::optional<std::ofstream> file;
  auto& stream = open_or_stdout(file, out);
  io::write_result_document(stream, labeled, input, cfg, result, elapsed_ms);
  std::cerr << "communities: " << result.community_count() << "  (" << elapsed_ms << " ms)\n";
  return kExitOk;
}

int cmd_dissim(const std::string& path_a, const std::string& path_b,
               const std::vector<double>& gamma) {
  DissimWeights weights{gamma[0], gamma[1], gamma[2]};
  weights.validate();
  auto a = io::read_edge_list(path_a);
  auto b = io::read_edge_list(path_b);
  double d = dissimilarity(a.graph, b.graph, weights);
  std::printf("%.6f\n", d);
  return kExitOk;
}

VertexPartition partition_from(const io::LabelAssignment& labels,
                               const std::vector<std::string>& order) {
  std::unordered_map<std::string, int> by_label;
  for (const auto& [label, community] : labels) {
    if (!by_label.emplace(label, community).second)
      throw io::IoError("vertex '" + label + "' labeled twice");
  }
  std::vector<int> raw;
  raw.reserve(order.size());
  for (const auto& label : order) {
    auto it = by_label.find(label);
    if (it == by_label.end()) throw io::IoError("vertex '" + label + "' missing from labels");
    raw.push_back(it->second);
  }
  if (by_label.size() != order.size())
    throw io::IoError("label file covers " + std::to_string(by_label.size()) +
                      " vertices, expected " + std::to_string(order.size()));
  return VertexPartition::normalized(std::move(raw));
}

int cmd_eval(const std::string& pred_path, const std::string& truth_path) {
  auto pred = io::read_prediction(pred_path);
  auto truth = io::read_labels_file(truth_path);

  // align on the prediction's vertex universe
  std::vector<std::string> order;
  order.reserve(pred.labels.size());
  for (const auto& [label, community] : pred.labels) order.push_back(label);
  auto pred_partition = partition_from(pred.labels, order);
  auto truth_partition = partition_from(truth, order);

  std::printf("communities_pred %d\n", pred_partition.community_count());
  std::printf("communities_truth %d\n", truth_partition.community_count());
  std::printf("ari %.6f\n", adjusted_rand(pred_partition, truth_partition));
  std::printf("f1 %.6f\n", f1_score(pred_partition, truth_partition));
  return kExitOk;
}

int cmd_sweep(const std::string& experiment, int runs, int n, std::uint64_t seed,
              const TestFlags& flags, const std::string& out) {
  SweepConfig cfg;
  cfg.experiment = parse_experiment(experiment);
  cfg.runs = runs;
  cfg.n = n;
  cfg.seed = seed;
  cfg.test = flags.to_config();
  cfg.validate();

  std::optional<std::ofstream> file;
  auto& stream = open_or_stdout(file, out);
  stream << "param,mean_pvalue,std_pvalue,reject_rate\n";
  run_sweep(cfg, [&](const SweepRow& row) {
    char line[128];
    std::snprintf(line, sizeof line, "%g,%.6f,%.6f,%.4f", row.param, row.mean_pvalue,
                  row.std_pvalue, row.reject_rate);
    stream << line << '\n';
    stream.flush();
    std::cerr << "sweep " << experiment << " param=" << row.param
              << " mean_pvalue=" << row.mean_pvalue << "\n";
  });
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection by recursive null-model hypothesis testing"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Sample a two-or-more-block benchmark graph");
  int gen_n = 0, gen_k = 2;
  std::vector<int> gen_blocks;
  double gen_w_in = 0.2, gen_w_out = 0.02;
  std::string gen_theta = "halfnormal", gen_theta_file;
  std::uint64_t gen_seed = 0;
  std::string gen_out_edges = "graph.edges", gen_out_labels = "graph.labels";
  generate->add_option("--n", gen_n, "Total vertices (split evenly over --k blocks)");
  generate->add_option("--k", gen_k, "Number of blocks")->capture_default_str();
  generate->add_option("--block-sizes", gen_blocks, "Explicit block sizes (overrides --n/--k)")
      ->delimiter(',');
  generate->add_option("--w-in", gen_w_in, "Within-block connection parameter")
      ->capture_default_str();
  generate->add_option("--w-out", gen_w_out, "Cross-block connection parameter")
      ->capture_default_str();
  generate->add_option("--theta", gen_theta, "Degree propensities: halfnormal | file")
      ->capture_default_str();
  generate->add_option("--theta-file", gen_theta_file, "One theta value per line");
  generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  generate->add_option("--out-edges", gen_out_edges, "Edge list output path")
      ->capture_default_str();
  generate->add_option("--out-labels", gen_out_labels, "Ground-truth labels output path")
      ->capture_default_str();

  // detect
  auto* detect = app.add_subcommand("detect", "Find communities in an edge-list graph");
  std::string det_input, det_out;
  std::uint64_t det_seed = 0;
  std::vector<double> det_beta{0.5, 0.5};
  int det_min_size = 4, det_max_depth = 32;
  bool det_bonferroni = false;
  TestFlags det_flags;
  detect->add_option("--input", det_input, "Edge list path")->required();
  detect->add_option("--seed", det_seed, "Random seed")->capture_default_str();
  det_flags.attach(detect);
  detect->add_option("--beta", det_beta, "Split weights: betweenness,clustering")
      ->delimiter(',')
      ->expected(2);
  detect->add_option("--min-size", det_min_size, "Accept pieces smaller than this untested")
      ->capture_default_str();
  detect->add_option("--max-depth", det_max_depth, "Recursion cap")->capture_default_str();
  detect->add_flag("--bonferroni", det_bonferroni,
                   "Halve the significance threshold at each recursion level");
  detect->add_option("--out", det_out, "Result document path (default: stdout)");

  // dissim
  auto* dissim = app.add_subcommand("dissim", "Dissimilarity between two edge-list graphs");
  std::string dis_a, dis_b;
  std::vector<double> dis_gamma{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  dissim->add_option("graph_a", dis_a, "First edge list")->required();
  dissim->add_option("graph_b", dis_b, "Second edge list")->required();
  dissim->add_option("--gamma", dis_gamma,
                     "Weights: distance,clustering,centrality (sum to 1)")
      ->delimiter(',')
      ->expected(3);

  // eval
  auto* eval = app.add_subcommand("eval", "Compare a detection result against ground truth");
  std::string eval_pred, eval_truth;
  eval->add_option("--pred", eval_pred, "Result document or labels file")->required();
  eval->add_option("--truth", eval_truth, "Ground-truth labels file")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "P-value curves on generated two-block ensembles");
  std::string sw_experiment, sw_out;
  int sw_runs = 10, sw_n = 0;
  std::uint64_t sw_seed = 0;
  TestFlags sw_flags;
  sweep->add_option("--experiment", sw_experiment,
                    "balanced_w12 | unbalanced_n1 | unbalanced_w12")
      ->required();
  sweep->add_option("--runs", sw_runs, "Runs per grid point")->capture_default_str();
  sweep->add_option("--n", sw_n, "Total vertices (0 = 1000)")->capture_default_str();
  sweep->add_option("--seed", sw_seed, "Random seed")->capture_default_str();
  sw_flags.attach(sweep);
  sweep->add_option("--out", sw_out, "CSV output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed())
      return cmd_generate(gen_n, gen_k, gen_blocks, gen_w_in, gen_w_out, gen_theta,
                          gen_theta_file, gen_seed, gen_out_edges, gen_out_labels);
    if (detect->parsed())
      return cmd_detect(det_input, det_seed, det_flags, det_beta, det_min_size, det_max_depth,
                        det_bonferroni, det_out);
    if (dissim->parsed()) return cmd_dissim(dis_a, dis_b, dis_gamma);
    if (eval->parsed()) return cmd_eval(eval_pred, eval_truth);
    if (sweep->parsed()) return cmd_sweep(sw_experiment, sw_runs, sw_n, sw_seed, sw_flags, sw_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // configuration errors (bad weights, bad grids, ...) are usage errors
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
