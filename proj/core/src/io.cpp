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

#include "blocktest/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace blocktest::io {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw IoError(name + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

bool comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

VertexId LabeledGraph::require(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end()) throw IoError("unknown vertex label: " + label);
  return it->second;
}

LabeledGraph with_numeric_labels(Graph g) {
  LabeledGraph out;
  out.labels.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.labels.push_back(std::to_string(v));
    out.index.emplace(out.labels.back(), v);
  }
  out.file_edges = g.edges();
  out.graph = std::move(g);
  return out;
}

LabeledGraph read_edge_list(std::istream& in, const std::string& name) {
  LabeledGraph out;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = out.index.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (fresh) out.labels.push_back(label);
    return it->second;
  };

  std::set<EdgePair> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (comment_or_blank(line)) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) fail(name, line_no, "expected two vertex labels");
    if (fields >> extra) fail(name, line_no, "trailing token '" + extra + "'");
    VertexId u = intern(a), v = intern(b);
    if (u == v) fail(name, line_no, "self-loop at '" + a + "'");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      fail(name, line_no, "duplicate edge '" + a + " " + b + "'");
    out.file_edges.emplace_back(u, v);
  }

  out.graph = Graph(static_cast<int>(out.labels.size()), out.file_edges);
  return out;
}

LabeledGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  for (const auto& [u, v] : g.file_edges) out << g.labels[u] << ' ' << g.labels[v] << '\n';
}

void write_edge_list(const std::filesystem::path& path, const LabeledGraph& g) {
  auto out = open_output(path);
  write_edge_list(out, g);
}

LabelAssignment read_labels_file(std::istream& in, const std::string& name) {
  LabelAssignment out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (comment_or_blank(line)) continue;
    std::istringstream fields(line);
    std::string label, extra;
    long long community = 0;
    if (!(fields >> label >> community)) fail(name, line_no, "expected 'vertex community'");
    if (fields >> extra) fail(name, line_no, "trailing token '" + extra + "'");
    if (community < 0) fail(name, line_no, "negative community id");
    out.emplace_back(label, static_cast<int>(community));
  }
  return out;
}

LabelAssignment read_labels_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_labels_file(in, path.string());
}

void write_labels_file(std::ostream& out, const LabelAssignment& labels) {
  for (const auto& [label, community] : labels) out << label << ' ' << community << '\n';
}

void write_labels_file(const std::filesystem::path& path, const LabelAssignment& labels) {
  auto out = open_output(path);
  write_labels_file(out, labels);
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a-%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const char* fit_name(SurrogateFit fit) {
  switch (fit) {
    case SurrogateFit::MomentRatio: return "moment-ratio";
    case SurrogateFit::Density: return "density";
    case SurrogateFit::CalibratedDensity: return "calibrated-density";
  }
  return "?";
}

ordered_json tree_to_json(const DetectionResult& result, const LabeledGraph& input, int node) {
  const DetectNode& n = result.tree[node];
  ordered_json j;
  j["size"] = n.vertices.size();
  j["min_vertex"] = input.labels[n.vertices.front()];
  j["depth"] = n.depth;
  j["outcome"] = to_string(n.outcome);
  if (n.has_test) {
    j["mean_dissim"] = n.test.mean_dissim;
    j["pvalue"] = n.test.pvalue;
    j["surrogates"] = n.test.surrogate_count;
  }
  if (!n.children.empty()) {
    ordered_json children = ordered_json::array();
    for (int c : n.children) children.push_back(tree_to_json(result, input, c));
    j["children"] = std::move(children);
  }
  return j;
}

} // namespace

void write_result_document(std::ostream& out, const LabeledGraph& input,
                           const std::string& input_name, const DetectConfig& cfg,
                           const DetectionResult& result, double elapsed_ms) {
  ordered_json j;
  j["format"] = "blocktest-result";
  j["version"] = 1;
  j["input"] = {{"path", input_name},
                {"vertices", input.graph.vertex_count()},
                {"edges", input.graph.edge_count()},
                {"digest", graph_digest(input.graph)}};
  j["config"] = {{"significance", cfg.test.significance},
                 {"surrogates", cfg.test.surrogates},
                 {"gamma", {cfg.test.weights.distance, cfg.test.weights.clustering,
                            cfg.test.weights.centrality}},
                 {"beta", {cfg.split.beta1, cfg.split.beta2}},
                 {"min_test_size", cfg.min_test_size},
                 {"max_depth", cfg.max_depth},
                 {"bonferroni_by_depth", cfg.bonferroni_by_depth},
                 {"max_kde_pairs", cfg.test.max_kde_pairs},
                 {"seed", cfg.seed},
                 {"surrogate_fit", fit_name(cfg.test.fit)},
                 {"connected_surrogates", cfg.test.connected_surrogates},
                 {"damping_fraction", cfg.test.damping.spectral_fraction}};
  j["communities"] = result.community_count();
  ordered_json labels = ordered_json::object();
  for (VertexId v = 0; v < input.graph.vertex_count(); ++v)
    labels[input.labels[v]] = result.partition.labels[v];
  j["labels"] = std::move(labels);
  j["tree"] = tree_to_json(result, input, 0);
  j["timing_ms"] = elapsed_ms;
  out << j.dump(2) << '\n';
}

void write_result_document(const std::filesystem::path& path, const LabeledGraph& input,
                           const std::string& input_name, const DetectConfig& cfg,
                           const DetectionResult& result, double elapsed_ms) {
  auto out = open_output(path);
  write_result_document(out, input, input_name, cfg, result, elapsed_ms);
}

ResultInfo read_result_document(std::istream& in, const std::string& name) {
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError(name + ": not a result document: " + e.what());
  }
  if (j.value("format", "") != "blocktest-result")
    throw IoError(name + ": missing blocktest-result format marker");
  if (j.value("version", 0) != 1)
    throw IoError(name + ": unsupported result version");
  ResultInfo info;
  info.communities = j.at("communities").get<int>();
  for (const auto& [label, community] : j.at("labels").items())
    info.labels.emplace_back(label, community.get<int>());
  return info;
}

ResultInfo read_result_document(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_result_document(in, path.string());
}

ResultInfo read_prediction(const std::filesystem::path& path) {
  {
    auto probe = open_input(path);
    char first = 0;
    while (probe.get(first) && std::isspace(static_cast<unsigned char>(first))) {
    }
    if (first == '{') return read_result_document(path);
  }
  ResultInfo info;
  info.labels = read_labels_file(path);
  int max_label = -1;
  for (const auto& [label, community] : info.labels) max_label = std::max(max_label, community);
  std::vector<int> raw;
  raw.reserve(info.labels.size());
  for (const auto& [label, community] : info.labels) raw.push_back(community);
  info.communities = VertexPartition::normalized(std::move(raw)).community_count();
  return info;
}

} // namespace blocktest::io
