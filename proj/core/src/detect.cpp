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

#include "blocktest/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blocktest/rng.hpp"

namespace blocktest {

void DetectConfig::validate() const {
  test.validate();
  split.validate();
  if (min_test_size < 2) throw std::invalid_argument("min_test_size must be >= 2");
  if (max_depth < 0) throw std::invalid_argument("negative max_depth");
}

const char* to_string(NodeOutcome outcome) {
  switch (outcome) {
    case NodeOutcome::SplitComponents: return "split-components";
    case NodeOutcome::Rejected: return "rejected";
    case NodeOutcome::Accepted: return "accepted";
    case NodeOutcome::AcceptedDegenerate: return "accepted-degenerate";
    case NodeOutcome::AcceptedSmall: return "accepted-by-size";
    case NodeOutcome::AcceptedDepthCap: return "accepted-depth-cap";
  }
  return "?";
}

namespace {

std::uint64_t node_seed(std::uint64_t parent_seed, const std::vector<VertexId>& sorted_ids) {
  return derive_seed_fnv(parent_seed, sorted_ids.data(), sorted_ids.size() * sizeof(VertexId));
}

struct Driver {
  const Graph& root;
  const DetectConfig& cfg;
  std::vector<DetectNode> tree;

  // `vertices` must be sorted original ids forming a connected or
  // disconnected induced piece of `root`.
  int process(std::vector<VertexId> vertices, int depth, std::uint64_t parent_seed) {
    const int index = static_cast<int>(tree.size());
    tree.push_back({});
    tree[index].vertices = std::move(vertices);
    tree[index].depth = depth;
    const auto& ids = tree[index].vertices;

    auto piece = induced_subgraph(root, ids);
    auto components = piece.graph.connected_components();
    if (components.size() > 1) {
      tree[index].outcome = NodeOutcome::SplitComponents;
      for (const auto& comp : components) {
        std::vector<VertexId> original;
        original.reserve(comp.size());
        for (VertexId v : comp) original.push_back(piece.to_old[v]);
        int child = process(std::move(original), depth, parent_seed);
        tree[index].children.push_back(child);
      }
      return index;
    }

    if (static_cast<int>(ids.size()) < cfg.min_test_size) {
      tree[index].outcome = NodeOutcome::AcceptedSmall;
      return index;
    }
    if (depth >= cfg.max_depth) {
      tree[index].outcome = NodeOutcome::AcceptedDepthCap;
      return index;
    }

    const std::uint64_t seed = node_seed(parent_seed, ids);
    TestConfig test_cfg = cfg.test;
    if (cfg.bonferroni_by_depth)
      test_cfg.significance = cfg.test.significance * std::pow(0.5, depth);
    tree[index].has_test = true;
    tree[index].test = hypothesis_test(piece.graph, test_cfg, seed);

    if (!tree[index].test.reject) {
      tree[index].outcome =
          tree[index].test.degenerate ? NodeOutcome::AcceptedDegenerate : NodeOutcome::Accepted;
      return index;
    }

    tree[index].outcome = NodeOutcome::Rejected;
    BisectConfig split_cfg = cfg.split;
    split_cfg.sample_seed = derive_seed(seed, 0x5eed);
    auto parts = bisect(piece.graph, split_cfg);
    for (const auto& part : parts) {
      std::vector<VertexId> original;
      original.reserve(part.size());
      for (VertexId v : part) original.push_back(piece.to_old[v]);
      int child = process(std::move(original), depth + 1, seed);
      tree[index].children.push_back(child);
    }
    return index;
  }
};

} // namespace

DetectionResult detect_communities(const Graph& g, const DetectConfig& cfg) {
  cfg.validate();
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");

  Driver driver{g, cfg, {}};
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
  driver.process(std::move(all), 0, cfg.seed);

  DetectionResult result;
  result.tree = std::move(driver.tree);
  for (int i = 0; i < static_cast<int>(result.tree.size()); ++i)
    if (result.tree[i].children.empty()) result.leaves.push_back(i);
  std::sort(result.leaves.begin(), result.leaves.end(), [&](int a, int b) {
    return result.tree[a].vertices.front() < result.tree[b].vertices.front();
  });

  result.partition.labels.assign(g.vertex_count(), -1);
  for (int label = 0; label < static_cast<int>(result.leaves.size()); ++label)
    for (VertexId v : result.tree[result.leaves[label]].vertices)
      result.partition.labels[v] = label;
  result.partition.validate();
  return result;
}

} // namespace blocktest
