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

#pragma once

#include <cstdint>
#include <vector>

#include "blocktest/graph.hpp"

namespace blocktest {

/// Mutable view of a graph supporting edge deletion. Edge indices refer to
/// the originating Graph's edge list and stay stable across deletions.
class WorkGraph {
public:
  explicit WorkGraph(const Graph& g);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int alive_edge_count() const { return alive_count_; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Current neighbors of v as (neighbor, original edge index), sorted by
  /// neighbor id.
  const std::vector<std::pair<VertexId, int>>& neighbors(VertexId v) const {
    return adjacency_[v];
  }

  const std::vector<EdgePair>& all_edges() const { return edges_; }
  bool alive(int edge_index) const { return alive_[edge_index] != 0; }

  void remove_edge(int edge_index);

  std::vector<std::vector<VertexId>> connected_components() const;

private:
  std::vector<std::vector<std::pair<VertexId, int>>> adjacency_;
  std::vector<EdgePair> edges_;
  std::vector<char> alive_;
  int alive_count_ = 0;
};

/// Split tuning. Betweenness is min-max normalized to [0, 1] over the live
/// edge set before mixing, so beta2 weights the clustering term on a
/// comparable scale. Graphs larger than exact_below use a seeded sample of
/// BFS sources instead of all of them.
struct BisectConfig {
  double beta1 = 0.5;
  double beta2 = 0.5;
  int exact_below = 2000;
  int sampled_sources = 256;
  std::uint64_t sample_seed = 0;
  int threads = 0;

  void validate() const;
};

/// Shortest-path load per edge: the sum over unordered vertex pairs of the
/// fraction of shortest paths between them that traverse the edge. Indexed
/// by original edge position; removed edges report 0.
std::vector<double> edge_betweenness(const WorkGraph& g, const BisectConfig& cfg = {});
std::vector<double> edge_betweenness(const Graph& g, const BisectConfig& cfg = {});

/// Triangles on the edge over min(k_i - 1, k_j - 1); 0 when an endpoint has
/// degree 1. Values lie in [0, 1].
std::vector<double> edge_clustering(const WorkGraph& g);
std::vector<double> edge_clustering(const Graph& g);

/// Removal scores L = beta1 * normalized_betweenness - beta2 * clustering.
std::vector<double> inter_community_scores(const WorkGraph& g, const BisectConfig& cfg = {});

/// Removes the top-score edge (ties broken toward the lexicographically
/// smallest pair), recomputing all scores after every deletion, until the
/// graph falls apart; returns the resulting components. Requires a connected
/// input with at least 2 vertices and 1 edge.
std::vector<std::vector<VertexId>> bisect(const Graph& g, const BisectConfig& cfg = {});

} // namespace blocktest
