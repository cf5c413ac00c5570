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
#include <span>
#include <utility>
#include <vector>

namespace blocktest {

using VertexId = int;
using EdgePair = std::pair<VertexId, VertexId>;

/// Marker used in distance vectors for vertices that cannot be reached.
inline constexpr int kUnreachable = -1;

/// Immutable undirected simple graph. Vertices are dense ids 0..n-1,
/// neighbor lists are sorted, the edge list holds each edge once as
/// (i, j) with i < j in lexicographic order. Adjacency lives in one
/// offsets+targets array pair, which keeps the all-pairs BFS loops on
/// contiguous memory.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Throws std::invalid_argument
  /// on out-of-range endpoints, self-loops or duplicate edges.
  Graph(int vertex_count, std::span<const EdgePair> edges);

  /// Same, but silently drops self-loops and duplicate pairs first.
  /// Used by the random generators whose draw may collide.
  static Graph from_multiset(int vertex_count, std::vector<EdgePair> edges);

  int vertex_count() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  const std::vector<EdgePair>& edges() const { return edges_; }

  bool has_edge(VertexId u, VertexId v) const;

  /// Hop distances from `source`; unreachable vertices get kUnreachable.
  std::vector<int> bfs_distances(VertexId source) const;

  /// In-place variant for tight loops: `dist` and `queue` are reused
  /// scratch buffers of size n.
  void bfs_distances_into(VertexId source, std::vector<int>& dist,
                          std::vector<VertexId>& queue) const;

  /// Connected components as sorted vertex sets, ordered by smallest member.
  std::vector<std::vector<VertexId>> connected_components() const;

  bool is_connected() const;

  /// Number of common neighbors per edge, aligned with edges().
  std::vector<int> triangle_count_per_edge() const;

  /// Triangles through each vertex.
  std::vector<long long> triangle_count_per_vertex() const;

private:
  void check_vertex(VertexId v) const;
  void build_adjacency(int vertex_count);

  std::vector<int> offsets_;       // n + 1 prefix offsets into targets_
  std::vector<VertexId> targets_;  // 2m neighbor ids, sorted per vertex
  std::vector<EdgePair> edges_;
};

/// Result of restricting a graph to a vertex subset. `to_old[new_id]` gives
/// the original id; `to_new[old_id]` gives the new id or -1 when excluded.
/// The relabeling preserves ascending id order.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_old;
  std::vector<VertexId> to_new;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Assignment of every vertex to exactly one community, labels 0..K-1.
struct VertexPartition {
  std::vector<int> labels;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int community_count() const;

  /// Remaps arbitrary nonnegative labels to contiguous 0..K-1 in order of
  /// first appearance.
  static VertexPartition normalized(std::vector<int> raw_labels);

  /// Throws std::invalid_argument unless labels are exactly 0..K-1.
  void validate() const;
};

} // namespace blocktest
