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

#include "blocktest/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace blocktest {

namespace {

EdgePair normalize(EdgePair e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

} // namespace

Graph::Graph(int vertex_count, std::span<const EdgePair> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edges.size());
  for (EdgePair e : edges) {
    if (e.first < 0 || e.first >= vertex_count || e.second < 0 || e.second >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    edges_.push_back(normalize(e));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  build_adjacency(vertex_count);
}

void Graph::build_adjacency(int vertex_count) {
  offsets_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  // edges_ is sorted, so filling forward leaves every slice sorted except
  // for the second endpoints, which a per-slice sort fixes
  for (const auto& [u, v] : edges_) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v)
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
}

Graph Graph::from_multiset(int vertex_count, std::vector<EdgePair> edges) {
  std::vector<EdgePair> clean;
  clean.reserve(edges.size());
  for (EdgePair e : edges)
    if (e.first != e.second) clean.push_back(normalize(e));
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  return Graph(vertex_count, clean);
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto lst = neighbors(u);
  check_vertex(v);
  return std::binary_search(lst.begin(), lst.end(), v);
}

void Graph::bfs_distances_into(VertexId source, std::vector<int>& dist,
                               std::vector<VertexId>& queue) const {
  check_vertex(source);
  const int n = vertex_count();
  dist.assign(n, kUnreachable);
  queue.resize(n);
  dist[source] = 0;
  queue[0] = source;

  // Level-synchronous traversal, switching to bottom-up sweeps once the
  // frontier is large relative to the unvisited remainder (these graphs
  // have tiny diameters with one huge middle level).
  std::size_t frontier_begin = 0, frontier_end = 1;
  int level = 0;
  std::size_t unvisited = static_cast<std::size_t>(n) - 1;
  bool bottom_up = false;

  while (unvisited > 0) {
    std::size_t found = 0;
    if (!bottom_up && (frontier_end - frontier_begin) * 8 >= unvisited) bottom_up = true;

    if (bottom_up) {
      for (VertexId v = 0; v < n; ++v) {
        if (dist[v] != kUnreachable) continue;
        const int end = offsets_[v + 1];
        for (int i = offsets_[v]; i < end; ++i) {
          if (dist[targets_[i]] == level) {
            dist[v] = level + 1;
            ++found;
            break;
          }
        }
      }
      if (found == 0) break;
    } else {
      std::size_t tail = frontier_end;
      for (std::size_t q = frontier_begin; q < frontier_end; ++q) {
        const VertexId u = queue[q];
        const int end = offsets_[u + 1];
        for (int i = offsets_[u]; i < end; ++i) {
          const VertexId v = targets_[i];
          if (dist[v] == kUnreachable) {
            dist[v] = level + 1;
            queue[tail++] = v;
          }
        }
      }
      found = tail - frontier_end;
      if (found == 0) break;
      frontier_begin = frontier_end;
      frontier_end = tail;
    }
    unvisited -= found;
    ++level;
  }
}

std::vector<int> Graph::bfs_distances(VertexId source) const {
  std::vector<int> dist;
  std::vector<VertexId> queue;
  bfs_distances_into(source, dist, queue);
  return dist;
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
  std::vector<std::vector<VertexId>> components;
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (VertexId v : neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::vector<int> Graph::triangle_count_per_edge() const {
  std::vector<int> counts(edges_.size(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto a = neighbors(edges_[e].first);
    auto b = neighbors(edges_[e].second);
    // sorted-list intersection
    std::size_t i = 0, j = 0;
    int common = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (a[i] > b[j]) ++j;
      else { ++common; ++i; ++j; }
    }
    counts[e] = common;
  }
  return counts;
}

std::vector<long long> Graph::triangle_count_per_vertex() const {
  // Each triangle {i,j,k} is seen by vertex i on edges (i,j) and (i,k),
  // so summing per-edge counts over incident edges double-counts.
  std::vector<long long> twice(vertex_count(), 0);
  auto per_edge = triangle_count_per_edge();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    twice[edges_[e].first] += per_edge[e];
    twice[edges_[e].second] += per_edge[e];
  }
  for (auto& t : twice) t /= 2;
  return twice;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set");
  InducedSubgraph out;
  out.to_old.assign(vertices.begin(), vertices.end());
  std::sort(out.to_old.begin(), out.to_old.end());
  if (std::adjacent_find(out.to_old.begin(), out.to_old.end()) != out.to_old.end())
    throw std::invalid_argument("duplicate vertex in subset");
  out.to_new.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_old.size(); ++i) {
    VertexId v = out.to_old[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("subset vertex out of range");
    out.to_new[v] = static_cast<VertexId>(i);
  }
  std::vector<EdgePair> edges;
  for (const auto& [u, v] : g.edges()) {
    VertexId nu = out.to_new[u], nv = out.to_new[v];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  out.graph = Graph(static_cast<int>(out.to_old.size()), edges);
  return out;
}

int VertexPartition::community_count() const {
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  return k;
}

VertexPartition VertexPartition::normalized(std::vector<int> raw_labels) {
  std::vector<int> remap;
  int next = 0;
  VertexPartition p;
  p.labels.reserve(raw_labels.size());
  for (int raw : raw_labels) {
    if (raw < 0) throw std::invalid_argument("negative community label");
    if (raw >= static_cast<int>(remap.size())) remap.resize(raw + 1, -1);
    if (remap[raw] < 0) remap[raw] = next++;
    p.labels.push_back(remap[raw]);
  }
  return p;
}

void VertexPartition::validate() const {
  int k = community_count();
  std::vector<char> present(k, 0);
  for (int l : labels) {
    if (l < 0 || l >= k) throw std::invalid_argument("label out of range");
    present[l] = 1;
  }
  for (int c = 0; c < k; ++c)
    if (!present[c]) throw std::invalid_argument("label set not contiguous");
}

} // namespace blocktest
