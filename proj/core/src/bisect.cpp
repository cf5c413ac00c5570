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

#include "blocktest/bisect.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "blocktest/parallel.hpp"
#include "blocktest/rng.hpp"

namespace blocktest {

WorkGraph::WorkGraph(const Graph& g)
    : adjacency_(g.vertex_count()), edges_(g.edges()), alive_(g.edges().size(), 1),
      alive_count_(g.edge_count()) {
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adjacency_[edges_[e].first].emplace_back(edges_[e].second, e);
    adjacency_[edges_[e].second].emplace_back(edges_[e].first, e);
  }
  for (auto& lst : adjacency_) std::sort(lst.begin(), lst.end());
}

void WorkGraph::remove_edge(int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(edges_.size()))
    throw std::out_of_range("edge index out of range");
  if (!alive_[edge_index]) throw std::invalid_argument("edge already removed");
  alive_[edge_index] = 0;
  --alive_count_;
  auto detach = [&](VertexId from, VertexId to) {
    auto& lst = adjacency_[from];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::make_pair(to, edge_index));
    lst.erase(it);
  };
  detach(edges_[edge_index].first, edges_[edge_index].second);
  detach(edges_[edge_index].second, edges_[edge_index].first);
}

std::vector<std::vector<VertexId>> WorkGraph::connected_components() const {
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
      for (const auto& [v, e] : adjacency_[u]) {
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

void BisectConfig::validate() const {
  if (beta1 < 0.0 || beta2 < 0.0) throw std::invalid_argument("negative beta");
  if (beta1 + beta2 <= 0.0) throw std::invalid_argument("beta1 + beta2 must be positive");
  if (exact_below < 0 || sampled_sources < 1) throw std::invalid_argument("bad sampling config");
}

namespace {

// Brandes' dependency accumulation from one source, specialized to edges.
// Adds this source's contributions into `acc`.
void accumulate_source(const WorkGraph& g, VertexId source, std::vector<double>& acc) {
  const int n = g.vertex_count();
  thread_local std::vector<int> dist, order;
  thread_local std::vector<double> sigma, delta;
  dist.assign(n, -1);
  sigma.assign(n, 0.0);
  delta.assign(n, 0.0);
  order.clear();

  dist[source] = 0;
  sigma[source] = 1.0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (const auto& [v, e] : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
      if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    for (const auto& [u, e] : g.neighbors(v)) {
      if (dist[u] == dist[v] - 1) {
        double c = sigma[u] / sigma[v] * (1.0 + delta[v]);
        acc[e] += c;
        delta[u] += c;
      }
    }
  }
}

std::vector<VertexId> betweenness_sources(const WorkGraph& g, const BisectConfig& cfg) {
  const int n = g.vertex_count();
  std::vector<VertexId> sources(n);
  std::iota(sources.begin(), sources.end(), 0);
  if (n <= cfg.exact_below || cfg.sampled_sources >= n) return sources;
  // deterministic partial Fisher-Yates
  Rng rng(derive_seed(cfg.sample_seed, static_cast<std::uint64_t>(n)));
  for (int i = 0; i < cfg.sampled_sources; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(sources[i], sources[j]);
  }
  sources.resize(cfg.sampled_sources);
  std::sort(sources.begin(), sources.end());
  return sources;
}

} // namespace

std::vector<double> edge_betweenness(const WorkGraph& g, const BisectConfig& cfg) {
  cfg.validate();
  const auto sources = betweenness_sources(g, cfg);
  const int threads = resolve_threads(cfg.threads);
  const std::size_t edge_slots = g.all_edges().size();

  // Fixed-size source chunks merged in index order: bitwise identical
  // results for any thread count.
  constexpr std::size_t kChunk = 32;
  const std::size_t chunks = (sources.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    partial[c].assign(edge_slots, 0.0);
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(sources.size(), lo + kChunk);
    for (std::size_t s = lo; s < hi; ++s) accumulate_source(g, sources[s], partial[c]);
  });

  std::vector<double> betweenness(edge_slots, 0.0);
  for (const auto& part : partial)
    for (std::size_t e = 0; e < edge_slots; ++e) betweenness[e] += part[e];
  // each unordered pair was counted from both sides
  for (auto& b : betweenness) b *= 0.5;
  return betweenness;
}

std::vector<double> edge_betweenness(const Graph& g, const BisectConfig& cfg) {
  return edge_betweenness(WorkGraph(g), cfg);
}

std::vector<double> edge_clustering(const WorkGraph& g) {
  const auto& edges = g.all_edges();
  std::vector<double> out(edges.size(), 0.0);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!g.alive(e)) continue;
    const auto& [u, v] = edges[e];
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) ++i;
      else if (a[i].first > b[j].first) ++j;
      else { ++common; ++i; ++j; }
    }
    const int denom = std::min(g.degree(u), g.degree(v)) - 1;
    out[e] = denom > 0 ? static_cast<double>(common) / denom : 0.0;
  }
  return out;
}

std::vector<double> edge_clustering(const Graph& g) {
  return edge_clustering(WorkGraph(g));
}

std::vector<double> inter_community_scores(const WorkGraph& g, const BisectConfig& cfg) {
  cfg.validate();
  if (g.alive_edge_count() == 0) throw std::invalid_argument("no edges to score");
  auto betweenness = edge_betweenness(g, cfg);
  auto clustering = edge_clustering(g);

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (int e = 0; e < static_cast<int>(betweenness.size()); ++e) {
    if (!g.alive(e)) continue;
    if (first) { lo = hi = betweenness[e]; first = false; }
    else { lo = std::min(lo, betweenness[e]); hi = std::max(hi, betweenness[e]); }
  }
  const double span = hi - lo;

  std::vector<double> scores(betweenness.size(), 0.0);
  for (int e = 0; e < static_cast<int>(betweenness.size()); ++e) {
    if (!g.alive(e)) continue;
    const double normalized = span > 0.0 ? (betweenness[e] - lo) / span : 0.0;
    scores[e] = cfg.beta1 * normalized - cfg.beta2 * clustering[e];
  }
  return scores;
}

std::vector<std::vector<VertexId>> bisect(const Graph& g, const BisectConfig& cfg) {
  cfg.validate();
  if (g.vertex_count() < 2) throw std::invalid_argument("bisect needs >= 2 vertices");
  if (g.edge_count() == 0) throw std::invalid_argument("bisect needs >= 1 edge");
  if (!g.is_connected()) throw std::invalid_argument("bisect expects a connected graph");

  WorkGraph work(g);
  while (true) {
    auto scores = inter_community_scores(work, cfg);
    int best = -1;
    for (int e = 0; e < static_cast<int>(scores.size()); ++e) {
      if (!work.alive(e)) continue;
      if (best < 0 || scores[e] > scores[best]) best = e; // first (lex-least) wins ties
    }
    work.remove_edge(best);
    auto components = work.connected_components();
    if (components.size() >= 2) return components;
  }
}

} // namespace blocktest
