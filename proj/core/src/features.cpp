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

#include "blocktest/features.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "blocktest/parallel.hpp"

namespace blocktest {

double ProbVec::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

void ProbVec::validate() const {
  for (double v : values)
    if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("negative ProbVec entry");
  if (std::abs(sum() - 1.0) > 1e-9) throw std::invalid_argument("ProbVec does not sum to 1");
}

double DampingPolicy::alpha_for(const Graph& g) const {
  int k_max = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) k_max = std::max(k_max, g.degree(v));
  if (k_max == 0) return 0.0; // empty adjacency, the fixed point is x = 1
  return spectral_fraction / static_cast<double>(k_max);
}

ProbVec distance_distribution(const Graph& g, int threads) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("distance distribution needs n >= 2");

  // Per-source BFS histograms are integer counts, so chunked accumulation is
  // exact and order-free.
  threads = resolve_threads(threads);
  const int chunks = std::min(n, std::max(1, threads * 4));
  std::vector<std::vector<long long>> hist(chunks, std::vector<long long>(n, 0));
  std::vector<long long> unreachable(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::vector<int> dist;
    std::vector<VertexId> queue;
    const int lo = static_cast<int>(c) * n / chunks;
    const int hi = static_cast<int>(c + 1) * n / chunks;
    for (VertexId s = lo; s < hi; ++s) {
      g.bfs_distances_into(s, dist, queue);
      for (int d : dist) {
        if (d > 0) ++hist[c][d - 1];
        else if (d == kUnreachable) ++unreachable[c];
      }
    }
  });

  std::vector<long long> total(n, 0);
  long long total_unreachable = 0;
  for (int c = 0; c < chunks; ++c) {
    for (int k = 0; k < n; ++k) total[k] += hist[c][k];
    total_unreachable += unreachable[c];
  }

  int diameter = 0;
  for (int k = 0; k < n; ++k)
    if (total[k] > 0) diameter = k + 1;

  const double pairs = static_cast<double>(n) * (n - 1);
  ProbVec out;
  out.values.reserve(diameter + 1);
  for (int k = 0; k < diameter; ++k) out.values.push_back(total[k] / pairs);
  out.values.push_back(total_unreachable / pairs);
  return out;
}

std::vector<double> clustering_coefficients(const Graph& g) {
  const int n = g.vertex_count();
  auto triangles = g.triangle_count_per_vertex();
  std::vector<double> c(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    long long k = g.degree(v);
    if (k >= 2) c[v] = 2.0 * static_cast<double>(triangles[v]) / (static_cast<double>(k) * (k - 1));
  }
  return c;
}

ProbVec clustering_distribution(const Graph& g) {
  const int n = g.vertex_count();
  auto c = clustering_coefficients(g);
  std::sort(c.begin(), c.end());
  ProbVec out;
  out.values.reserve(n + 1);
  double total = 0.0;
  for (double v : c) {
    out.values.push_back(v / n);
    total += v;
  }
  out.values.push_back((n - total) / n);
  return out;
}

std::vector<double> alpha_centrality(const Graph& g, double alpha) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("alpha centrality of empty graph");
  int k_max = 0;
  for (VertexId v = 0; v < n; ++v) k_max = std::max(k_max, g.degree(v));
  if (k_max > 0 && !(alpha > 0.0 && alpha * k_max < 1.0))
    throw std::invalid_argument("alpha outside (0, 1/k_max)");
  if (k_max == 0 && alpha != 0.0 && !(alpha >= 0.0))
    throw std::invalid_argument("invalid alpha");

  std::vector<double> x(n, 1.0), next(n, 1.0);
  for (int iter = 0; iter < 100000; ++iter) {
    double delta = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      double acc = 0.0;
      for (VertexId u : g.neighbors(v)) acc += x[u];
      next[v] = 1.0 + alpha * acc;
      delta = std::max(delta, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (delta < 1e-10) return x;
  }
  throw std::runtime_error("alpha centrality did not converge");
}

ProbVec centrality_distribution(const Graph& g, double alpha) {
  const int n = g.vertex_count();
  auto x = alpha_centrality(g, alpha);
  double peak = *std::max_element(x.begin(), x.end());
  for (auto& v : x) v /= peak;
  std::sort(x.begin(), x.end());
  ProbVec out;
  out.values.reserve(n + 1);
  double total = 0.0;
  for (double v : x) {
    out.values.push_back(v / n);
    total += v;
  }
  out.values.push_back((n - total) / n);
  return out;
}

GraphFeatures compute_features(const Graph& g, const DampingPolicy& damping, int threads) {
  GraphFeatures f;
  f.distance = distance_distribution(g, threads);
  f.clustering = clustering_distribution(g);
  f.centrality = centrality_distribution(g, damping.alpha_for(g));
  return f;
}

} // namespace blocktest
