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

#include <cmath>
#include <vector>

#include "blocktest/features.hpp"
#include "blocktest/graph.hpp"
#include "blocktest/rng.hpp"

namespace blocktest::testutil {

inline Graph path_graph(int n) {
  std::vector<EdgePair> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<EdgePair> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<EdgePair> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<EdgePair> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles_bridge() {
  return Graph(6, std::vector<EdgePair>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

/// Seeded Erdos-Renyi-style graph for property tests.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<EdgePair> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Reorders vertices by a seeded permutation.
inline Graph relabeled(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<EdgePair> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(n, e);
}

/// Jensen-Shannon divergence through the mixture form
/// 0.5*KL(p||m) + 0.5*KL(q||m), m = (p+q)/2; independent of the
/// implementation's formula.
inline double jsd_mixture_oracle(const ProbVec& p, const ProbVec& q) {
  const std::size_t len = std::max(p.values.size(), q.values.size());
  auto at = [](const ProbVec& v, std::size_t i) {
    return i < v.values.size() ? v.values[i] : 0.0;
  };
  double kl_p = 0.0, kl_q = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = at(p, i), b = at(q, i), m = 0.5 * (a + b);
    if (a > 0.0) kl_p += a * std::log(a / m);
    if (b > 0.0) kl_q += b * std::log(b / m);
  }
  return 0.5 * kl_p + 0.5 * kl_q;
}

} // namespace blocktest::testutil
