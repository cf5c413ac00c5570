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

#include <vector>

#include "blocktest/graph.hpp"

namespace blocktest {

/// Finite discrete probability distribution: nonnegative entries summing
/// to 1 (within 1e-9).
struct ProbVec {
  std::vector<double> values;

  double sum() const;
  /// Throws std::invalid_argument on negative entries or sum far from 1.
  void validate() const;
};

/// Per-graph damping rule for the centrality fixed point x = alpha*A*x + 1.
/// alpha = spectral_fraction / k_max keeps the iteration contractive without
/// any eigenvalue computation (the spectral radius of A is at most k_max).
struct DampingPolicy {
  double spectral_fraction = 0.95;

  double alpha_for(const Graph& g) const;
};

/// Vertex distance distribution: entry k-1 is the share of ordered vertex
/// pairs at hop distance k, for k = 1..diameter; one trailing entry carries
/// the share of ordered pairs with no connecting path. Requires n >= 2.
ProbVec distance_distribution(const Graph& g, int threads = 1);

/// Local clustering coefficient per vertex, c = 2*tri/(k*(k-1)); zero when
/// the degree is below 2.
std::vector<double> clustering_coefficients(const Graph& g);

/// Sorted clustering coefficients over N plus the mass remainder
/// (N - sum c_i)/N; length N+1, sums to 1.
ProbVec clustering_distribution(const Graph& g);

/// Fixed point of x = alpha*A*x + 1 from x = 1, sup-norm tolerance 1e-10.
/// Requires a nonempty graph and alpha*k_max < 1; every entry is >= 1.
std::vector<double> alpha_centrality(const Graph& g, double alpha);

/// Centralities rescaled by their maximum, sorted ascending, over N, plus
/// the mass remainder; length N+1, sums to 1.
ProbVec centrality_distribution(const Graph& g, double alpha);

/// The three structural distributions of one graph, computed together so
/// repeated dissimilarity evaluations can reuse them.
struct GraphFeatures {
  ProbVec distance;
  ProbVec clustering;
  ProbVec centrality;
};

GraphFeatures compute_features(const Graph& g, const DampingPolicy& damping = {},
                               int threads = 1);

} // namespace blocktest
