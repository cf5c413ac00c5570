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
#include <vector>

#include "blocktest/dissim.hpp"
#include "blocktest/graph.hpp"

namespace blocktest {

/// How the null connecting parameter handed to the surrogate sampler is
/// obtained from the graph under test.
///
///  - MomentRatio: the per-pair moment estimator, the average of
///    a_ij/(theta_i*theta_j) over ordered pairs. On hub-heavy graphs the
///    implied expected edge count can fall far below the observed one
///    (pairs whose probability clamps at 1 are underweighted).
///  - Density: 2m / (1 - sum theta_i^2); expected surrogate edge count
///    equals m before probability clamping.
///  - CalibratedDensity (default): solves sum_{i<j} min(1, w*theta_i*theta_j)
///    = m; expected surrogate edge count equals m exactly.
///
/// All three coincide on regular graphs and converge to the true w on data
/// actually drawn from the null model.
enum class SurrogateFit { MomentRatio, Density, CalibratedDensity };

/// Fitted one-block null model.
struct DcergModel {
  int n = 0;
  double w_hat = 0.0;
  std::vector<double> theta_hat; // sums to 1

  void validate() const;
};

/// Degree-share estimator: theta_i = k_i / (2m). Requires at least one edge.
std::vector<double> estimate_theta(const Graph& g);

/// Per-pair moment estimator of the connecting parameter:
/// sum over ordered pairs of a_ij/(theta_i*theta_j), divided by N(N-1).
double estimate_w(const Graph& g, std::span<const double> theta);

/// Fits the null model with the chosen density rule for w_hat.
DcergModel fit_dcerg(const Graph& g, SurrogateFit fit = SurrogateFit::CalibratedDensity);

/// Expected edge count of the sampler at the given parameters,
/// sum_{i<j} min(1, w*theta_i*theta_j).
double expected_dcerg_edges(double w, std::span<const double> theta);

/// Gaussian-kernel density model over a sample.
struct KdeModel {
  std::vector<double> samples;
  double bandwidth = 0.0;
};

/// Quantile with the (m+1)p linear-interpolation convention, clamped to the
/// sample range.
double sample_quantile(std::span<const double> sorted, double p);

/// Silverman's rule: 0.9 * min(sd, IQR/1.34) * m^(-1/5), sd with m-1
/// denominator. Throws std::invalid_argument when the value would be zero
/// (fewer than 2 samples or all samples identical).
double silverman_bandwidth(std::span<const double> samples);

KdeModel kde_fit(std::vector<double> samples);

/// Upper tail P(X > x) of the fitted density.
double kde_tail_prob(const KdeModel& model, double x);

struct TestConfig {
  double significance = 0.05;
  int surrogates = 50;
  DissimWeights weights{};
  DampingPolicy damping{};
  SurrogateFit fit = SurrogateFit::CalibratedDensity;
  /// Redraw surrogates that fail to come out connected, up to
  /// max_connect_attempts per surrogate; applied only when the graph under
  /// test is itself connected. Off: the null ensemble keeps fragmented
  /// draws, and their unreachable-pair mass dominates the distance-term
  /// spread on small graphs.
  bool connected_surrogates = true;
  int max_connect_attempts = 100;
  /// Cap on the pairwise dissimilarities entering the KDE; 0 = use all
  /// S(S-1)/2. A capped sample is drawn as a seeded subset.
  int max_kde_pairs = 0;
  int threads = 0; // 0 = BLOCKTEST_THREADS or hardware

  void validate() const;
};

struct TestResult {
  double mean_dissim = 0.0;  // mean over D(G, surrogate_i)
  double pvalue = 1.0;       // P(null dissimilarity > mean_dissim)
  bool reject = false;       // pvalue < significance
  int surrogate_count = 0;
  bool degenerate = false;   // all pairwise dissimilarities identical
};

/// Two-sided machinery of the test's first stage: fit the null model,
/// draw surrogates with seeds derived from `seed`, average D(G, G_i),
/// estimate the null dissimilarity density from all pairwise D(G_i, G_j),
/// and return the upper-tail p-value. Deterministic in (g, cfg, seed) for
/// any thread count.
TestResult hypothesis_test(const Graph& g, const TestConfig& cfg, std::uint64_t seed);

} // namespace blocktest
