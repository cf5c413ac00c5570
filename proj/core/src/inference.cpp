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

#include "blocktest/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blocktest/gen.hpp"
#include "blocktest/parallel.hpp"
#include "blocktest/rng.hpp"

namespace blocktest {

void DcergModel::validate() const {
  if (n < 2) throw std::invalid_argument("model needs n >= 2");
  if (w_hat < 0.0 || !std::isfinite(w_hat)) throw std::invalid_argument("invalid w_hat");
  double s = 0.0;
  for (double t : theta_hat) {
    if (t < 0.0) throw std::invalid_argument("negative theta_hat entry");
    s += t;
  }
  if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("theta_hat must sum to 1");
}

std::vector<double> estimate_theta(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("cannot fit theta on an edgeless graph");
  const double two_m = 2.0 * g.edge_count();
  std::vector<double> theta(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) theta[v] = g.degree(v) / two_m;
  return theta;
}

double estimate_w(const Graph& g, std::span<const double> theta) {
  const int n = g.vertex_count();
  if (static_cast<int>(theta.size()) != n) throw std::invalid_argument("theta length != n");
  double acc = 0.0;
  for (const auto& [u, v] : g.edges()) {
    if (theta[u] <= 0.0 || theta[v] <= 0.0)
      throw std::invalid_argument("zero theta on an incident vertex");
    acc += 2.0 / (theta[u] * theta[v]); // both ordered pairs
  }
  return acc / (static_cast<double>(n) * (n - 1));
}

double expected_dcerg_edges(double w, std::span<const double> theta) {
  const int n = static_cast<int>(theta.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc += std::min(1.0, w * theta[i] * theta[j]);
  return acc;
}

namespace {

double density_w(const Graph& g, std::span<const double> theta) {
  double sq = 0.0;
  for (double t : theta) sq += t * t;
  return 2.0 * g.edge_count() / (1.0 - sq);
}

double calibrated_w(const Graph& g, std::span<const double> theta) {
  const double m = g.edge_count();
  double lo = 0.0;
  double hi = density_w(g, theta);
  // expected_dcerg_edges is nondecreasing in w and saturates at C(n,2);
  // expand hi until the target is bracketed or the curve has saturated.
  while (expected_dcerg_edges(hi, theta) < m - 1e-9) {
    hi *= 2.0;
    if (hi > 1e18) break;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (expected_dcerg_edges(mid, theta) < m) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

DcergModel fit_dcerg(const Graph& g, SurrogateFit fit) {
  DcergModel model;
  model.n = g.vertex_count();
  model.theta_hat = estimate_theta(g);
  switch (fit) {
    case SurrogateFit::MomentRatio: model.w_hat = estimate_w(g, model.theta_hat); break;
    case SurrogateFit::Density: model.w_hat = density_w(g, model.theta_hat); break;
    case SurrogateFit::CalibratedDensity: model.w_hat = calibrated_w(g, model.theta_hat); break;
  }
  return model;
}

double sample_quantile(std::span<const double> sorted, double p) {
  const std::size_t m = sorted.size();
  if (m == 0) throw std::invalid_argument("empty sample");
  const double h = (m + 1) * p;
  if (h <= 1.0) return sorted.front();
  if (h >= static_cast<double>(m)) return sorted.back();
  const std::size_t k = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(k);
  return sorted[k - 1] + frac * (sorted[k] - sorted[k - 1]);
}

double silverman_bandwidth(std::span<const double> samples) {
  const std::size_t m = samples.size();
  if (m < 2) throw std::invalid_argument("bandwidth needs >= 2 samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(m);
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= static_cast<double>(m - 1);
  const double sd = std::sqrt(var);

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = sample_quantile(sorted, 0.75) - sample_quantile(sorted, 0.25);

  double spread = sd;
  if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
  const double h = 0.9 * spread * std::pow(static_cast<double>(m), -0.2);
  if (!(h > 0.0)) throw std::invalid_argument("degenerate sample: zero bandwidth");
  return h;
}

KdeModel kde_fit(std::vector<double> samples) {
  KdeModel model;
  model.bandwidth = silverman_bandwidth(samples);
  model.samples = std::move(samples);
  return model;
}

double kde_tail_prob(const KdeModel& model, double x) {
  const double inv = 1.0 / (model.bandwidth * std::numbers::sqrt2);
  double acc = 0.0;
  for (double s : model.samples) acc += 0.5 * std::erfc((x - s) * inv);
  return acc / static_cast<double>(model.samples.size());
}

void TestConfig::validate() const {
  if (!(significance > 0.0 && significance < 1.0))
    throw std::invalid_argument("significance must lie in (0, 1)");
  if (surrogates < 2) throw std::invalid_argument("need at least 2 surrogates");
  if (max_connect_attempts < 1) throw std::invalid_argument("max_connect_attempts < 1");
  if (max_kde_pairs < 0) throw std::invalid_argument("negative max_kde_pairs");
  if (max_kde_pairs == 1) throw std::invalid_argument("max_kde_pairs must be 0 or >= 2");
  weights.validate();
}

namespace {

Graph draw_surrogate(const DcergModel& model, std::uint64_t seed, bool want_connected,
                     int max_attempts) {
  Rng stream(seed);
  Graph g;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    g = sample_dcerg(model.n, model.w_hat, model.theta_hat, stream.next_u64());
    if (!want_connected || g.is_connected()) return g;
  }
  return g; // none connected within the cap; fall back to the last draw
}

} // namespace

TestResult hypothesis_test(const Graph& g, const TestConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (g.vertex_count() < 2) throw std::invalid_argument("hypothesis test needs n >= 2");
  if (g.edge_count() == 0) throw std::invalid_argument("hypothesis test needs >= 1 edge");

  const int threads = resolve_threads(cfg.threads);
  const int s_count = cfg.surrogates;
  const bool condition = cfg.connected_surrogates && g.is_connected();

  const DcergModel model = fit_dcerg(g, cfg.fit);
  const GraphFeatures observed = compute_features(g, cfg.damping, threads);

  std::vector<GraphFeatures> surrogate_features(s_count);
  parallel_for(s_count, threads, [&](std::size_t i) {
    Graph s = draw_surrogate(model, derive_seed(seed, i), condition, cfg.max_connect_attempts);
    surrogate_features[i] = compute_features(s, cfg.damping, 1);
  });

  double mean = 0.0;
  for (const auto& f : surrogate_features) mean += dissimilarity(observed, f, cfg.weights);
  mean /= static_cast<double>(s_count);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(s_count) * (s_count - 1) / 2);
  for (int i = 0; i < s_count; ++i)
    for (int j = i + 1; j < s_count; ++j) pairs.emplace_back(i, j);
  if (cfg.max_kde_pairs > 0 && pairs.size() > static_cast<std::size_t>(cfg.max_kde_pairs)) {
    // seeded partial shuffle; the kept prefix is sorted back for stable
    // evaluation order
    Rng rng(derive_seed(seed, 0xCAFE));
    for (int i = 0; i < cfg.max_kde_pairs; ++i) {
      const std::size_t j = i + rng.below(pairs.size() - i);
      std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(cfg.max_kde_pairs);
    std::sort(pairs.begin(), pairs.end());
  }
  std::vector<double> null_sample(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    null_sample[p] = dissimilarity(surrogate_features[pairs[p].first],
                                   surrogate_features[pairs[p].second], cfg.weights);
  });

  TestResult result;
  result.mean_dissim = mean;
  result.surrogate_count = s_count;
  const auto [lo, hi] = std::minmax_element(null_sample.begin(), null_sample.end());
  if (*lo == *hi) {
    // No spread to estimate a density from; never split on such evidence.
    result.degenerate = true;
    result.pvalue = 1.0;
    result.reject = false;
    return result;
  }
  const KdeModel kde = kde_fit(std::move(null_sample));
  result.pvalue = kde_tail_prob(kde, mean);
  result.reject = result.pvalue < cfg.significance;
  return result;
}

} // namespace blocktest
