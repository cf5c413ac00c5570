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

#include "blocktest/dissim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blocktest {

void DissimWeights::validate() const {
  if (distance < 0.0 || clustering < 0.0 || centrality < 0.0)
    throw std::invalid_argument("negative dissimilarity weight");
  if (std::abs(distance + clustering + centrality - 1.0) > 1e-12)
    throw std::invalid_argument("dissimilarity weights must sum to 1");
}

double jsd(const ProbVec& p, const ProbVec& q) {
  const std::size_t len = std::max(p.values.size(), q.values.size());
  // separate accumulators keep jsd(p, q) bitwise equal to jsd(q, p)
  double acc_p = 0.0, acc_q = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = i < p.values.size() ? p.values[i] : 0.0;
    const double b = i < q.values.size() ? q.values[i] : 0.0;
    const double m = a + b;
    if (a > 0.0) acc_p += 0.5 * a * std::log(2.0 * a / m);
    if (b > 0.0) acc_q += 0.5 * b * std::log(2.0 * b / m);
  }
  // clamp tiny negative round-off
  return std::max(acc_p + acc_q, 0.0);
}

double dissimilarity(const GraphFeatures& a, const GraphFeatures& b,
                     const DissimWeights& weights) {
  weights.validate();
  const double ln2 = std::numbers::ln2;
  double d = 0.0;
  if (weights.distance > 0.0) d += weights.distance * std::sqrt(jsd(a.distance, b.distance) / ln2);
  if (weights.clustering > 0.0)
    d += weights.clustering * std::sqrt(jsd(a.clustering, b.clustering) / ln2);
  if (weights.centrality > 0.0)
    d += weights.centrality * std::sqrt(jsd(a.centrality, b.centrality) / ln2);
  return d;
}

double dissimilarity(const Graph& a, const Graph& b, const DissimWeights& weights,
                     const DampingPolicy& damping) {
  if (a.vertex_count() == 0 || b.vertex_count() == 0)
    throw std::invalid_argument("dissimilarity of empty graph");
  return dissimilarity(compute_features(a, damping), compute_features(b, damping), weights);
}

} // namespace blocktest
