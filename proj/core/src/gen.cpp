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

#include "blocktest/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blocktest/rng.hpp"

namespace blocktest {

int DcsbmSpec::total_vertices() const {
  int n = 0;
  for (int s : block_sizes) n += s;
  return n;
}

int DcsbmSpec::block_of(VertexId v) const {
  int acc = 0;
  for (std::size_t s = 0; s < block_sizes.size(); ++s) {
    acc += block_sizes[s];
    if (v < acc) return static_cast<int>(s);
  }
  throw std::out_of_range("vertex beyond block ranges");
}

void DcsbmSpec::validate() const {
  if (block_sizes.empty()) throw std::invalid_argument("no blocks");
  for (int s : block_sizes)
    if (s <= 0) throw std::invalid_argument("non-positive block size");
  const std::size_t k = block_sizes.size();
  if (w.size() != k) throw std::invalid_argument("w row count != K");
  for (const auto& row : w) {
    if (row.size() != k) throw std::invalid_argument("w column count != K");
    for (double x : row)
      if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("invalid w entry");
  }
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = s + 1; t < k; ++t)
      if (w[s][t] != w[t][s]) throw std::invalid_argument("w not symmetric");
  if (static_cast<int>(theta.size()) != total_vertices())
    throw std::invalid_argument("theta length != vertex count");
  for (double t : theta)
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("theta entries must be positive");
}

DcsbmSpec DcsbmSpec::uniform(std::vector<int> block_sizes, double w_in, double w_out,
                             std::vector<double> theta) {
  DcsbmSpec spec;
  const std::size_t k = block_sizes.size();
  spec.block_sizes = std::move(block_sizes);
  spec.w.assign(k, std::vector<double>(k, w_out));
  for (std::size_t s = 0; s < k; ++s) spec.w[s][s] = w_in;
  spec.theta = std::move(theta);
  spec.validate();
  return spec;
}

std::vector<double> sample_theta_adjusted_halfnormal(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  const double offset = 1.0 - 1.0 / std::sqrt(2.0 * std::numbers::pi);
  Rng rng(seed);
  std::vector<double> theta(count);
  for (auto& t : theta) t = std::abs(rng.normal(0.0, 0.5)) + offset;
  return theta;
}

namespace {

// Cumulative theta weights of one contiguous block, for endpoint selection.
struct BlockWeights {
  int start = 0;
  std::vector<double> cumulative;

  VertexId pick(Rng& rng) const {
    double u = rng.uniform() * cumulative.back();
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return start + static_cast<VertexId>(it - cumulative.begin());
  }
};

} // namespace

DcsbmSample sample_dcsbm(const DcsbmSpec& spec, std::uint64_t seed) {
  spec.validate();
  const int k = spec.block_count();
  const int n = spec.total_vertices();

  std::vector<BlockWeights> blocks(k);
  {
    int start = 0;
    for (int s = 0; s < k; ++s) {
      blocks[s].start = start;
      blocks[s].cumulative.resize(spec.block_sizes[s]);
      double acc = 0.0;
      for (int i = 0; i < spec.block_sizes[s]; ++i) {
        acc += spec.theta[start + i];
        blocks[s].cumulative[i] = acc;
      }
      start += spec.block_sizes[s];
    }
  }

  // One derived stream per block pair: draws inside a block do not depend
  // on the rates of the other pairs, which keeps parameter sweeps on
  // matched noise.
  std::vector<EdgePair> draws;
  for (int s = 0; s < k; ++s) {
    for (int t = s; t < k; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s) * k + t));
      double rate = (s == t)
                        ? spec.w[s][s] * static_cast<double>(spec.block_sizes[s]) *
                              static_cast<double>(spec.block_sizes[s]) / 2.0
                        : spec.w[s][t] * static_cast<double>(spec.block_sizes[s]) *
                              static_cast<double>(spec.block_sizes[t]);
      long long count = rng.poisson(rate);
      for (long long e = 0; e < count; ++e) {
        VertexId u = blocks[s].pick(rng);
        VertexId v = blocks[t].pick(rng);
        draws.emplace_back(u, v);
      }
    }
  }

  DcsbmSample out{Graph::from_multiset(n, std::move(draws)), {}};
  out.truth.labels.resize(n);
  {
    int start = 0;
    for (int s = 0; s < k; ++s) {
      std::fill(out.truth.labels.begin() + start,
                out.truth.labels.begin() + start + spec.block_sizes[s], s);
      start += spec.block_sizes[s];
    }
  }
  return out;
}

Graph sample_dcerg(int n, double w, std::span<const double> theta, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_dcerg needs n >= 2");
  if (static_cast<int>(theta.size()) != n)
    throw std::invalid_argument("theta length != n");
  if (w < 0.0) throw std::invalid_argument("negative w");
  Rng rng(seed);
  std::vector<EdgePair> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      double p = std::min(1.0, w * theta[i] * theta[j]);
      // one uniform per pair keeps the stream layout fixed
      double u = rng.uniform();
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

} // namespace blocktest
