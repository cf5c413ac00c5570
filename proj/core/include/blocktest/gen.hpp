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
#include <vector>

#include "blocktest/graph.hpp"

namespace blocktest {

/// Parameters of a degree-corrected block model with fixed block sizes.
/// Vertices are assigned to blocks by contiguous ranges: block 0 holds ids
/// [0, n_0), block 1 holds [n_0, n_0+n_1), and so on.
struct DcsbmSpec {
  std::vector<int> block_sizes;          // n_s > 0
  std::vector<std::vector<double>> w;    // K x K symmetric, >= 0
  std::vector<double> theta;             // length sum(n_s), > 0

  int total_vertices() const;
  int block_count() const { return static_cast<int>(block_sizes.size()); }
  int block_of(VertexId v) const;

  /// Throws std::invalid_argument when the invariants above fail.
  void validate() const;

  /// Balanced or unbalanced two-parameter setup: w_ss = w_in, w_st = w_out.
  static DcsbmSpec uniform(std::vector<int> block_sizes, double w_in, double w_out,
                           std::vector<double> theta);
};

/// Draws degree propensities from |Normal(0, sd=0.5)| + 1 - 1/sqrt(2*pi).
/// The offset makes the mean exactly 1; the minimum possible value is
/// 1 - 1/sqrt(2*pi) ~= 0.601.
std::vector<double> sample_theta_adjusted_halfnormal(int count, std::uint64_t seed);

struct DcsbmSample {
  Graph graph;
  VertexPartition truth;
};

/// Samples a simple graph from the block model: a Poisson number of edges
/// per block pair (rate w_st*n_s*n_t across blocks, w_ss*n_s^2/2 within),
/// each endpoint chosen inside its block with probability theta_i over the
/// block total. Self-loops and duplicate draws are discarded.
DcsbmSample sample_dcsbm(const DcsbmSpec& spec, std::uint64_t seed);

/// Samples the one-block null model: every pair {i, j} is an edge
/// independently with probability min(1, w*theta_i*theta_j). Expects theta
/// normalized to sum 1; requires n >= 2.
Graph sample_dcerg(int n, double w, std::span<const double> theta, std::uint64_t seed);

} // namespace blocktest
