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

#include "blocktest/graph.hpp"

namespace blocktest {

/// Unordered vertex pairs classified by co-membership in two partitions:
/// together in both (q11), together only in the first (q10), only in the
/// second (q01), in neither (q00). The four sum to n(n-1)/2.
struct PairCounts {
  std::uint64_t q11 = 0;
  std::uint64_t q10 = 0;
  std::uint64_t q01 = 0;
  std::uint64_t q00 = 0;

  std::uint64_t total() const { return q11 + q10 + q01 + q00; }
};

/// Computed via the contingency table; identical to the O(n^2) pair scan.
PairCounts pair_counts(const VertexPartition& a, const VertexPartition& b);

/// Pair-counting adjusted Rand index; 1 for identical partitions, 0 when
/// both numerator and denominator vanish (e.g. two all-singleton
/// partitions).
double adjusted_rand(const VertexPartition& a, const VertexPartition& b);

/// Pair-counting F1: harmonic mean of q11/(q11+q01) and q11/(q11+q10);
/// 0 when no pair is co-classified in both.
double f1_score(const VertexPartition& a, const VertexPartition& b);

} // namespace blocktest
