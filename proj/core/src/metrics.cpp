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

#include "blocktest/metrics.hpp"

#include <stdexcept>
#include <vector>

namespace blocktest {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - 1) / 2; }

} // namespace

PairCounts pair_counts(const VertexPartition& a, const VertexPartition& b) {
  const std::size_t n = a.labels.size();
  if (n != b.labels.size()) throw std::invalid_argument("partition sizes differ");
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  a.validate();
  b.validate();

  const int ka = a.community_count();
  const int kb = b.community_count();
  std::vector<std::uint64_t> table(static_cast<std::size_t>(ka) * kb, 0);
  std::vector<std::uint64_t> row(ka, 0), col(kb, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++table[static_cast<std::size_t>(a.labels[v]) * kb + b.labels[v]];
    ++row[a.labels[v]];
    ++col[b.labels[v]];
  }

  PairCounts out;
  std::uint64_t same_a = 0, same_b = 0;
  for (std::uint64_t cell : table) out.q11 += choose2(cell);
  for (std::uint64_t r : row) same_a += choose2(r);
  for (std::uint64_t c : col) same_b += choose2(c);
  out.q10 = same_a - out.q11;
  out.q01 = same_b - out.q11;
  out.q00 = choose2(n) - same_a - same_b + out.q11;
  return out;
}

double adjusted_rand(const VertexPartition& a, const VertexPartition& b) {
  const PairCounts q = pair_counts(a, b);
  const double m = static_cast<double>(q.total());
  const double same_a = static_cast<double>(q.q11 + q.q10);
  const double same_b = static_cast<double>(q.q11 + q.q01);
  const double expected = same_a * same_b / m;
  const double numerator = static_cast<double>(q.q11) - expected;
  const double denominator = 0.5 * (same_a + same_b) - expected;
  if (denominator == 0.0) return 0.0;
  return numerator / denominator;
}

double f1_score(const VertexPartition& a, const VertexPartition& b) {
  const PairCounts q = pair_counts(a, b);
  if (q.q11 == 0) return 0.0;
  const double precision = static_cast<double>(q.q11) / static_cast<double>(q.q11 + q.q01);
  const double recall = static_cast<double>(q.q11) / static_cast<double>(q.q11 + q.q10);
  return 2.0 * precision * recall / (precision + recall);
}

} // namespace blocktest
