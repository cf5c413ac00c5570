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

#include "blocktest/bisect.hpp"
#include "blocktest/graph.hpp"
#include "blocktest/inference.hpp"

namespace blocktest {

struct DetectConfig {
  TestConfig test{};
  BisectConfig split{};
  /// Components smaller than this are taken as communities without testing.
  int min_test_size = 4;
  /// Hard recursion cap.
  int max_depth = 32;
  /// Halve the per-test significance at each recursion level (a
  /// Bonferroni-style correction for the up-to-2^depth tests per level).
  /// Off by default: the raw threshold applies at every level.
  bool bonferroni_by_depth = false;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class NodeOutcome {
  SplitComponents,    // input was already disconnected
  Rejected,           // null rejected, children are the split parts
  Accepted,           // null accepted, node is a community
  AcceptedDegenerate, // null kept because the surrogate ensemble had no spread
  AcceptedSmall,      // below min_test_size
  AcceptedDepthCap,   // max_depth reached
};

const char* to_string(NodeOutcome outcome);

/// One node of the recursion record.
struct DetectNode {
  std::vector<VertexId> vertices; // original ids, sorted
  int depth = 0;
  NodeOutcome outcome = NodeOutcome::Accepted;
  bool has_test = false;
  TestResult test{};
  std::vector<int> children; // indices into DetectionResult::tree
};

struct DetectionResult {
  VertexPartition partition;
  std::vector<DetectNode> tree; // node 0 is the root
  std::vector<int> leaves;      // tree indices in community-label order

  int community_count() const { return static_cast<int>(leaves.size()); }
};

/// Recursive driver: test each connected piece against the fitted null,
/// split rejected pieces with the betweenness/clustering criterion, recurse,
/// and label the surviving leaves (ordered by smallest contained vertex id).
/// Node seeds are derived from the parent seed and the piece's sorted
/// vertex-id fingerprint, so results do not depend on traversal order.
DetectionResult detect_communities(const Graph& g, const DetectConfig& cfg = {});

} // namespace blocktest
