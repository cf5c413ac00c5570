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

#include "blocktest/features.hpp"
#include "blocktest/graph.hpp"

namespace blocktest {

/// Term weights of the dissimilarity; must sum to 1.
struct DissimWeights {
  double distance = 1.0 / 3.0;
  double clustering = 1.0 / 3.0;
  double centrality = 1.0 / 3.0;

  void validate() const;
};

/// Jensen-Shannon divergence between two discrete distributions; the shorter
/// vector is zero-padded. Symmetric, zero iff equal, at most ln 2.
double jsd(const ProbVec& p, const ProbVec& q);

/// Graph dissimilarity in [0, 1): the weighted sum of sqrt(JSD/ln 2) over
/// the distance, clustering and centrality distributions.
double dissimilarity(const GraphFeatures& a, const GraphFeatures& b,
                     const DissimWeights& weights = {});

double dissimilarity(const Graph& a, const Graph& b, const DissimWeights& weights = {},
                     const DampingPolicy& damping = {});

} // namespace blocktest
