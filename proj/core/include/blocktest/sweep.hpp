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
#include <functional>
#include <string>
#include <vector>

#include "blocktest/inference.hpp"

namespace blocktest {

/// The three two-block benchmark sweeps. In every case w_in = 0.2 and the
/// degree propensities are drawn fresh per run from the adjusted
/// half-normal.
///
///  - BalancedW12: equal blocks, the cross-block parameter w_12 runs over
///    the grid (default 0.02..0.2 step 0.02).
///  - UnbalancedN1: w_12 = 0.02 fixed, the first block size runs over the
///    grid (default 50..100 step 10); the second block holds the rest.
///  - UnbalancedW12: first block fixed at 100 vertices, w_12 runs over the
///    grid.
enum class SweepExperiment { BalancedW12, UnbalancedN1, UnbalancedW12 };

SweepExperiment parse_experiment(const std::string& name);
const char* to_string(SweepExperiment e);

struct SweepConfig {
  SweepExperiment experiment = SweepExperiment::BalancedW12;
  int runs = 10;
  int n = 0;            // total vertices; 0 = 1000
  double w_in = 0.2;
  std::vector<double> grid; // empty = experiment default
  std::uint64_t seed = 0;
  TestConfig test{};

  void validate() const;
  std::vector<double> effective_grid() const;
  int effective_n() const { return n > 0 ? n : 1000; }
};

struct SweepRow {
  double param = 0.0;
  double mean_pvalue = 0.0;
  double std_pvalue = 0.0;
  double reject_rate = 0.0;
};

/// One first-stage hypothesis test per (grid point, run) on a freshly
/// generated two-block sample; rows aggregate the runs per point.
/// `progress`, when set, is called after each completed grid point.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg,
                                const std::function<void(const SweepRow&)>& progress = {});

} // namespace blocktest
