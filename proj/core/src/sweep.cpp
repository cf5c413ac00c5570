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

#include "blocktest/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "blocktest/gen.hpp"
#include "blocktest/rng.hpp"

namespace blocktest {

SweepExperiment parse_experiment(const std::string& name) {
  if (name == "balanced_w12") return SweepExperiment::BalancedW12;
  if (name == "unbalanced_n1") return SweepExperiment::UnbalancedN1;
  if (name == "unbalanced_w12") return SweepExperiment::UnbalancedW12;
  throw std::invalid_argument("unknown experiment: " + name);
}

const char* to_string(SweepExperiment e) {
  switch (e) {
    case SweepExperiment::BalancedW12: return "balanced_w12";
    case SweepExperiment::UnbalancedN1: return "unbalanced_n1";
    case SweepExperiment::UnbalancedW12: return "unbalanced_w12";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (n < 0) throw std::invalid_argument("negative n");
  if (effective_n() < 4) throw std::invalid_argument("n too small");
  if (w_in < 0.0) throw std::invalid_argument("negative w_in");
  test.validate();
  for (double g : grid)
    if (g < 0.0) throw std::invalid_argument("negative grid value");
  if (experiment == SweepExperiment::UnbalancedN1) {
    for (double g : effective_grid()) {
      int n1 = static_cast<int>(g);
      if (n1 < 1 || n1 >= effective_n())
        throw std::invalid_argument("block size grid outside (0, n)");
    }
  }
}

std::vector<double> SweepConfig::effective_grid() const {
  if (!grid.empty()) return grid;
  std::vector<double> g;
  if (experiment == SweepExperiment::UnbalancedN1) {
    for (int n1 = 50; n1 <= 100; n1 += 10) g.push_back(n1);
  } else {
    for (int i = 1; i <= 10; ++i) g.push_back(0.02 * i);
  }
  return g;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg,
                                const std::function<void(const SweepRow&)>& progress) {
  cfg.validate();
  const auto grid = cfg.effective_grid();
  const int n = cfg.effective_n();
  const int runs = cfg.runs;

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t point = 0; point < grid.size(); ++point) {
    const double param = grid[point];

    int n1 = n / 2;
    double w12 = param;
    switch (cfg.experiment) {
      case SweepExperiment::BalancedW12: break;
      case SweepExperiment::UnbalancedN1:
        n1 = static_cast<int>(param);
        w12 = 0.02;
        break;
      case SweepExperiment::UnbalancedW12: n1 = 100; break;
    }
    const int n2 = n - n1;

    std::vector<double> pvalues(runs);
    for (int run = 0; run < runs; ++run) {
      // Common random numbers: run r reuses the same streams at every grid
      // point, so curves across the grid are compared on matched noise.
      const std::uint64_t run_seed = derive_seed(cfg.seed, run);
      auto theta = sample_theta_adjusted_halfnormal(n, derive_seed(run_seed, 0));
      auto spec = DcsbmSpec::uniform({n1, n2}, cfg.w_in, w12, std::move(theta));
      auto sample = sample_dcsbm(spec, derive_seed(run_seed, 1));
      if (sample.graph.edge_count() == 0) {
        pvalues[run] = 1.0; // nothing to test, treat as accept
        continue;
      }
      auto result = hypothesis_test(sample.graph, cfg.test, derive_seed(run_seed, 2));
      pvalues[run] = result.pvalue;
    }

    SweepRow row;
    row.param = param;
    for (double p : pvalues) {
      row.mean_pvalue += p;
      row.reject_rate += p < cfg.test.significance ? 1.0 : 0.0;
    }
    row.mean_pvalue /= runs;
    row.reject_rate /= runs;
    if (runs > 1) {
      double acc = 0.0;
      for (double p : pvalues) acc += (p - row.mean_pvalue) * (p - row.mean_pvalue);
      row.std_pvalue = std::sqrt(acc / (runs - 1));
    }
    rows.push_back(row);
    if (progress) progress(row);
  }
  return rows;
}

} // namespace blocktest
