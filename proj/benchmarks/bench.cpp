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

#include <benchmark/benchmark.h>

#include "blocktest/bisect.hpp"
#include "blocktest/detect.hpp"
#include "blocktest/dissim.hpp"
#include "blocktest/gen.hpp"
#include "blocktest/inference.hpp"

namespace {

using namespace blocktest;

Graph two_block(int n, double w_in, double w_out, std::uint64_t seed) {
  auto theta = sample_theta_adjusted_halfnormal(n, seed);
  auto spec = DcsbmSpec::uniform({n / 2, n - n / 2}, w_in, w_out, std::move(theta));
  return sample_dcsbm(spec, seed + 1).graph;
}

void BM_DistanceDistribution(benchmark::State& state) {
  Graph g = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 11);
  for (auto _ : state) benchmark::DoNotOptimize(distance_distribution(g, 1));
  state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_DistanceDistribution)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Features(benchmark::State& state) {
  Graph g = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 13);
  for (auto _ : state) benchmark::DoNotOptimize(compute_features(g, {}, 1));
}
BENCHMARK(BM_Features)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Dissimilarity(benchmark::State& state) {
  Graph a = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 17);
  Graph b = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 19);
  auto fa = compute_features(a);
  auto fb = compute_features(b);
  for (auto _ : state) benchmark::DoNotOptimize(dissimilarity(fa, fb));
}
BENCHMARK(BM_Dissimilarity)->Arg(300)->Unit(benchmark::kMicrosecond);

void BM_EdgeBetweenness(benchmark::State& state) {
  Graph g = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 23);
  BisectConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness(g, cfg));
}
BENCHMARK(BM_EdgeBetweenness)->Arg(120)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_HypothesisTest(benchmark::State& state) {
  Graph g = two_block(static_cast<int>(state.range(0)), 0.2, 0.02, 29);
  TestConfig cfg;
  cfg.surrogates = 20;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hypothesis_test(g, cfg, 31));
}
BENCHMARK(BM_HypothesisTest)->Arg(120)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_DetectTwoBlock(benchmark::State& state) {
  Graph g = two_block(120, 0.3, 0.01, 37);
  DetectConfig cfg;
  cfg.seed = 41;
  cfg.test.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(detect_communities(g, cfg));
}
BENCHMARK(BM_DetectTwoBlock)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
