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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "blocktest/gen.hpp"
#include "blocktest/inference.hpp"
#include "blocktest/rng.hpp"
#include "test_util.hpp"

using namespace blocktest;
using namespace blocktest::testutil;

TEST_SUITE("gen") {

TEST_CASE("adjusted half-normal theta") {
  auto theta = sample_theta_adjusted_halfnormal(100000, 99);

  // the offset is chosen so E(theta) = 1 exactly
  double mean = std::accumulate(theta.begin(), theta.end(), 0.0) / theta.size();
  CHECK(mean > 0.99);
  CHECK(mean < 1.01);

  const double floor = 1.0 - 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (double t : theta) CHECK(t >= floor);

  CHECK(sample_theta_adjusted_halfnormal(1000, 7) == sample_theta_adjusted_halfnormal(1000, 7));
  CHECK(sample_theta_adjusted_halfnormal(10, 1) != sample_theta_adjusted_halfnormal(10, 2));
  CHECK_THROWS_AS(sample_theta_adjusted_halfnormal(0, 1), std::invalid_argument);
}

TEST_CASE("dcsbm spec validation") {
  CHECK_THROWS_AS(DcsbmSpec::uniform({0, 5}, 0.2, 0.1, std::vector<double>(5, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DcsbmSpec::uniform({2, 2}, 0.2, 0.1, std::vector<double>{1, 1, 1, 0}),
                  std::invalid_argument);
  auto spec = DcsbmSpec::uniform({2, 3}, 0.2, 0.1, std::vector<double>(5, 1.0));
  CHECK(spec.total_vertices() == 5);
  CHECK(spec.block_of(1) == 0);
  CHECK(spec.block_of(2) == 1);
}

TEST_CASE("dcsbm samples are simple and deterministic") {
  auto theta = sample_theta_adjusted_halfnormal(200, 3);
  auto spec = DcsbmSpec::uniform({100, 100}, 0.2, 0.02, theta);
  auto a = sample_dcsbm(spec, 11);
  auto b = sample_dcsbm(spec, 11);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.truth.labels == b.truth.labels);
  CHECK(a.truth.community_count() == 2);
  auto c = sample_dcsbm(spec, 12);
  CHECK(a.graph.edges() != c.graph.edges());
}

TEST_CASE("dcsbm zero rates give an edgeless graph") {
  auto spec = DcsbmSpec::uniform({5, 5}, 0.0, 0.0, std::vector<double>(10, 1.0));
  CHECK(sample_dcsbm(spec, 1).graph.edge_count() == 0);
}

TEST_CASE("dcsbm within-block edge mass matches the collision-aware expectation") {
  // blocks of 500 at w_in = 0.2: 0.2 * 500^2 / 2 = 25000 draws per block in
  // expectation. Poisson thinning puts an independent Poisson count on each
  // vertex pair, so after duplicate discards the expected edge count per
  // block is sum over pairs of 1 - exp(-rate_ij); at this density the
  // discards cost roughly 10%.
  const double rate_total = 25000.0;
  double realized = 0.0, oracle = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    auto theta = sample_theta_adjusted_halfnormal(1000, 40 + s);
    auto spec = DcsbmSpec::uniform({500, 500}, 0.2, 0.02, theta);

    for (int block = 0; block < 2; ++block) {
      const int lo = block * 500, hi = lo + 500;
      double s_theta = 0.0;
      for (int i = lo; i < hi; ++i) s_theta += theta[i];
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) {
          const double rate =
              2.0 * rate_total * (theta[i] / s_theta) * (theta[j] / s_theta);
          oracle += 1.0 - std::exp(-rate);
        }
    }

    auto sample = sample_dcsbm(spec, 70 + s);
    int within = 0;
    for (const auto& [u, v] : sample.graph.edges())
      if ((u < 500) == (v < 500)) ++within;
    realized += within;
  }
  realized /= 2.0 * seeds; // per block
  oracle /= 2.0 * seeds;
  CHECK(realized > oracle * 0.95);
  CHECK(realized < oracle * 1.05);
  // the Poisson draw mass itself is visible within a 15% band
  CHECK(realized > rate_total * 0.85);
  CHECK(realized < rate_total * 1.05);
}

TEST_CASE("one-block dcsbm with constant theta behaves like an ER sampler") {
  // oracle: direct per-pair Bernoulli sampler at matched density
  const int n = 500;
  const double w = 0.02;
  const int seeds = 20;
  // per-pair Poisson rate w*n^2/2 / C(n,2); present iff the count is nonzero
  const double p = 1.0 - std::exp(-w * n / (n - 1.0));

  long long dcsbm_edges = 0, er_edges = 0;
  double dcsbm_degree = 0.0;
  for (int s = 0; s < seeds; ++s) {
    auto spec = DcsbmSpec::uniform({n}, w, 0.0, std::vector<double>(n, 1.0));
    auto sample = sample_dcsbm(spec, 900 + s);
    dcsbm_edges += sample.graph.edge_count();
    dcsbm_degree += 2.0 * sample.graph.edge_count() / n;
    er_edges += random_graph(n, p, 2000 + s).edge_count();
  }
  dcsbm_degree /= seeds;
  CHECK(dcsbm_degree > 0.95 * w * n);
  CHECK(dcsbm_degree < 1.05 * w * n);

  // two-proportion z-test on pooled edge counts at the 1% level
  const double pairs = static_cast<double>(seeds) * n * (n - 1) / 2.0;
  const double p1 = dcsbm_edges / pairs, p2 = er_edges / pairs;
  const double pooled = (dcsbm_edges + er_edges) / (2.0 * pairs);
  const double z = (p1 - p2) / std::sqrt(pooled * (1.0 - pooled) * 2.0 / pairs);
  CHECK(std::abs(z) < 2.576);
}

TEST_CASE("dcerg basics") {
  CHECK_THROWS_AS(sample_dcerg(1, 1.0, std::vector<double>{1.0}, 0), std::invalid_argument);
  std::vector<double> theta(6, 1.0 / 6.0);
  CHECK(sample_dcerg(6, 0.0, theta, 5).edge_count() == 0);
  CHECK(sample_dcerg(6, 9.0, theta, 5).edges() == sample_dcerg(6, 9.0, theta, 5).edges());
}

TEST_CASE("dcerg uniform theta reduces to per-pair probability p") {
  // w = n^2 * p and theta_i = 1/n make every pair probability exactly p
  const int n = 40;
  const double p = 0.3;
  std::vector<double> theta(n, 1.0 / n);
  const double w = n * n * p;
  long long edges = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) edges += sample_dcerg(n, w, theta, 3000 + s).edge_count();
  const double pairs = static_cast<double>(seeds) * n * (n - 1) / 2.0;
  const double sd = std::sqrt(pairs * p * (1 - p));
  CHECK(std::abs(edges - pairs * p) < 3.0 * sd);
}

TEST_CASE("dcerg mean edge count matches the clamped expectation") {
  Graph g = random_graph(60, 0.12, 321);
  auto model = fit_dcerg(g, SurrogateFit::CalibratedDensity);
  const double oracle = expected_dcerg_edges(model.w_hat, model.theta_hat);
  double mean = 0.0;
  const int draws = 50;
  for (int s = 0; s < draws; ++s)
    mean += sample_dcerg(model.n, model.w_hat, model.theta_hat, 100 + s).edge_count();
  mean /= draws;
  const double sd = std::sqrt(oracle) / std::sqrt(static_cast<double>(draws));
  CHECK(std::abs(mean - oracle) < 3.0 * std::max(sd, 1.0));
}

TEST_CASE("dcerg on a fitted hubby graph reproduces the observed edge count") {
  // hub-dominated graph exercises the clamped pair probabilities
  Graph g(10, std::vector<EdgePair>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7},
                                    {0, 8}, {0, 9}, {1, 2}, {3, 4}, {5, 6}, {7, 8}});
  auto model = fit_dcerg(g, SurrogateFit::CalibratedDensity);
  const double oracle = expected_dcerg_edges(model.w_hat, model.theta_hat);
  CHECK(oracle == doctest::Approx(g.edge_count()).epsilon(1e-6));
  double mean = 0.0;
  const int draws = 50;
  for (int s = 0; s < draws; ++s)
    mean += sample_dcerg(model.n, model.w_hat, model.theta_hat, 777 + s).edge_count();
  mean /= draws;
  CHECK(std::abs(mean - g.edge_count()) < 0.1 * g.edge_count());
}

} // TEST_SUITE
