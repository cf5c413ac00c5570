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

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "blocktest/gen.hpp"
#include "blocktest/inference.hpp"
#include "test_util.hpp"

using namespace blocktest;
using namespace blocktest::testutil;

TEST_SUITE("inference") {

TEST_CASE("theta estimator hand values") {
  auto k3 = estimate_theta(complete_graph(3));
  for (double t : k3) CHECK(t == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  auto s4 = estimate_theta(star_graph(3));
  CHECK(s4[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s4[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  auto p3 = estimate_theta(path_graph(3));
  CHECK(p3[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p3[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p3[2] == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(estimate_theta(Graph(3, std::vector<EdgePair>{})), std::invalid_argument);
}

TEST_CASE("theta sums to one on random graphs") {
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(40, 0.1, 11000 + trial);
    if (g.edge_count() == 0) continue;
    auto theta = estimate_theta(g);
    double total = 0.0;
    for (double t : theta) total += t;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("w estimator hand values") {
  Graph k3 = complete_graph(3);
  CHECK(estimate_w(k3, estimate_theta(k3)) == doctest::Approx(9.0).epsilon(1e-12));

  // single edge on 3 vertices: the isolated vertex has theta 0 but
  // contributes no term
  Graph e3(3, std::vector<EdgePair>{{0, 1}});
  std::vector<double> theta{0.5, 0.5, 0.0};
  CHECK(estimate_w(e3, theta) == doctest::Approx((2.0 / 0.25) / 6.0).epsilon(1e-12));
}

TEST_CASE("w estimator is density-consistent on homogeneous random graphs") {
  int hits = 0, total = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(100, 0.1, 12000 + trial);
    auto theta = estimate_theta(g);
    const double w = estimate_w(g, theta);
    double sq = 0.0;
    for (double t : theta) sq += t * t;
    const double implied_edges = w * (1.0 - sq) / 2.0; // unclamped expectation
    ++total;
    if (std::abs(implied_edges - g.edge_count()) < 0.1 * g.edge_count()) ++hits;
  }
  CHECK(hits == total);
}

TEST_CASE("fit modes coincide on regular graphs and calibrate density") {
  Graph c = cycle_graph(12);
  auto mr = fit_dcerg(c, SurrogateFit::MomentRatio);
  auto de = fit_dcerg(c, SurrogateFit::Density);
  auto ca = fit_dcerg(c, SurrogateFit::CalibratedDensity);
  CHECK(mr.w_hat == doctest::Approx(de.w_hat).epsilon(1e-9));
  CHECK(de.w_hat == doctest::Approx(ca.w_hat).epsilon(1e-6));

  Graph g = random_graph(50, 0.15, 901);
  auto model = fit_dcerg(g, SurrogateFit::CalibratedDensity);
  CHECK(expected_dcerg_edges(model.w_hat, model.theta_hat) ==
        doctest::Approx(g.edge_count()).epsilon(1e-9));
  CHECK_NOTHROW(model.validate());
}

TEST_CASE("type-6 quantiles") {
  std::vector<double> two{0.0, 1.0};
  CHECK(sample_quantile(two, 0.25) == 0.0);
  CHECK(sample_quantile(two, 0.75) == 1.0);
  CHECK(sample_quantile(two, 0.5) == 0.5);
  std::vector<double> nine{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(sample_quantile(nine, 0.5) == 5.0);
  CHECK(sample_quantile(nine, 0.25) == 2.5);
}

TEST_CASE("silverman bandwidth of {0,1}") {
  std::vector<double> samples{0.0, 1.0};
  const double h = silverman_bandwidth(samples);
  // sd = sqrt(1/2) with the m-1 denominator, IQR = 1, so the sd branch wins
  const double exact = 0.9 * std::sqrt(0.5) * std::pow(2.0, -0.2);
  CHECK(h == doctest::Approx(exact).epsilon(1e-12));
  CHECK(std::abs(h - 0.5539) < 1.5e-4);
}

TEST_CASE("degenerate kde inputs") {
  CHECK_THROWS_AS(silverman_bandwidth(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(kde_fit({2.0, 2.0, 2.0}), std::invalid_argument);
}

TEST_CASE("kde density concentrates near a jittered constant") {
  std::vector<double> samples;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) samples.push_back(3.0 + 1e-6 * rng.uniform());
  auto model = kde_fit(samples);
  CHECK(kde_tail_prob(model, 2.9) > 0.999);
  CHECK(kde_tail_prob(model, 3.1) < 0.001);
}

TEST_CASE("kde tail probability limits and symmetry") {
  auto model = kde_fit({0.0, 1.0});
  CHECK(kde_tail_prob(model, -1e9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kde_tail_prob(model, 1e9) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(kde_tail_prob(model, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("kde tail probability is monotone nonincreasing") {
  Rng rng(31);
  std::vector<double> samples;
  for (int i = 0; i < 60; ++i) samples.push_back(rng.normal(0.3, 0.07));
  auto model = kde_fit(samples);
  double prev = 1.0;
  for (double x = -0.5; x <= 1.2; x += 0.01) {
    double p = kde_tail_prob(model, x);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}

TEST_CASE("kde tail probability matches trapezoid integration of the density") {
  auto model = kde_fit({0.21, 0.34});
  const double x = 0.3;
  // integrate the gaussian mixture density over [x, x + 30h]
  const double h = model.bandwidth;
  const double lo = x, hi = x + 30.0 * h;
  const int steps = 10000;
  auto density = [&](double t) {
    double acc = 0.0;
    for (double s : model.samples) {
      const double z = (t - s) / h;
      acc += std::exp(-0.5 * z * z);
    }
    return acc / (model.samples.size() * h * std::sqrt(2.0 * std::numbers::pi));
  };
  double integral = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double a = lo + (hi - lo) * i / steps;
    const double b = lo + (hi - lo) * (i + 1) / steps;
    integral += 0.5 * (density(a) + density(b)) * (b - a);
  }
  CHECK(kde_tail_prob(model, x) == doctest::Approx(integral).epsilon(1e-4));
}

TEST_CASE("hypothesis test validates inputs and configuration") {
  TestConfig cfg;
  CHECK_THROWS_AS(hypothesis_test(Graph(3, std::vector<EdgePair>{}), cfg, 0),
                  std::invalid_argument);
  TestConfig bad = cfg;
  bad.significance = 0.0;
  CHECK_THROWS_AS(hypothesis_test(complete_graph(4), bad, 0), std::invalid_argument);
  bad = cfg;
  bad.surrogates = 1;
  CHECK_THROWS_AS(hypothesis_test(complete_graph(4), bad, 0), std::invalid_argument);
}

TEST_CASE("a kde pair cap changes the sample size, not the decision scale") {
  Graph g = random_graph(40, 0.2, 7777);
  TestConfig full;
  full.surrogates = 20;
  full.threads = 1;
  auto a = hypothesis_test(g, full, 5);

  TestConfig capped = full;
  capped.max_kde_pairs = 40; // of 190 pairs
  auto b = hypothesis_test(g, capped, 5);
  CHECK(a.mean_dissim == b.mean_dissim); // surrogate draws are identical
  CHECK(b.pvalue >= 0.0);
  CHECK(b.pvalue <= 1.0);
  CHECK(std::abs(a.pvalue - b.pvalue) < 0.25);
  // deterministic subsample
  auto b2 = hypothesis_test(g, capped, 5);
  CHECK(b.pvalue == b2.pvalue);

  TestConfig bad = full;
  bad.max_kde_pairs = 1;
  CHECK_THROWS_AS(hypothesis_test(g, bad, 5), std::invalid_argument);
}

TEST_CASE("hypothesis test is deterministic for any thread count") {
  Graph g = random_graph(40, 0.2, 6161);
  TestConfig cfg;
  cfg.surrogates = 20;
  cfg.threads = 1;
  auto r1 = hypothesis_test(g, cfg, 99);
  cfg.threads = 2;
  auto r2 = hypothesis_test(g, cfg, 99);
  cfg.threads = 4;
  auto r4 = hypothesis_test(g, cfg, 99);
  CHECK(r1.mean_dissim == r2.mean_dissim);
  CHECK(r1.pvalue == r2.pvalue);
  CHECK(r2.mean_dissim == r4.mean_dissim);
  CHECK(r2.pvalue == r4.pvalue);
  CHECK(r1.reject == r4.reject);
}

TEST_CASE("hypothesis test accepts a null draw and rejects strong structure") {
  // one-block null sample
  auto theta = sample_theta_adjusted_halfnormal(150, 8);
  double total = 0.0;
  for (double t : theta) total += t;
  for (auto& t : theta) t /= total;
  Graph null_graph = sample_dcerg(150, 3000.0, theta, 4);
  TestConfig cfg;
  auto null_result = hypothesis_test(null_graph, cfg, 3);
  CHECK(!null_result.reject);

  // two dense blocks, almost no cross edges
  auto spec = DcsbmSpec::uniform({60, 60}, 0.4, 0.01, std::vector<double>(120, 1.0));
  auto sample = sample_dcsbm(spec, 21);
  REQUIRE(sample.graph.edge_count() > 0);
  auto alt_result = hypothesis_test(sample.graph, cfg, 3);
  CHECK(alt_result.reject);
  CHECK(alt_result.pvalue < 0.05);
  CHECK(alt_result.mean_dissim > null_result.mean_dissim);
}

} // TEST_SUITE
