// Copyright 2026 The streamcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "streamcut/metrics.hpp"
#include "streamcut/synthgen.hpp"
#include "test_util.hpp"

namespace streamcut {
namespace {

TEST(ReplicationFactor, TriangleSplit) {
  PartitionState s(2, 3, 1);
  s.commit({0, 1}, 0);
  s.commit({1, 2}, 0);
  s.commit({2, 0}, 1);
  // Any 2/1 split of a triangle leaves both endpoints of the lone edge in
  // two partitions: (2+1+2)/3.
  EXPECT_DOUBLE_EQ(replication_factor(s), 5.0 / 3.0);

  // Path 0-1-2 split at vertex 1: only 1 spans both, (1+2+1)/3.
  PartitionState t(2, 3, 1);
  t.commit({0, 1}, 0);
  t.commit({1, 2}, 1);
  EXPECT_DOUBLE_EQ(replication_factor(t), 4.0 / 3.0);
}

TEST(ReplicationFactor, IgnoresUntouchedVerticesAndRejectsEmpty) {
  PartitionState s(4, 10, 1);
  EXPECT_THROW(replication_factor(s), std::domain_error);
  s.commit({0, 1}, 3);
  EXPECT_DOUBLE_EQ(replication_factor(s), 1.0);
}

TEST(ImbalanceFactor, Examples) {
  PartitionState s(2, 4, 1);
  EXPECT_THROW(imbalance_factor(s), std::domain_error);
  for (int i = 0; i < 3; ++i) s.commit({0, 1}, 0);
  s.commit({2, 3}, 1);
  EXPECT_DOUBLE_EQ(imbalance_factor(s), 1.5);
  s.commit({2, 3}, 1);
  s.commit({2, 3}, 1);
  EXPECT_DOUBLE_EQ(imbalance_factor(s), 1.0);
}

TEST(Improvement, Examples) {
  EXPECT_DOUBLE_EQ(improvement(2.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(improvement(4.0, 3.0), 25.0);
  EXPECT_NEAR(improvement(3.0, 3.3), -10.0, 1e-12);
  EXPECT_THROW(improvement(0.0, 1.0), std::domain_error);
  EXPECT_THROW(improvement(-1.0, 1.0), std::domain_error);
}

TEST(RatioTable, Star) {
  const auto ratio = compute_ratio_table(testing::star_graph(5));
  EXPECT_DOUBLE_EQ(ratio[0], 0.0);
  for (VertexId v = 1; v <= 5; ++v) EXPECT_DOUBLE_EQ(ratio[v], 1.0);
}

TEST(RatioTable, RegularAndPath) {
  const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (double r : compute_ratio_table(cycle)) EXPECT_DOUBLE_EQ(r, 1.0);
  const Graph path(3, {{0, 1}, {1, 2}});
  const auto ratio = compute_ratio_table(path);
  EXPECT_DOUBLE_EQ(ratio[0], 1.0);
  EXPECT_DOUBLE_EQ(ratio[1], 0.0);
  EXPECT_DOUBLE_EQ(ratio[2], 1.0);
}

TEST(RatioTable, InUnitInterval) {
  const Graph g = testing::random_graph(50, 300, 3);
  for (double r : compute_ratio_table(g)) {
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
  }
}

TEST(Predict, SinglePartitionAndRegular) {
  const Graph g = testing::random_graph(40, 200, 5);
  EXPECT_DOUBLE_EQ(predict_random(g, 1), 1.0);
  EXPECT_DOUBLE_EQ(predict_random_degree(g, 1), 1.0);
  const Graph cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_DOUBLE_EQ(predict_random_degree(cycle, 8), 1.0);
  EXPECT_THROW(predict_random(g, 0), std::invalid_argument);
}

TEST(Predict, StarClosedForm) {
  // Only the center contributes: 1 + (3/101)(1 - 0.75^100).
  const Graph star = testing::star_graph(100);
  const double expected = 1.0 + (3.0 / 101.0) * (1.0 - std::pow(0.75, 100));
  EXPECT_NEAR(predict_random_degree(star, 4), expected, 1e-12);
  EXPECT_NEAR(expected, 1.0297, 1e-4);
  // Random: leaves each add 1 - 0.75.
  const double random_expected =
      1.0 + (3.0 / 101.0) * ((1.0 - std::pow(0.75, 100)) + 100 * 0.25);
  EXPECT_NEAR(predict_random(star, 4), random_expected, 1e-12);
}

TEST(Predict, StarMonteCarlo) {
  // Random-Degree on a star places every edge by its leaf's hash, so each
  // leaf has one replica and the center's replica count is the number of
  // distinct leaf buckets.
  const Graph star = testing::star_graph(100);
  double sum = 0.0;
  constexpr int kSeeds = 10000;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto run = run_partition(star, {OrderKind::Rnd, static_cast<std::uint64_t>(seed)},
                                   Algorithm::RandomDegree, 4, seed);
    sum += replication_factor(run.state);
  }
  const double measured = sum / kSeeds;
  // Center: 4(1 - 0.75^100) replicas, leaves 1 each.
  const double exact = (100.0 + 4.0 * (1.0 - std::pow(0.75, 100))) / 101.0;
  EXPECT_NEAR(measured, exact, 1e-3);
  EXPECT_NEAR(measured, predict_random_degree(star, 4), 0.05 * predict_random_degree(star, 4));
}

TEST(Predict, RandomDegreeNeverAboveRandom) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testing::random_graph(30, 100, seed);
    for (std::uint32_t p : {2u, 7u, 48u}) {
      EXPECT_LE(predict_random_degree(g, p), predict_random(g, p));
    }
  }
}

TEST(Predict, ModerateZipfGraphRandomDegree) {
  const Graph g = generate({.vertex_count = 20000, .alpha = 2.0, .beta = 2.0, .seed = 3});
  const double predicted = predict_random_degree(g, 48);
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    sum += replication_factor(
        run_partition(g, {OrderKind::Rnd, seed}, Algorithm::RandomDegree, 48, seed).state);
  }
  EXPECT_NEAR(sum / 3.0, predicted, 0.05 * predicted);
}

TEST(MetricsProperty, Bounds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::random_graph(30, 120, seed);
    for (Algorithm a : kAllAlgorithms) {
      const auto run = run_partition(g, {OrderKind::DFS, seed}, a, 7, seed);
      EXPECT_GE(imbalance_factor(run.state), 1.0);
      EXPECT_GE(replication_factor(run.state), 1.0);
      EXPECT_LE(replication_factor(run.state), 7.0);
    }
  }
}

}  // namespace
}  // namespace streamcut
