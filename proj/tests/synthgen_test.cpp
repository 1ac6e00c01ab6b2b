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

#include <numeric>

#include "streamcut/synthgen.hpp"
#include "zipf_fit.hpp"

namespace streamcut {
namespace {

std::vector<std::uint64_t> histogram(const ZipfSampler& zipf, std::uint64_t draws,
                                     std::uint64_t seed) {
  std::vector<std::uint64_t> counts(zipf.max_degree() + 1, 0);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[zipf(rng)];
  return counts;
}

TEST(Zipf, SingleSupportPoint) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_zipf(2.0, 1, rng), 1u);
}

TEST(Zipf, InvalidParameters) {
  EXPECT_THROW(ZipfSampler(1.0, 10), std::invalid_argument);
  EXPECT_THROW(ZipfSampler(0.5, 10), std::invalid_argument);
  EXPECT_THROW(ZipfSampler(2.0, 0), std::invalid_argument);
}

TEST(Zipf, PmfNormalized) {
  const ZipfSampler zipf(2.2, 1000);
  double total = 0.0;
  for (std::uint64_t d = 1; d <= 1000; ++d) total += zipf.pmf(d);
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(zipf.pmf(0), 0.0);
  EXPECT_EQ(zipf.pmf(1001), 0.0);
  EXPECT_NEAR(ZipfSampler(2.0, 2).pmf(1), 0.8, 1e-15);
}

TEST(Zipf, RatioOfFirstTwoDegrees) {
  const auto counts = histogram(ZipfSampler(2.0, 2), 1'000'000, 3);
  const double ratio = static_cast<double>(counts[1]) / static_cast<double>(counts[2]);
  EXPECT_NEAR(ratio, 4.0, 4.0 * 0.02);
}

TEST(Zipf, LogLogSlope) {
  const auto counts = histogram(ZipfSampler(2.2, 100000), 1'000'000, 4);
  EXPECT_NEAR(testing::log_log_slope(counts, 1, 20), -2.2, 0.1);
}

TEST(Zipf, GoodnessOfFit) {
  const ZipfSampler zipf(2.0, 99999);
  const auto counts = histogram(zipf, 1'000'000, 5);
  const auto fit = testing::zipf_chi_square(counts, zipf, 1'000'000);
  EXPECT_GT(fit.dof, 10);
  EXPECT_LT(fit.chi2, testing::chi_square_critical(fit.dof));
}

TEST(Generate, ForcedDegrees) {
  const Graph g = generate({.vertex_count = 2, .alpha = 1.5, .beta = 3.0, .max_degree = 1, .seed = 9});
  ASSERT_EQ(g.edge_count(), 4u);
  for (const Edge& e : g.edges()) EXPECT_NE(e.source, e.target);
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(0), 2u);
}

TEST(Generate, Deterministic) {
  const SyntheticSpec spec{.vertex_count = 2000, .alpha = 2.0, .beta = 2.1, .seed = 4};
  const auto edges = [](const SyntheticSpec& s) {
    const Graph g = generate(s);
    return std::vector<Edge>(g.edges().begin(), g.edges().end());
  };
  EXPECT_EQ(edges(spec), edges(spec));
  SyntheticSpec other = spec;
  other.seed = 5;
  EXPECT_NE(edges(spec), edges(other));
}

TEST(Generate, NoSelfLoopsAndOutHalfStructure) {
  const SyntheticSpec spec{.vertex_count = 3000, .alpha = 1.9, .beta = 2.2, .seed = 2};
  const Graph g = generate(spec);
  for (const Edge& e : g.edges()) ASSERT_NE(e.source, e.target);
  // The out-half comes first, grouped by source, each source with degree >= 1.
  const auto& edges = g.edges();
  std::size_t i = 0;
  for (VertexId v = 0; v < spec.vertex_count; ++v) {
    ASSERT_LT(i, edges.size());
    ASSERT_EQ(edges[i].source, v);
    while (i < edges.size() && edges[i].source == v) ++i;
  }
  // Second half: grouped by target.
  for (VertexId v = 0; v < spec.vertex_count; ++v) {
    ASSERT_LT(i, edges.size());
    ASSERT_EQ(edges[i].target, v);
    while (i < edges.size() && edges[i].target == v) ++i;
  }
  EXPECT_EQ(i, edges.size());
}

TEST(Generate, HalvesFitZipf) {
  const SyntheticSpec spec{.vertex_count = 100000, .alpha = 2.2, .beta = 2.0, .seed = 6};
  const auto check = [&](const std::vector<Edge>& half, bool by_source, double exponent) {
    std::vector<std::uint64_t> per_vertex(spec.vertex_count, 0);
    for (const Edge& e : half) ++per_vertex[by_source ? e.source : e.target];
    std::vector<std::uint64_t> counts(spec.vertex_count, 0);
    std::uint64_t total = 0;
    for (auto d : per_vertex) {
      ASSERT_GE(d, 1u);
      ++counts[d];
      total += d;
    }
    EXPECT_EQ(total, half.size());
    const ZipfSampler zipf(exponent, spec.effective_max_degree());
    const auto fit = testing::zipf_chi_square(counts, zipf, spec.vertex_count);
    EXPECT_LT(fit.chi2, testing::chi_square_critical(fit.dof));
  };
  check(generate_out_half(spec), true, spec.alpha);
  check(generate_in_half(spec), false, spec.beta);
  EXPECT_EQ(generate(spec).edge_count(),
            generate_out_half(spec).size() + generate_in_half(spec).size());
}

TEST(Generate, InvalidSpec) {
  EXPECT_THROW(generate({.vertex_count = 1}), std::invalid_argument);
  EXPECT_THROW(generate({.vertex_count = 10, .alpha = 0.5}), std::invalid_argument);
  EXPECT_THROW(generate({.vertex_count = 10, .beta = 1.0}), std::invalid_argument);
  EXPECT_THROW(generate({.vertex_count = 10, .max_degree = 10}), std::invalid_argument);
}

TEST(Generate, SmallerAlphaMeansMoreEdges) {
  for (double beta : {2.0, 2.2}) {
    double heavy = 0.0;
    double light = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      heavy += static_cast<double>(
          generate({.vertex_count = 20000, .alpha = 1.9, .beta = beta, .seed = seed}).edge_count());
      light += static_cast<double>(
          generate({.vertex_count = 20000, .alpha = 2.2, .beta = beta, .seed = seed}).edge_count());
    }
    EXPECT_GT(heavy, light);
  }
}

}  // namespace
}  // namespace streamcut
