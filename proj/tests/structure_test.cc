// Copyright 2026 The Collabnet Authors
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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "collabnet/graph/graph.h"
#include "collabnet/structure/components.h"
#include "collabnet/structure/core_decomposition.h"
#include "collabnet/structure/degree_distribution.h"
#include "collabnet/structure/distance.h"
#include "collabnet/util/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace collabnet {
namespace {

using ::testing::ElementsAre;
using ::testing::Pair;

Graph Triangle() { return Graph::FromEdges(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph Path(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::FromEdges(n, e);
}
Graph Clique(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::FromEdges(n, e);
}

TEST(ComponentsTest, TriangleAndIsolatedNode) {
  const auto c =
      ConnectedComponents(Graph::FromEdges(4, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_THAT(c.sizes, ElementsAre(3, 1));
  EXPECT_DOUBLE_EQ(c.giant_fraction, 0.75);
  EXPECT_DOUBLE_EQ(c.isolated_fraction, 0.25);
  EXPECT_THAT(ComponentMembers(c, 0), ElementsAre(0, 1, 2));
  EXPECT_THAT(ComponentMembers(c, 1), ElementsAre(3));
}

TEST(ComponentsTest, EmptyGraph) {
  const auto c = ConnectedComponents(Graph::FromEdges(0, {}));
  EXPECT_EQ(c.component_count(), 0u);
  EXPECT_EQ(c.giant_fraction, 0.0);
}

TEST(ComponentsTest, SizesInvariantUnderRelabeling) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const NodeId n = 1 + rng.UniformIndex(40);
    const auto edges = testing::RandomEdges(rng, n, 1.5 / n);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm);
    testing::EdgeList relabeled;
    for (auto [u, v] : edges) relabeled.emplace_back(perm[u], perm[v]);
    const auto a = ConnectedComponents(Graph::FromEdges(n, edges));
    const auto b = ConnectedComponents(Graph::FromEdges(n, relabeled));
    EXPECT_EQ(a.sizes, b.sizes);
    EXPECT_EQ(std::accumulate(a.sizes.begin(), a.sizes.end(), uint64_t{0}), n);
    for (auto [u, v] : edges) {
      EXPECT_EQ(a.component_of[u], a.component_of[v]);
    }
  }
}

TEST(CoreNumbersTest, HandCases) {
  EXPECT_THAT(CoreNumbers(Path(5)).core_number, ElementsAre(1, 1, 1, 1, 1));
  const auto pendant =
      CoreNumbers(Graph::FromEdges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  EXPECT_THAT(pendant.core_number, ElementsAre(2, 2, 2, 1));
  EXPECT_EQ(pendant.degeneracy, 2u);
  for (NodeId q = 1; q <= 7; ++q) {
    const auto c = CoreNumbers(Clique(q));
    EXPECT_EQ(c.degeneracy, q - 1);
  }
  EXPECT_THAT(CoreHistogram(pendant), ElementsAre(Pair(1, 1), Pair(2, 3)));
}

TEST(CoreNumbersTest, MatchesNaiveDeletion) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const NodeId n = 1 + rng.UniformIndex(30);
    const auto edges = testing::RandomEdges(rng, n, rng.UniformDouble());
    const Graph g = Graph::FromEdges(n, edges);
    const auto cores = CoreNumbers(g);
    EXPECT_EQ(cores.core_number, testing::NaiveCoreNumbers(n, edges));
    uint32_t max_core = 0;
    for (NodeId v = 0; v < n; ++v) {
      EXPECT_LE(cores.core_number[v], g.Degree(v));
      max_core = std::max(max_core, cores.core_number[v]);
    }
    EXPECT_EQ(cores.degeneracy, max_core);
  }
}

TEST(DegreeHistogramTest, HandCases) {
  EXPECT_THAT(DegreeHistogramOf(Triangle()), ElementsAre(Pair(2, 3)));
  const Graph star = Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_THAT(DegreeHistogramOf(star), ElementsAre(Pair(1, 3), Pair(3, 1)));
  EXPECT_TRUE(DegreeHistogramOf(Graph::FromEdges(0, {})).empty());
}

TEST(FitPowerLawTest, EqualDegreesFail) {
  EXPECT_FALSE(FitPowerLaw({{3, 100}}).ok());
  EXPECT_FALSE(FitPowerLaw({{1, 5}, {3, 100}}, 2).ok());
  EXPECT_FALSE(FitPowerLaw({{1, 5}, {3, 100}}, 0).ok());
}

// Reference values computed offline at 30 digits: the root of the
// likelihood equation with the Hurwitz zeta for the exact fit, and the
// closed form 1 + n / sum ln(k / (xmin - 1/2)) for the approximation.
TEST(FitPowerLawTest, TwoPointHistogram) {
  const DegreeHistogram h = {{1, 1000}, {10, 1}};
  auto exact = FitPowerLaw(h);
  ASSERT_TRUE(exact.ok());
  EXPECT_NEAR(exact->gamma, 8.31756169369467, 1e-6);
  EXPECT_EQ(exact->tail_count, 1001u);
  auto approx = FitPowerLaw(h, 1, PowerLawMethod::kContinuousApproximation);
  ASSERT_TRUE(approx.ok());
  EXPECT_NEAR(approx->gamma, 2.43792313553211, 1e-12);
}

TEST(FitPowerLawTest, XminDropsTheHead) {
  const DegreeHistogram h = {{1, 7}, {2, 40}, {3, 9}, {8, 1}};
  auto fit = FitPowerLaw(h, 2, PowerLawMethod::kContinuousApproximation);
  ASSERT_TRUE(fit.ok());
  EXPECT_EQ(fit->tail_count, 50u);
  const double expected =
      1.0 + 50.0 / (40 * std::log(2 / 1.5) + 9 * std::log(3 / 1.5) +
                    std::log(8 / 1.5));
  EXPECT_NEAR(fit->gamma, expected, 1e-12);
}

TEST(FitPowerLawTest, InvariantUnderScalingCounts) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    DegreeHistogram h, scaled;
    for (uint64_t k = 1; k <= 12; ++k) {
      const uint64_t c = rng.UniformIndex(20);
      if (c == 0) continue;
      h[k] = c;
      scaled[k] = 7 * c;
    }
    auto a = FitPowerLaw(h);
    if (!a.ok()) continue;
    auto b = FitPowerLaw(scaled);
    ASSERT_TRUE(b.ok());
    EXPECT_NEAR(a->gamma, b->gamma, 1e-6);
  }
}

TEST(FitPowerLawTest, RecoversZipfExponent) {
  Rng rng(13);
  for (double gamma : {2.2, 2.5, 3.0}) {
    DegreeHistogram h;
    for (int i = 0; i < 20000; ++i) ++h[testing::SampleZipf(rng, gamma)];
    auto fit = FitPowerLaw(h);
    ASSERT_TRUE(fit.ok());
    EXPECT_NEAR(fit->gamma, gamma, 0.1);
  }
}

TEST(SampleAverageDistanceTest, HandCases) {
  auto t = SampleAverageDistance(Triangle(), 10, 1);
  ASSERT_TRUE(t.ok());
  EXPECT_DOUBLE_EQ(t->mean_distance, 1.0);
  EXPECT_EQ(t->sources, 3u);
  EXPECT_EQ(t->reached_pairs, 6u);
  auto p = SampleAverageDistance(Path(3), 3, 1);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ(p->mean_distance, 4.0 / 3.0);
}

TEST(SampleAverageDistanceTest, Errors) {
  EXPECT_FALSE(SampleAverageDistance(Graph::FromEdges(3, {}), 5, 1).ok());
  EXPECT_FALSE(SampleAverageDistance(Triangle(), 0, 1).ok());
}

TEST(SampleAverageDistanceTest, StaysInGiantAndIgnoresThreads) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const NodeId n = 20 + rng.UniformIndex(60);
    const Graph g = Graph::FromEdges(n, testing::RandomEdges(rng, n, 2.0 / n));
    if (g.edge_count() == 0) continue;
    auto one = SampleAverageDistance(g, 10, trial, 1);
    auto four = SampleAverageDistance(g, 10, trial, 4);
    ASSERT_TRUE(one.ok());
    ASSERT_TRUE(four.ok());
    EXPECT_EQ(one->mean_distance, four->mean_distance);
    EXPECT_GE(one->mean_distance, 1.0);
    const auto giant = ConnectedComponents(g).sizes[0];
    EXPECT_EQ(one->reached_pairs, one->sources * (giant - 1));
  }
}

}  // namespace
}  // namespace collabnet
