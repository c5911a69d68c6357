// Copyright 2026 The Amalgam Authors
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

#include <algorithm>
#include <random>
#include <vector>

#include "amalgam/bee.hpp"
#include "amalgam/errors.hpp"
#include "amalgam_cli/instances.hpp"
#include "support/oracles.hpp"

namespace amalgam {
namespace {

using testing::brute_force_bee_exists;
using testing::oracle_bee;

TEST(KonigProper, PerfectMatchingOneColour) {
  BipartiteMultigraph g(3, 3);
  for (std::size_t i = 0; i < 3; ++i) g.add_edges(i, i);
  const auto c = konig_proper_coloring(g, 1);
  EXPECT_TRUE(is_proper(c));
  EXPECT_EQ(c.class_size(0), 3);
}

TEST(KonigProper, ParallelEdgesGetDistinctColours) {
  BipartiteMultigraph g(1, 1);
  g.add_edges(0, 0, 3);
  const auto c = konig_proper_coloring(g, 3);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c.count(0, 0, j), 1);
}

TEST(KonigProper, RandomInstancesAreProper) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::random_bipartite(rng, 6, 3);
    const auto k = static_cast<std::size_t>(g.max_degree());
    if (k == 0) continue;
    const auto c = konig_proper_coloring(g, k);
    ASSERT_TRUE(is_proper(c)) << "instance " << t;
    ASSERT_EQ(c.underlying(), g);
  }
}

TEST(KonigProper, TooFewColoursThrows) {
  BipartiteMultigraph g(1, 2);
  g.add_edges(0, 0);
  g.add_edges(0, 1);
  EXPECT_THROW(konig_proper_coloring(g, 1), PreconditionError);
}

TEST(BeeColoring, FiveParallelEdgesSplitThreeTwo) {
  BipartiteMultigraph g(1, 1);
  g.add_edges(0, 0, 5);
  const auto c = bee_coloring(g, 2);
  std::vector<Count> counts{c.count(0, 0, 0), c.count(0, 0, 1)};
  std::sort(counts.begin(), counts.end());
  EXPECT_EQ(counts, (std::vector<Count>{2, 3}));
}

TEST(BeeColoring, StarCentreGetsEachColourTwice) {
  BipartiteMultigraph g(1, 6);
  for (std::size_t r = 0; r < 6; ++r) g.add_edges(0, r);
  const auto c = bee_coloring(g, 3);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c.left_degree(0, j), 2);
}

TEST(BeeColoring, SmallInstanceMatchesExhaustiveSearch) {
  BipartiteMultigraph g(2, 2);
  g.add_edges(0, 0, 3);
  g.add_edges(0, 1, 1);
  g.add_edges(1, 0, 2);
  ASSERT_TRUE(brute_force_bee_exists(g, 2));
  const auto c = bee_coloring(g, 2);
  EXPECT_TRUE(oracle_bee(g, c));
  EXPECT_EQ(c.class_size(0), 3);
  EXPECT_EQ(c.class_size(1), 3);
}

TEST(BeeColoring, ZeroColoursThrows) {
  BipartiteMultigraph g(1, 1);
  EXPECT_THROW(bee_coloring(g, 0), PreconditionError);
}

TEST(BeeColoring, RandomInstancesPassPredicatesAndOracle) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const auto g = gen::random_bipartite(rng, 8, 6);
    const auto k = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto c = bee_coloring(g, k);
    ASSERT_EQ(c.underlying(), g) << "instance " << t;
    ASSERT_TRUE(is_balanced(c) && is_equitable(c) && is_equalized(c)) << "instance " << t;
    ASSERT_TRUE(oracle_bee(g, c)) << "instance " << t;
  }
}

TEST(BeeTwoSplit, HalvesAreBalancedEquitableEqualized) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::random_bipartite(rng, 6, 5);
    const auto half = bee_two_split(g);
    BipartiteColoring c(g.left_count(), g.right_count(), 2);
    for (const auto& [pair, m] : g.edges()) {
      c.add(pair.first, pair.second, 0, half.multiplicity(pair.first, pair.second));
      c.add(pair.first, pair.second, 1, m - half.multiplicity(pair.first, pair.second));
    }
    ASSERT_TRUE(oracle_bee(g, c)) << "instance " << t;
  }
}

TEST(Predicates, SingleColourIsAlwaysFine) {
  BipartiteMultigraph g(2, 2);
  g.add_edges(0, 0);
  g.add_edges(1, 1);
  BipartiteColoring c(2, 2, 1);
  c.add(0, 0, 0);
  c.add(1, 1, 0);
  EXPECT_TRUE(is_balanced(c));
  EXPECT_TRUE(is_equitable(c));
  EXPECT_TRUE(is_equalized(c));
}

TEST(Predicates, UnbalancedPair) {
  BipartiteColoring c(1, 1, 2);
  c.add(0, 0, 0, 3);
  c.add(0, 0, 1, 1);
  EXPECT_FALSE(is_balanced(c));
}

TEST(Predicates, InequitableVertex) {
  BipartiteColoring c(1, 5, 2);
  for (std::size_t r = 0; r < 4; ++r) c.add(0, r, 0);
  c.add(0, 4, 1);
  EXPECT_TRUE(is_balanced(c));
  EXPECT_FALSE(is_equitable(c));
}

TEST(Predicates, EqualizedClassSizes) {
  BipartiteColoring good(7, 1, 3);
  BipartiteColoring bad(7, 1, 3);
  const std::size_t good_colors[] = {0, 0, 0, 1, 1, 2, 2};
  const std::size_t bad_colors[] = {0, 0, 0, 0, 1, 1, 2};
  for (std::size_t l = 0; l < 7; ++l) {
    good.add(l, 0, good_colors[l]);
    bad.add(l, 0, bad_colors[l]);
  }
  EXPECT_TRUE(is_equalized(good));
  EXPECT_FALSE(is_equalized(bad));
}

}  // namespace
}  // namespace amalgam
