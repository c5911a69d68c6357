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

#include <vector>

#include "amalgam/errors.hpp"
#include "amalgam/hamilton.hpp"
#include "amalgam/verify.hpp"
#include "support/oracles.hpp"

namespace amalgam {
namespace {

using testing::brute_force_ham_decomposable;
using testing::cycles_cover_exactly;
using testing::to_matrix;

TEST(Walecki, SmallOddOrders) {
  for (Count n : {3, 5, 7, 9, 11}) {
    const auto d = walecki_odd(n);
    EXPECT_EQ(static_cast<Count>(d.cycles.size()), (n - 1) / 2);
    EXPECT_TRUE(cycles_cover_exactly(to_matrix(complete_multigraph(n, 1)), d.cycles)) << n;
    EXPECT_TRUE(verify_ham_decomposition(d.host, d).ok);
  }
}

TEST(Walecki, EvenOrderThrows) {
  EXPECT_THROW(walecki_odd(4), PreconditionError);
  EXPECT_THROW(walecki_odd(1), PreconditionError);
}

TEST(LambdaKn, Triangle) {
  const auto d = ham_decompose_lambda_kn(3, 1);
  ASSERT_EQ(d.cycles.size(), 1U);
  EXPECT_EQ(d.cycles[0], (std::vector<VertexId>{0, 1, 2}));
}

TEST(LambdaKn, CompleteGraphOnFive) {
  const auto d = ham_decompose_lambda_kn(5, 1);
  EXPECT_EQ(d.cycles.size(), 2U);
  EXPECT_TRUE(cycles_cover_exactly(to_matrix(complete_multigraph(5, 1)), d.cycles));
  EXPECT_TRUE(verify_ham_decomposition(d.host, walecki_odd(5)).ok);
}

TEST(LambdaKn, DoubledK4) {
  const auto d = ham_decompose_lambda_kn(4, 2);
  EXPECT_EQ(d.cycles.size(), 3U);
  EXPECT_TRUE(cycles_cover_exactly(to_matrix(complete_multigraph(4, 2)), d.cycles));
}

TEST(LambdaKn, TwoVerticesUseTwoCycles) {
  const auto d = ham_decompose_lambda_kn(2, 4);
  ASSERT_EQ(d.cycles.size(), 2U);
  EXPECT_TRUE(verify_ham_decomposition(d.host, d).ok);
}

TEST(LambdaKn, AllSmallCases) {
  for (Count n = 2; n <= 9; ++n) {
    for (Count lambda = 1; lambda <= 3; ++lambda) {
      if (lambda * (n - 1) % 2 != 0) {
        EXPECT_THROW(ham_decompose_lambda_kn(n, lambda), InfeasibleError) << n << "," << lambda;
        continue;
      }
      const auto d = ham_decompose_lambda_kn(n, lambda);
      EXPECT_EQ(static_cast<Count>(d.cycles.size()), lambda * (n - 1) / 2);
      EXPECT_TRUE(cycles_cover_exactly(to_matrix(complete_multigraph(n, lambda)), d.cycles))
          << n << "," << lambda;
    }
  }
}

TEST(GddFeasible, UnequalParts) {
  const auto f = gdd_feasible({{2, 3}, 1, 2});
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.label, "condition (i)");
}

TEST(GddFeasible, GeneralCaseCycleCount) {
  const auto f = gdd_feasible({{3, 3, 3}, 1, 2});
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.cycles, 7);
}

TEST(GddFeasible, ParityAndBoundBothFail) {
  const auto f = gdd_feasible({{2, 2}, 3, 1});
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.label, "condition (ii)");
  EXPECT_EQ(f.violated, (std::vector<std::string>{"condition (ii)", "condition (iii)"}));
}

TEST(GddFeasible, BoundAlone) {
  const auto f = gdd_feasible({{2, 2}, 4, 1});
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.violated, (std::vector<std::string>{"condition (iii)"}));
}

TEST(GddFeasible, CompleteBipartite) {
  const auto f = gdd_feasible({{2, 2}, 0, 1});
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.cycles, 1);
}

TEST(GddFeasible, TrivialCases) {
  EXPECT_EQ(gdd_feasible({{4}, 2, 0}).label, "trivial case (i)");
  EXPECT_TRUE(gdd_feasible({{4}, 2, 0}).feasible);
  EXPECT_FALSE(gdd_feasible({{4}, 1, 5}).feasible);
  EXPECT_EQ(gdd_feasible({{2, 2}, 1, 0}).label, "trivial case (ii)");
  EXPECT_FALSE(gdd_feasible({{2, 2}, 1, 0}).feasible);
  EXPECT_EQ(gdd_feasible({{1, 1, 1, 1}, 7, 2}).label, "trivial case (iii)");
  EXPECT_TRUE(gdd_feasible({{1, 1, 1, 1}, 7, 2}).feasible);
  EXPECT_FALSE(gdd_feasible({{1, 1, 1, 1}, 7, 1}).feasible);
  EXPECT_EQ(gdd_feasible({{2, 3}, 2, 2}).label, "trivial case (iv)");
  EXPECT_TRUE(gdd_feasible({{2, 3}, 2, 2}).feasible);
  EXPECT_FALSE(gdd_feasible({{2, 2}, 1, 1}).feasible);
}

TEST(GddFeasible, InvalidParametersAreInfeasible) {
  EXPECT_FALSE(gdd_feasible({{}, 1, 1}).feasible);
  EXPECT_FALSE(gdd_feasible({{0, 2}, 1, 1}).feasible);
}

// The predicate agrees with exhaustive search on every small instance.
TEST(GddFeasible, AgreesWithBruteForceOnSmallGraphs) {
  int checked = 0;
  for (const std::vector<Count>& sizes :
       std::vector<std::vector<Count>>{{2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2},
                                       {2, 3}, {1, 3}, {2, 2, 1}}) {
    for (Count l1 = 0; l1 <= 3; ++l1) {
      for (Count l2 = 0; l2 <= 2; ++l2) {
        const GddParams params{sizes, l1, l2};
        const auto g = make_gdd(params);
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        const bool want = brute_force_ham_decomposable(to_matrix(g));
        EXPECT_EQ(gdd_feasible(params).feasible, want)
            << "sizes " << sizes.size() << " l1 " << l1 << " l2 " << l2;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 40);
}

void expect_gdd_decomposition(const GddParams& params, Count cycles, bool general = true) {
  const auto d = ham_decompose_gdd(params);
  EXPECT_EQ(static_cast<Count>(d.cycles.size()), cycles);
  const auto parts = gdd_partition(params);
  EXPECT_TRUE(is_gdd(d.host, params, parts).ok);
  const auto r = verify_ham_decomposition(d.host, d);
  EXPECT_TRUE(r.ok) << r.witness;
  EXPECT_TRUE(cycles_cover_exactly(to_matrix(make_gdd(params)), d.cycles));
  if (general) {
    const auto b = check_cycle_counting_bounds(d, params, parts);
    EXPECT_TRUE(b.ok) << b.witness;
  }
}

TEST(GddDecompose, CompleteBipartiteIsAFourCycle) {
  const auto d = ham_decompose_gdd({{2, 2}, 0, 1});
  ASSERT_EQ(d.cycles.size(), 1U);
  EXPECT_EQ(d.cycles[0].size(), 4U);
  expect_gdd_decomposition({{2, 2}, 0, 1}, 1);
}

TEST(GddDecompose, GeneralCases) {
  expect_gdd_decomposition({{3, 3, 3}, 1, 2}, 7);
  expect_gdd_decomposition({{2, 2, 2}, 2, 1}, 3);
  expect_gdd_decomposition({{3, 3}, 1, 2}, 4);
  expect_gdd_decomposition({{2, 2}, 2, 1}, 2);
  expect_gdd_decomposition({{4, 4, 4}, 2, 1}, 7);
  expect_gdd_decomposition({{3, 3, 3, 3}, 0, 2}, 9);
  expect_gdd_decomposition({{5, 5}, 1, 2}, 7);
}

TEST(GddDecompose, TrivialCases) {
  expect_gdd_decomposition({{5}, 1, 0}, 2, false);
  expect_gdd_decomposition({{1, 1, 1, 1, 1}, 4, 1}, 2, false);
  expect_gdd_decomposition({{2, 3}, 2, 2}, 4, false);
  EXPECT_TRUE(ham_decompose_gdd({{1}, 3, 0}).cycles.empty());
}

TEST(GddDecompose, InfeasibleThrowsWithLabel) {
  try {
    ham_decompose_gdd({{2, 3}, 1, 2});
    FAIL() << "expected infeasibility";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.label(), "condition (i)");
  }
}

TEST(CountingBounds, EqualityCaseIsTight) {
  const GddParams params{{2, 2}, 2, 1};
  const auto d = ham_decompose_gdd(params);
  const auto parts = gdd_partition(params);
  for (const auto& c : d.cycles) {
    const auto profile = cycle_profile(c, parts);
    EXPECT_EQ(profile.pure_per_part, (std::vector<Count>{1, 1}));
    EXPECT_EQ(profile.mixed, 2);
  }
}

TEST(ExtractCycle, WalksSmallestNeighbourFirst) {
  Multigraph g(4);
  g.add_edges(0, 2);
  g.add_edges(2, 1);
  g.add_edges(1, 3);
  g.add_edges(3, 0);
  EXPECT_EQ(extract_cycle(g), (std::vector<VertexId>{0, 2, 1, 3}));
}

TEST(ExtractCycle, RejectsTwoTriangles) {
  Multigraph g(6);
  for (VertexId b : {0, 3}) {
    for (VertexId i = 0; i < 3; ++i) g.add_edges(b + i, b + (i + 1) % 3);
  }
  EXPECT_THROW(extract_cycle(g), InvariantViolation);
}

TEST(BruteForce, OracleFindsKnownDecompositions) {
  EXPECT_TRUE(brute_force_ham_decomposable(to_matrix(complete_multigraph(5, 1))));
  EXPECT_TRUE(brute_force_ham_decomposable(to_matrix(complete_multigraph(4, 2))));
  EXPECT_FALSE(brute_force_ham_decomposable(to_matrix(complete_multigraph(4, 1))));
  EXPECT_TRUE(brute_force_ham_decomposable(to_matrix(make_gdd({{2, 2}, 2, 1}))));
}

}  // namespace
}  // namespace amalgam
