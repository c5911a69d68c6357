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

#include <functional>
#include <random>
#include <vector>

#include "amalgam/errors.hpp"
#include "amalgam/evencolor.hpp"
#include "amalgam/hamilton.hpp"
#include "amalgam/verify.hpp"
#include "amalgam_cli/instances.hpp"
#include "support/oracles.hpp"

namespace amalgam {
namespace {

Multigraph cycle(std::size_t n) {
  Multigraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edges(v, (v + 1) % n);
  return g;
}

// Replays the circuit and checks it uses every edge of the root's component
// exactly once.
void expect_valid_circuit(const Multigraph& g, VertexId root, const EulerCircuit& c) {
  Multigraph used(g.vertex_count());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto [a, b] = c.steps[i];
    used.add_edges(a, b);
    const auto next = c.steps[(i + 1) % c.steps.size()];
    ASSERT_EQ(b, next.first);
  }
  const auto labels = component_labels(g);
  Multigraph want(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (labels[v] == labels[root]) want.add_edges(v, v, g.loops(v));
  }
  for (const auto& e : g.edges()) {
    if (labels[e.u] == labels[root]) want.add_edges(e.u, e.v, e.multiplicity);
  }
  EXPECT_EQ(used, want);
  if (!c.steps.empty()) EXPECT_EQ(c.steps.front().first, root);
}

TEST(EulerCircuit, Triangle) {
  const auto g = cycle(3);
  const auto c = euler_circuit(g, 0);
  EXPECT_EQ(c.steps.size(), 3U);
  expect_valid_circuit(g, 0, c);
}

TEST(EulerCircuit, LoopsOnly) {
  Multigraph g(1);
  g.add_edges(0, 0, 2);
  const auto c = euler_circuit(g, 0);
  ASSERT_EQ(c.steps.size(), 2U);
  EXPECT_EQ(c.steps[0], (std::pair<VertexId, VertexId>{0, 0}));
}

TEST(EulerCircuit, OddVertexThrows) {
  Multigraph g(2);
  g.add_edges(0, 1);
  EXPECT_THROW(euler_circuit(g, 0), PreconditionError);
}

TEST(EulerCircuit, RandomEvenGraphs) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::random_even_graph(rng);
    const auto root = static_cast<VertexId>(
        gen::uniform(rng, 0, static_cast<Count>(g.vertex_count()) - 1));
    expect_valid_circuit(g, root, euler_circuit(g, root));
  }
}

void expect_two_factors(const Multigraph& g, const std::vector<Multigraph>& factors) {
  Multigraph sum(g.vertex_count());
  for (const auto& f : factors) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(f.degree(v), 2);
    for (const auto& e : f.edges()) sum.add_edges(e.u, e.v, e.multiplicity);
    EXPECT_EQ(f.loop_count(), 0);
  }
  EXPECT_EQ(sum, g);
}

TEST(TwoFactorization, CycleIsItsOwnFactor) {
  const auto g = cycle(4);
  const auto f = two_factorization(g);
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f[0], g);
}

TEST(TwoFactorization, CompleteGraphOnFive) {
  const auto g = complete_multigraph(5, 1);
  const auto f = two_factorization(g);
  ASSERT_EQ(f.size(), 2U);
  expect_two_factors(g, f);
}

TEST(TwoFactorization, DoubledTriangle) {
  const auto g = complete_multigraph(3, 2);
  const auto f = two_factorization(g);
  ASSERT_EQ(f.size(), 2U);
  expect_two_factors(g, f);
  EXPECT_EQ(f[0], cycle(3));
  EXPECT_EQ(f[1], cycle(3));
}

TEST(TwoFactorization, RejectsIrregularOrLoopedGraphs) {
  Multigraph g = cycle(3);
  g.add_edges(0, 0);
  EXPECT_THROW(two_factorization(g), PreconditionError);
  EXPECT_THROW(two_factorization(complete_multigraph(4, 1)), PreconditionError);
}

TEST(EvenlyEquitable, HexagonGoesIntoOneClass) {
  const auto g = cycle(6);
  const auto c = evenly_equitable_coloring(g, 2);
  EXPECT_TRUE(is_evenly_equitable(g, c).ok);
  const bool first = c.layer(0) == g && c.layer(1) == Multigraph(6);
  const bool second = c.layer(1) == g && c.layer(0) == Multigraph(6);
  EXPECT_TRUE(first || second);
}

TEST(EvenlyEquitable, FourRegularSplitsEvenly) {
  const auto g = complete_multigraph(5, 1);
  const auto c = evenly_equitable_coloring(g, 2);
  ASSERT_TRUE(is_evenly_equitable(g, c).ok);
  for (std::size_t j = 0; j < 2; ++j) {
    for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(c.layer(j).degree(v), 2);
  }
}

// Every way of splitting the ten edges of K_5 into two classes: the
// evenly-equitable ones are exactly the splits into two 2-regular halves.
TEST(EvenlyEquitable, CompleteGraphOnFiveAgainstExhaustiveSearch) {
  const auto g = complete_multigraph(5, 1);
  const auto edges = g.edges();
  int valid = 0;
  for (unsigned mask = 0; mask < (1U << edges.size()); ++mask) {
    ColoredMultigraph c(5, 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      c.layer((mask >> i) & 1U).add_edges(edges[i].u, edges[i].v);
    }
    if (is_evenly_equitable(g, c).ok) {
      ++valid;
      for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(c.layer(0).degree(v), 2);
    }
  }
  // K_5 has 12 Hamiltonian cycles and no other 2-factor; each may be colour 0.
  EXPECT_EQ(valid, 12);
  const auto c = evenly_equitable_coloring(g, 2);
  EXPECT_TRUE(is_evenly_equitable(g, c).ok);
}

TEST(EvenlyEquitable, RandomEvenGraphs) {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::random_even_graph(rng);
    const auto k = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto c = evenly_equitable_coloring(g, k);
    const auto r = is_evenly_equitable(g, c);
    ASSERT_TRUE(r.ok) << "instance " << t << ": " << r.witness;
  }
}

TEST(EvenlyEquitable, OddVertexThrows) {
  Multigraph g(2);
  g.add_edges(0, 1);
  EXPECT_THROW(evenly_equitable_coloring(g, 2), PreconditionError);
}

TEST(EvenTwoSplit, PartsAreEvenAndClose) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::random_even_graph(rng);
    const auto first = even_two_split(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Count a = first.degree(v);
      const Count b = g.degree(v) - a;
      ASSERT_EQ(a % 2, 0);
      ASSERT_EQ(b % 2, 0);
      ASSERT_LE(std::abs(a - b), 2);
      ASSERT_LE(first.loops(v), g.loops(v));
    }
    for (const auto& e : first.edges()) ASSERT_LE(e.multiplicity, g.multiplicity(e.u, e.v));
  }
}

}  // namespace
}  // namespace amalgam
