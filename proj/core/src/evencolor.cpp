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

#include "amalgam/evencolor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "amalgam/bee.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

EulerCircuit euler_circuit(const Multigraph& g, VertexId root) {
  if (root >= g.vertex_count()) throw DomainError("unknown vertex " + std::to_string(root));

  const auto label = component_labels(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (label[v] == label[root] && g.degree(v) % 2 != 0) {
      throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " +
                              std::to_string(g.degree(v)));
    }
  }

  std::vector<Count> loops(g.vertex_count());
  std::vector<std::map<VertexId, Count>> rest(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (label[v] != label[root]) continue;
    loops[v] = g.loops(v);
    rest[v] = g.adjacency(v);
  }

  std::vector<VertexId> stack{root};
  std::vector<VertexId> walk;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    auto next = rest[x].begin();
    const bool take_loop = loops[x] > 0 && (next == rest[x].end() || x < next->first);
    if (take_loop) {
      --loops[x];
      stack.push_back(x);
    } else if (next != rest[x].end()) {
      const VertexId u = next->first;
      if (--next->second == 0) rest[x].erase(next);
      if (--rest[u][x] == 0) rest[u].erase(x);
      stack.push_back(u);
    } else {
      walk.push_back(x);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());

  EulerCircuit circuit;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) circuit.steps.emplace_back(walk[i], walk[i + 1]);
  return circuit;
}

namespace {

void require_even(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " +
                              std::to_string(g.degree(v)));
    }
  }
}

// Arc multiplicities (tail, head) of an Euler orientation of an even graph.
// A loop becomes the arc (v, v).
std::map<std::pair<VertexId, VertexId>, Count> euler_orientation(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, Count> arcs;
  const auto label = component_labels(g);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (label[root] != root || g.degree(root) == 0) continue;
    for (const auto& step : euler_circuit(g, root).steps) ++arcs[step];
  }
  return arcs;
}

}  // namespace

std::vector<Multigraph> two_factorization(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  if (g.loop_count() != 0) throw PreconditionError("two_factorization needs a loopless graph");
  const Count d = g.degree(0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != d) {
      throw PreconditionError("graph is not regular: vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)) + ", vertex 0 has " +
                              std::to_string(d));
    }
  }
  if (d % 2 != 0) throw PreconditionError("regular degree " + std::to_string(d) + " is odd");
  if (d == 0) return {};

  const std::size_t factors = static_cast<std::size_t>(d / 2);
  BipartiteMultigraph out_in(n, n);
  for (const auto& [arc, m] : euler_orientation(g)) out_in.add_edges(arc.first, arc.second, m);
  const auto matchings = konig_proper_coloring(out_in, factors);

  std::vector<Multigraph> result(factors, Multigraph(n));
  for (const auto& [pair, per_color] : matchings.pairs()) {
    for (std::size_t c = 0; c < factors; ++c) {
      result[c].add_edges(pair.first, pair.second, per_color[c]);
    }
  }
  return result;
}

Multigraph even_two_split(const Multigraph& g) {
  require_even(g);
  const std::size_t n = g.vertex_count();

  // Out-copies are 0..n-1 and in-copies n..2n-1. An Euler orientation gives
  // every vertex equal in- and out-degree h = d/2; a dummy arc (v, v) tops up
  // odd h so that the auxiliary graph is even.
  Multigraph aux(2 * n);
  for (const auto& [arc, m] : euler_orientation(g)) aux.add_edges(arc.first, n + arc.second, m);
  std::vector<bool> dummy(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if ((g.degree(v) / 2) % 2 == 1) {
      aux.add_edges(v, n + v);
      dummy[v] = true;
    }
  }

  // Alternating along even circuits halves the degree of every copy.
  std::map<std::pair<VertexId, VertexId>, Count> first;
  const auto label = component_labels(aux);
  for (VertexId root = 0; root < 2 * n; ++root) {
    if (label[root] != root || aux.degree(root) == 0) continue;
    const auto circuit = euler_circuit(aux, root);
    for (std::size_t t = 0; t < circuit.steps.size(); t += 2) {
      auto [x, y] = circuit.steps[t];
      if (x > y) std::swap(x, y);
      ++first[{x, y - n}];
    }
  }

  // Dropping the dummy from whichever part holds an edge of the pair (v, v)
  // lowers the out- and in-degree of v in that part together.
  for (VertexId v = 0; v < n; ++v) {
    if (!dummy[v]) continue;
    auto it = first.find({v, v});
    if (it != first.end() && it->second > 0) --it->second;
  }

  Multigraph part(n);
  for (const auto& [arc, m] : first) part.add_edges(arc.first, arc.second, m);
  return part;
}

ColoredMultigraph evenly_equitable_coloring(const Multigraph& g, std::size_t colors) {
  if (colors == 0) throw PreconditionError("evenly-equitable colouring needs at least one colour");
  require_even(g);
  const std::size_t n = g.vertex_count();
  ColoredMultigraph out(n, colors);

  bool regular_loopless = n > 0 && g.loop_count() == 0 && g.degree(0) > 0;
  for (VertexId v = 0; regular_loopless && v < n; ++v) regular_loopless = g.degree(v) == g.degree(0);
  if (regular_loopless) {
    const auto factors = two_factorization(g);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      for (const auto& e : factors[f].edges()) out.layer(f % colors).add_edges(e.u, e.v, e.multiplicity);
    }
    return out;
  }

  out.layer(0) = g;
  // Re-splitting two colours with even_two_split lowers the sum of squared
  // colour degrees at the offending vertex and raises it nowhere.
  auto violates = [&](std::size_t a, std::size_t b) {
    for (VertexId v = 0; v < n; ++v) {
      if (std::abs(out.layer(a).degree(v) - out.layer(b).degree(v)) > 2) return true;
    }
    return false;
  };
  const Count edges = g.edge_count();
  const Count cap = 4 * (edges + 1) * (edges + 1) * static_cast<Count>(colors) + 64;
  Count rounds = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < colors; ++a) {
      for (std::size_t b = a + 1; b < colors; ++b) {
        if (!violates(a, b)) continue;
        if (++rounds > cap) throw InvariantViolation("evenly-equitable colouring failed to converge");
        Multigraph merged = out.layer(a);
        const Multigraph& other = out.layer(b);
        for (VertexId v = 0; v < n; ++v) merged.add_edges(v, v, other.loops(v));
        for (const auto& e : other.edges()) merged.add_edges(e.u, e.v, e.multiplicity);
        Multigraph first = even_two_split(merged);
        Multigraph second = merged;
        for (VertexId v = 0; v < n; ++v) second.remove_edges(v, v, first.loops(v));
        for (const auto& e : first.edges()) second.remove_edges(e.u, e.v, e.multiplicity);
        out.layer(a) = std::move(first);
        out.layer(b) = std::move(second);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace amalgam
