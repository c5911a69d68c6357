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

#include "amalgam/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "amalgam/engine.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/evencolor.hpp"

namespace amalgam {
namespace {

std::string num(Count c) { return std::to_string(c); }

void check_params(const GddParams& params) {
  if (params.sizes.empty()) throw DomainError("a multipartite graph needs at least one part");
  for (Count a : params.sizes) {
    if (a < 1) throw DomainError("part sizes must be positive, got " + num(a));
  }
  if (params.lambda1 < 0 || params.lambda2 < 0) {
    throw DomainError("multiplicities must be non-negative");
  }
}

void add_cycle(Multigraph& g, const std::vector<VertexId>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) g.add_edges(cycle[i], cycle[(i + 1) % cycle.size()]);
}

Feasibility yes(Count cycles, std::string label) {
  Feasibility f;
  f.feasible = true;
  f.cycles = cycles;
  f.label = std::move(label);
  return f;
}

Feasibility no(std::string label, std::string reason) {
  Feasibility f;
  f.label = label;
  f.violated.push_back(std::move(label));
  f.reason = std::move(reason);
  return f;
}

// Hamiltonian decomposition of lambda K_n on vertex ids 0..n-1, or of the
// one-vertex graph (no cycles).
Feasibility complete_case(Count n, Count lambda, const char* label) {
  if (n == 1) return yes(0, label);
  if (lambda == 0) return no(label, "the graph has no edges and is disconnected");
  if (lambda * (n - 1) % 2 != 0) {
    return no(label, "every vertex has odd degree " + num(lambda * (n - 1)));
  }
  return yes(lambda * (n - 1) / 2, label);
}

}  // namespace

Count GddParams::order() const { return std::accumulate(sizes.begin(), sizes.end(), Count{0}); }

GddParams GddParams::canonical() const {
  GddParams out = *this;
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

Multigraph complete_multigraph(Count n, Count lambda) {
  if (n < 0 || lambda < 0) throw DomainError("order and multiplicity must be non-negative");
  Multigraph g(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) g.add_edges(u, v, lambda);
  }
  return g;
}

Multigraph make_gdd(const GddParams& params) {
  check_params(params);
  const auto parts = gdd_partition(params);
  Multigraph g(static_cast<std::size_t>(params.order()));
  std::vector<std::size_t> part_of(g.vertex_count());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (VertexId v : parts[i]) part_of[v] = i;
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      g.add_edges(u, v, part_of[u] == part_of[v] ? params.lambda1 : params.lambda2);
    }
  }
  return g;
}

std::vector<std::vector<VertexId>> gdd_partition(const GddParams& params) {
  check_params(params);
  std::vector<std::vector<VertexId>> parts;
  VertexId next = 0;
  for (Count a : params.sizes) {
    auto& part = parts.emplace_back();
    for (Count t = 0; t < a; ++t) part.push_back(next++);
  }
  return parts;
}

HamDecomposition walecki_odd(Count n) {
  if (n < 3 || n % 2 == 0) {
    throw PreconditionError("Walecki's construction needs an odd order >= 3, got " + num(n));
  }
  const Count m = (n - 1) / 2;
  const auto mod = [m](Count x) { return static_cast<VertexId>(((x % (2 * m)) + 2 * m) % (2 * m)); };
  HamDecomposition d{complete_multigraph(n, 1), {}};
  for (Count i = 0; i < m; ++i) {
    std::vector<VertexId> cycle{static_cast<VertexId>(2 * m), mod(i)};
    for (Count t = 1; t < m; ++t) {
      cycle.push_back(mod(i + t));
      cycle.push_back(mod(i - t));
    }
    cycle.push_back(mod(i + m));
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

HamDecomposition ham_decompose_lambda_kn(Count n, Count lambda) {
  if (n < 2 || lambda < 1) {
    throw PreconditionError("need n >= 2 and lambda >= 1, got n = " + num(n) +
                            ", lambda = " + num(lambda));
  }
  if (lambda * (n - 1) % 2 != 0) {
    throw InfeasibleError("lambda(n-1) odd", "lambda K_n with lambda(n-1) = " +
                                                 num(lambda * (n - 1)) +
                                                 " odd has no Hamiltonian decomposition");
  }
  const Count classes = lambda * (n - 1) / 2;
  ColoredMultigraph host(1, static_cast<std::size_t>(classes));
  for (std::size_t j = 0; j < host.colors(); ++j) host.layer(j).add_edges(0, 0, n);

  const auto result = detach_all(host, AmalgamationSpec{{n}});
  HamDecomposition d{complete_multigraph(n, lambda), {}};
  for (const auto& layer : result.graph.layers()) d.cycles.push_back(extract_cycle(layer));
  return d;
}

Feasibility gdd_feasible(const GddParams& params) {
  if (params.sizes.empty() || params.lambda1 < 0 || params.lambda2 < 0 ||
      std::any_of(params.sizes.begin(), params.sizes.end(), [](Count a) { return a < 1; })) {
    return no("invalid parameters", "need at least one part, positive sizes and "
                                    "non-negative multiplicities");
  }
  const Count p = static_cast<Count>(params.parts());
  if (p == 1) return complete_case(params.sizes[0], params.lambda1, "trivial case (i)");
  if (params.lambda2 == 0) {
    return no("trivial case (ii)", "no edges join different parts, so the graph is disconnected");
  }
  if (std::all_of(params.sizes.begin(), params.sizes.end(), [](Count a) { return a == 1; })) {
    return complete_case(p, params.lambda2, "trivial case (iii)");
  }
  if (params.lambda1 == params.lambda2) {
    return complete_case(params.order(), params.lambda1, "trivial case (iv)");
  }

  Feasibility f;
  const Count a = params.sizes[0];
  if (std::any_of(params.sizes.begin(), params.sizes.end(), [a](Count x) { return x != a; })) {
    f.violated.emplace_back("condition (i)");
    f.reason = "parts have different sizes, so vertex degrees differ";
  } else {
    const Count degree = params.lambda1 * (a - 1) + params.lambda2 * a * (p - 1);
    if (degree % 2 != 0) {
      f.violated.emplace_back("condition (ii)");
      f.reason = "every vertex has odd degree " + num(degree);
    }
    if (params.lambda1 > params.lambda2 * a * (p - 1)) {
      f.violated.emplace_back("condition (iii)");
      if (f.reason.empty()) {
        f.reason = "lambda1 = " + num(params.lambda1) + " exceeds lambda2 a (p-1) = " +
                   num(params.lambda2 * a * (p - 1));
      }
    }
    if (f.violated.empty()) return yes(degree / 2, "conditions (i)-(iii)");
  }
  f.label = f.violated.front();
  return f;
}

HamDecomposition ham_decompose_gdd(const GddParams& params) {
  const auto feasibility = gdd_feasible(params);
  if (!feasibility.feasible) throw InfeasibleError(feasibility.label, feasibility.reason);

  const Count p = static_cast<Count>(params.parts());
  HamDecomposition out{make_gdd(params), {}};
  if (feasibility.cycles == 0) return out;
  if (p == 1 || params.lambda1 == params.lambda2 ||
      std::all_of(params.sizes.begin(), params.sizes.end(), [](Count x) { return x == 1; })) {
    out.cycles = ham_decompose_lambda_kn(static_cast<Count>(out.host.vertex_count()),
                                         p == 1 ? params.lambda1 : params.lambda2)
                     .cycles;
    return out;
  }

  const Count a = params.sizes[0];
  const Count k = feasibility.cycles;
  const auto outer = ham_decompose_lambda_kn(p, params.lambda2 * a * a);
  if (static_cast<Count>(outer.cycles.size()) < k) {
    throw InvariantViolation("only " + num(static_cast<Count>(outer.cycles.size())) +
                             " cycles available for " + num(k) + " colours");
  }

  ColoredMultigraph host(static_cast<std::size_t>(p), static_cast<std::size_t>(k));
  Multigraph rest(static_cast<std::size_t>(p));
  for (VertexId y = 0; y < rest.vertex_count(); ++y) rest.add_edges(y, y, params.lambda1 * choose2(a));
  for (std::size_t c = 0; c < outer.cycles.size(); ++c) {
    add_cycle(c < host.colors() ? host.layer(c) : rest, outer.cycles[c]);
  }
  const auto shares = evenly_equitable_coloring(rest, host.colors());
  for (std::size_t j = 0; j < host.colors(); ++j) {
    for (VertexId y = 0; y < rest.vertex_count(); ++y) {
      host.layer(j).add_edges(y, y, shares.layer(j).loops(y));
    }
    for (const auto& e : shares.layer(j).edges()) host.layer(j).add_edges(e.u, e.v, e.multiplicity);
  }

  const auto result = detach_all(host, AmalgamationSpec{std::vector<Count>(host.vertex_count(), a)});
  std::vector<VertexId> relabel(result.graph.vertex_count());
  for (VertexId w = 0; w < result.map.fibers.size(); ++w) {
    for (std::size_t t = 0; t < result.map.fibers[w].size(); ++t) {
      relabel[result.map.fibers[w][t]] = w * static_cast<VertexId>(a) + t;
    }
  }
  for (const auto& layer : result.graph.layers()) {
    Multigraph cycle(layer.vertex_count());
    for (const auto& e : layer.edges()) cycle.add_edges(relabel[e.u], relabel[e.v], e.multiplicity);
    out.cycles.push_back(extract_cycle(cycle));
  }
  return out;
}

std::vector<VertexId> extract_cycle(const Multigraph& cycle_graph) {
  const std::size_t n = cycle_graph.vertex_count();
  if (n < 2) throw InvariantViolation("a Hamiltonian cycle needs at least two vertices");
  for (VertexId v = 0; v < n; ++v) {
    if (cycle_graph.loops(v) != 0 || cycle_graph.degree(v) != 2) {
      throw InvariantViolation("vertex " + std::to_string(v) +
                               " is not of degree 2 in a loopless colour class");
    }
  }
  if (n == 2) return {0, 1};

  std::vector<VertexId> cycle{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  for (std::size_t i = 1; i < n; ++i) {
    const auto& adj = cycle_graph.adjacency(cycle.back());
    auto next = std::find_if(adj.begin(), adj.end(), [&](const auto& e) { return !used[e.first]; });
    if (next == adj.end()) {
      throw InvariantViolation("colour class closes a cycle of length " + std::to_string(i) +
                               " on " + std::to_string(n) + " vertices");
    }
    used[next->first] = true;
    cycle.push_back(next->first);
  }
  if (cycle_graph.multiplicity(cycle.back(), 0) == 0) {
    throw InvariantViolation("colour class is not a single cycle");
  }
  return cycle;
}

}  // namespace amalgam
