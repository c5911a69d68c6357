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

#include "amalgam_cli/instances.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace amalgam::gen {
namespace {

// Tries to build a colour class with degree 2*c(v)*eta(v) at every vertex
// by pairing stubs at random. Returns false if the caps or the loop guard
// cannot be met within a few attempts.
bool structured_color(std::mt19937_64& rng, const InstanceLimits& limits,
                      const AmalgamationSpec& eta, const Multigraph& used, Multigraph& out) {
  const std::size_t n = used.vertex_count();
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < n; ++v) {
      const Count c = uniform(rng, 0, eta.eta[v] >= 3 ? 1 : 2);
      for (Count s = 0; s < 2 * c * eta.eta[v]; ++s) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Multigraph layer(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
      const VertexId u = stubs[i];
      const VertexId v = stubs[i + 1];
      if (u == v) {
        ok = eta.eta[u] >= 2 && used.loops(u) + layer.loops(u) < limits.max_loops;
      } else {
        ok = used.multiplicity(u, v) + layer.multiplicity(u, v) < limits.max_multiplicity;
      }
      if (ok) layer.add_edges(u, v);
    }
    if (ok) {
      out = std::move(layer);
      return true;
    }
  }
  return false;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const InstanceLimits& limits) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<Count>(limits.max_vertices)));
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Count>(limits.max_colors)));
  Instance inst{ColoredMultigraph(n, k), {}};
  for (std::size_t v = 0; v < n; ++v) inst.eta.eta.push_back(uniform(rng, 1, limits.max_eta));

  Multigraph used(n);
  std::vector<bool> structured(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    if (uniform(rng, 0, 1) == 0) continue;
    Multigraph layer;
    if (structured_color(rng, limits, inst.eta, used, layer)) {
      structured[j] = true;
      inst.graph.layer(j) = layer;
      for (VertexId v = 0; v < n; ++v) used.add_edges(v, v, layer.loops(v));
      for (const auto& e : layer.edges()) used.add_edges(e.u, e.v, e.multiplicity);
    }
  }

  std::vector<std::size_t> free_colors;
  for (std::size_t j = 0; j < k; ++j) {
    if (!structured[j]) free_colors.push_back(j);
  }
  if (free_colors.empty()) return inst;
  auto pick = [&] {
    return free_colors[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<Count>(free_colors.size()) - 1))];
  };
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform(rng, 0, 9) < 4) continue;
      const Count m = uniform(rng, 0, limits.max_multiplicity - used.multiplicity(u, v));
      for (Count i = 0; i < m; ++i) inst.graph.layer(pick()).add_edges(u, v);
    }
    if (inst.eta.eta[u] >= 2 && uniform(rng, 0, 2) != 0) {
      const Count l = uniform(rng, 0, limits.max_loops - used.loops(u));
      for (Count i = 0; i < l; ++i) inst.graph.layer(pick()).add_edges(u, u);
    }
  }
  return inst;
}

BipartiteMultigraph random_bipartite(std::mt19937_64& rng, std::size_t max_side,
                                     Count max_multiplicity) {
  const auto left = static_cast<std::size_t>(uniform(rng, 1, static_cast<Count>(max_side)));
  const auto right = static_cast<std::size_t>(uniform(rng, 1, static_cast<Count>(max_side)));
  const Count density = uniform(rng, 1, 9);
  BipartiteMultigraph g(left, right);
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      if (uniform(rng, 0, 9) < density) g.add_edges(l, r, uniform(rng, 1, max_multiplicity));
    }
  }
  return g;
}

Multigraph random_even_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<Count>(max_vertices)));
  Multigraph g(n);
  if (n >= 3 && uniform(rng, 0, 2) == 0) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    for (Count r = uniform(rng, 1, 4); r > 0; --r) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i = 0; i < n; ++i) g.add_edges(order[i], order[(i + 1) % n]);
    }
    return g;
  }
  for (Count walks = uniform(rng, 0, 8); walks > 0; --walks) {
    const Count length = uniform(rng, 1, 6);
    std::vector<VertexId> walk;
    for (Count i = 0; i < length; ++i) {
      walk.push_back(static_cast<VertexId>(uniform(rng, 0, static_cast<Count>(n) - 1)));
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      g.add_edges(walk[i], walk[(i + 1) % walk.size()]);
    }
  }
  return g;
}

}  // namespace amalgam::gen
