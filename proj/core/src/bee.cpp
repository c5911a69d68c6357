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

#include "amalgam/bee.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "amalgam/errors.hpp"
#include "amalgam/evencolor.hpp"

namespace amalgam {

BipartiteMultigraph::BipartiteMultigraph(std::size_t left_count, std::size_t right_count)
    : left_count_(left_count), right_count_(right_count) {}

std::size_t BipartiteMultigraph::add_left() { return left_count_++; }
std::size_t BipartiteMultigraph::add_right() { return right_count_++; }

void BipartiteMultigraph::add_edges(std::size_t left, std::size_t right, Count count) {
  if (left >= left_count_ || right >= right_count_) {
    throw DomainError("bipartite edge (" + std::to_string(left) + "," + std::to_string(right) +
                      ") is outside the vertex sets");
  }
  if (count < 0) throw DomainError("negative edge count");
  if (count == 0) return;
  mult_[{left, right}] += count;
}

Count BipartiteMultigraph::multiplicity(std::size_t left, std::size_t right) const {
  auto it = mult_.find({left, right});
  return it == mult_.end() ? 0 : it->second;
}

Count BipartiteMultigraph::left_degree(std::size_t left) const {
  Count d = 0;
  for (auto it = mult_.lower_bound({left, 0}); it != mult_.end() && it->first.first == left; ++it) {
    d += it->second;
  }
  return d;
}

Count BipartiteMultigraph::right_degree(std::size_t right) const {
  Count d = 0;
  for (const auto& [pair, m] : mult_) {
    if (pair.second == right) d += m;
  }
  return d;
}

Count BipartiteMultigraph::max_degree() const {
  std::vector<Count> left(left_count_, 0);
  std::vector<Count> right(right_count_, 0);
  for (const auto& [pair, m] : mult_) {
    left[pair.first] += m;
    right[pair.second] += m;
  }
  Count best = 0;
  for (Count d : left) best = std::max(best, d);
  for (Count d : right) best = std::max(best, d);
  return best;
}

Count BipartiteMultigraph::edge_count() const {
  Count total = 0;
  for (const auto& [pair, m] : mult_) total += m;
  return total;
}

BipartiteColoring::BipartiteColoring(std::size_t left_count, std::size_t right_count,
                                     std::size_t colors)
    : left_count_(left_count), right_count_(right_count), colors_(colors) {
  if (colors == 0) throw PreconditionError("a colouring needs at least one colour");
}

void BipartiteColoring::add(std::size_t left, std::size_t right, std::size_t color,
                            Count count) {
  if (color >= colors_) throw DomainError("unknown colour " + std::to_string(color));
  if (left >= left_count_ || right >= right_count_) {
    throw DomainError("coloured edge is outside the vertex sets");
  }
  if (count == 0) return;
  auto& slot = counts_[{left, right}];
  slot.resize(colors_, 0);
  slot[color] += count;
}

Count BipartiteColoring::count(std::size_t left, std::size_t right, std::size_t color) const {
  auto it = counts_.find({left, right});
  if (it == counts_.end() || color >= colors_) return 0;
  return it->second[color];
}

Count BipartiteColoring::class_size(std::size_t color) const {
  Count total = 0;
  for (const auto& [pair, per_color] : counts_) total += per_color[color];
  return total;
}

Count BipartiteColoring::left_degree(std::size_t left, std::size_t color) const {
  Count d = 0;
  for (auto it = counts_.lower_bound({left, 0}); it != counts_.end() && it->first.first == left;
       ++it) {
    d += it->second[color];
  }
  return d;
}

Count BipartiteColoring::right_degree(std::size_t right, std::size_t color) const {
  Count d = 0;
  for (const auto& [pair, per_color] : counts_) {
    if (pair.second == right) d += per_color[color];
  }
  return d;
}

BipartiteMultigraph BipartiteColoring::underlying() const {
  BipartiteMultigraph g(left_count_, right_count_);
  for (const auto& [pair, per_color] : counts_) {
    for (Count m : per_color) g.add_edges(pair.first, pair.second, m);
  }
  return g;
}

BipartiteMultigraph BipartiteColoring::restrict_to(const std::vector<std::size_t>& colors) const {
  BipartiteMultigraph g(left_count_, right_count_);
  for (const auto& [pair, per_color] : counts_) {
    for (std::size_t c : colors) {
      if (c < colors_) g.add_edges(pair.first, pair.second, per_color[c]);
    }
  }
  return g;
}

BipartiteColoring konig_proper_coloring(const BipartiteMultigraph& graph, std::size_t colors) {
  if (colors == 0) throw PreconditionError("konig colouring needs at least one colour");
  if (graph.max_degree() > static_cast<Count>(colors)) {
    throw PreconditionError("max degree " + std::to_string(graph.max_degree()) +
                            " exceeds the " + std::to_string(colors) + " available colours");
  }
  const std::size_t left = graph.left_count();
  const std::size_t nodes = left + graph.right_count();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  struct Edge {
    std::size_t a;  // left node
    std::size_t b;  // right node, offset by `left`
    std::size_t color;
  };
  std::vector<Edge> edges;
  for (const auto& [pair, m] : graph.edges()) {
    for (Count i = 0; i < m; ++i) edges.push_back({pair.first, left + pair.second, kFree});
  }
  // at[node][color] = index of the edge of that colour at node, or kFree.
  std::vector<std::vector<std::size_t>> at(nodes, std::vector<std::size_t>(colors, kFree));
  auto lowest_free = [&](std::size_t node) {
    for (std::size_t c = 0; c < colors; ++c) {
      if (at[node][c] == kFree) return c;
    }
    throw InvariantViolation("no free colour at a vertex of degree <= k");
  };

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t u = edges[e].a;
    const std::size_t v = edges[e].b;
    const std::size_t alpha = lowest_free(u);
    if (at[v][alpha] != kFree) {
      const std::size_t beta = lowest_free(v);
      // Flip the alpha/beta path starting at v; it cannot reach u.
      std::vector<std::size_t> path;
      std::size_t x = v;
      std::size_t c = alpha;
      while (at[x][c] != kFree) {
        const std::size_t f = at[x][c];
        path.push_back(f);
        x = edges[f].a == x ? edges[f].b : edges[f].a;
        c = c == alpha ? beta : alpha;
      }
      for (std::size_t f : path) {
        at[edges[f].a][edges[f].color] = kFree;
        at[edges[f].b][edges[f].color] = kFree;
      }
      for (std::size_t f : path) {
        edges[f].color = edges[f].color == alpha ? beta : alpha;
        at[edges[f].a][edges[f].color] = f;
        at[edges[f].b][edges[f].color] = f;
      }
    }
    edges[e].color = alpha;
    at[u][alpha] = e;
    at[v][alpha] = e;
  }

  BipartiteColoring out(graph.left_count(), graph.right_count(), colors);
  for (const auto& e : edges) out.add(e.a, e.b - left, e.color);
  return out;
}

BipartiteMultigraph bee_two_split(const BipartiteMultigraph& graph) {
  const std::size_t left = graph.left_count();
  const std::size_t right = graph.right_count();
  BipartiteMultigraph first(left, right);

  // Parallel edges are shared out in pairs; what remains is a simple graph.
  const std::size_t dummy_left = left + right;
  const std::size_t dummy_right = left + right + 1;
  Multigraph aux(left + right + 2);
  std::vector<Count> parity(left + right, 0);
  for (const auto& [pair, m] : graph.edges()) {
    first.add_edges(pair.first, pair.second, m / 2);
    if (m % 2 == 1) {
      aux.add_edges(pair.first, left + pair.second);
      parity[pair.first] ^= 1;
      parity[left + pair.second] ^= 1;
    }
  }
  // Odd left vertices hang off a dummy on the right and vice versa, so the
  // auxiliary graph stays bipartite and every circuit has even length.
  Count odd_left = 0;
  for (std::size_t v = 0; v < left + right; ++v) {
    if (parity[v] == 0) continue;
    if (v < left) {
      aux.add_edges(v, dummy_right);
      ++odd_left;
    } else {
      aux.add_edges(v, dummy_left);
    }
  }
  if (odd_left % 2 == 1) aux.add_edges(dummy_left, dummy_right);

  const auto label = component_labels(aux);
  for (VertexId root = 0; root < left + right; ++root) {
    if (label[root] != root || aux.degree(root) == 0) continue;
    const auto circuit = euler_circuit(aux, root);
    for (std::size_t t = 0; t < circuit.steps.size(); t += 2) {
      auto [x, y] = circuit.steps[t];
      if (x >= left + right || y >= left + right) continue;
      if (x > y) std::swap(x, y);
      first.add_edges(x, y - left);
    }
  }
  return first;
}

namespace {

struct ColorCounts {
  std::vector<SidePair> pairs;
  std::vector<std::vector<Count>> per_pair;  // [pair][colour]
};

bool differ_by_more_than_one(Count a, Count b) { return std::abs(a - b) > 1; }

bool violates(const ColorCounts& state, std::size_t left, std::size_t right, std::size_t a,
              std::size_t b) {
  std::vector<Count> left_diff(left, 0);
  std::vector<Count> right_diff(right, 0);
  Count class_diff = 0;
  for (std::size_t p = 0; p < state.pairs.size(); ++p) {
    const Count diff = state.per_pair[p][a] - state.per_pair[p][b];
    if (std::abs(diff) > 1) return true;
    left_diff[state.pairs[p].first] += diff;
    right_diff[state.pairs[p].second] += diff;
    class_diff += diff;
  }
  if (differ_by_more_than_one(class_diff, 0)) return true;
  for (Count d : left_diff) {
    if (differ_by_more_than_one(d, 0)) return true;
  }
  for (Count d : right_diff) {
    if (differ_by_more_than_one(d, 0)) return true;
  }
  return false;
}

}  // namespace

BipartiteColoring bee_coloring(const BipartiteMultigraph& graph, std::size_t colors) {
  if (colors == 0) throw PreconditionError("bee colouring needs at least one colour");
  const std::size_t left = graph.left_count();
  const std::size_t right = graph.right_count();

  ColorCounts state;
  std::size_t next = 0;
  for (const auto& [pair, m] : graph.edges()) {
    state.pairs.push_back(pair);
    auto& slot = state.per_pair.emplace_back(colors, 0);
    for (Count i = 0; i < m; ++i) {
      ++slot[next];
      next = (next + 1) % colors;
    }
  }

  // Each re-split strictly lowers a bounded non-negative potential, so this
  // cap is only reached through a bug.
  const Count total = graph.edge_count();
  const Count cap = 4 * (total + 1) * (total + 1) * static_cast<Count>(colors) + 64;
  Count rounds = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < colors; ++a) {
      for (std::size_t b = a + 1; b < colors; ++b) {
        if (!violates(state, left, right, a, b)) continue;
        if (++rounds > cap) throw InvariantViolation("bee colouring failed to converge");
        BipartiteMultigraph merged(left, right);
        for (std::size_t p = 0; p < state.pairs.size(); ++p) {
          merged.add_edges(state.pairs[p].first, state.pairs[p].second,
                           state.per_pair[p][a] + state.per_pair[p][b]);
        }
        const auto first = bee_two_split(merged);
        for (std::size_t p = 0; p < state.pairs.size(); ++p) {
          const Count m = state.per_pair[p][a] + state.per_pair[p][b];
          const Count x = first.multiplicity(state.pairs[p].first, state.pairs[p].second);
          state.per_pair[p][a] = x;
          state.per_pair[p][b] = m - x;
        }
        changed = true;
      }
    }
  }

  BipartiteColoring out(left, right, colors);
  for (std::size_t p = 0; p < state.pairs.size(); ++p) {
    for (std::size_t c = 0; c < colors; ++c) {
      out.add(state.pairs[p].first, state.pairs[p].second, c, state.per_pair[p][c]);
    }
  }
  return out;
}

namespace {

// True iff, for every vector, max - min <= 1.
bool within_one(const std::vector<std::vector<Count>>& rows) {
  for (const auto& row : rows) {
    if (row.empty()) continue;
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    if (*hi - *lo > 1) return false;
  }
  return true;
}

}  // namespace

bool is_balanced(const BipartiteColoring& coloring) {
  std::vector<std::vector<Count>> rows;
  for (const auto& [pair, per_color] : coloring.pairs()) rows.push_back(per_color);
  return within_one(rows);
}

bool is_equitable(const BipartiteColoring& coloring) {
  const std::size_t k = coloring.colors();
  std::vector<std::vector<Count>> left(coloring.left_count(), std::vector<Count>(k, 0));
  std::vector<std::vector<Count>> right(coloring.right_count(), std::vector<Count>(k, 0));
  for (const auto& [pair, per_color] : coloring.pairs()) {
    for (std::size_t c = 0; c < k; ++c) {
      left[pair.first][c] += per_color[c];
      right[pair.second][c] += per_color[c];
    }
  }
  return within_one(left) && within_one(right);
}

bool is_equalized(const BipartiteColoring& coloring) {
  std::vector<Count> sizes(coloring.colors(), 0);
  for (std::size_t c = 0; c < coloring.colors(); ++c) sizes[c] = coloring.class_size(c);
  return within_one({sizes});
}

bool is_proper(const BipartiteColoring& coloring) {
  const std::size_t k = coloring.colors();
  std::vector<std::vector<Count>> left(coloring.left_count(), std::vector<Count>(k, 0));
  std::vector<std::vector<Count>> right(coloring.right_count(), std::vector<Count>(k, 0));
  for (const auto& [pair, per_color] : coloring.pairs()) {
    for (std::size_t c = 0; c < k; ++c) {
      left[pair.first][c] += per_color[c];
      right[pair.second][c] += per_color[c];
    }
  }
  for (const auto* side : {&left, &right}) {
    for (const auto& row : *side) {
      for (Count x : row) {
        if (x > 1) return false;
      }
    }
  }
  return true;
}

}  // namespace amalgam
