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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace amalgam::testing {
namespace {

Count floor_div(Count a, Count b) { return a / b; }
Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }
bool within(Count x, Count a, Count b) { return floor_div(a, b) <= x && x <= ceil_div(a, b); }

Count deg(const Matrix& m, std::size_t v) {
  Count d = 2 * m[v][v];
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (u != v) d += m[v][u];
  }
  return d;
}

// Finds a Hamiltonian cycle through the edge {0, first} in `m`, removes it
// and recurses on the rest. Every cycle passes through vertex 0, so fixing
// the smallest neighbour of 0 as the first step loses no generality.
bool decompose(Matrix& m) {
  const std::size_t n = m.size();
  bool empty = true;
  for (std::size_t u = 0; u < n && empty; ++u) {
    for (std::size_t v = 0; v < n && empty; ++v) empty = m[u][v] == 0;
  }
  if (empty) return true;
  std::size_t first = n;
  for (std::size_t v = 1; v < n; ++v) {
    if (m[0][v] > 0) {
      first = v;
      break;
    }
  }
  if (first == n) return false;

  std::vector<std::size_t> path{0, first};
  std::vector<bool> on(n, false);
  on[0] = on[first] = true;
  m[0][first]--;
  m[first][0]--;
  std::function<bool()> extend = [&]() -> bool {
    const std::size_t last = path.back();
    if (path.size() == n) {
      if (m[last][0] == 0) return false;
      m[last][0]--;
      m[0][last]--;
      if (decompose(m)) return true;
      m[last][0]++;
      m[0][last]++;
      return false;
    }
    for (std::size_t v = 1; v < n; ++v) {
      if (on[v] || m[last][v] == 0) continue;
      m[last][v]--;
      m[v][last]--;
      on[v] = true;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      on[v] = false;
      m[last][v]++;
      m[v][last]++;
    }
    return false;
  };
  bool found = false;
  if (n == 2) {
    // A 2-cycle uses two parallel edges.
    if (m[0][1] > 0) {
      m[0][1]--;
      m[1][0]--;
      found = decompose(m);
      if (!found) {
        m[0][1]++;
        m[1][0]++;
      }
    }
  } else {
    found = extend();
  }
  if (!found) {
    m[0][first]++;
    m[first][0]++;
  }
  return found;
}

}  // namespace

Matrix to_matrix(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix m(n, std::vector<Count>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m[u][v] = u == v ? g.loops(u) : g.multiplicity(u, v);
  }
  return m;
}

bool brute_force_ham_decomposable(const Matrix& m) {
  const std::size_t n = m.size();
  if (n < 2) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (m[v][v] != 0) return false;
  }
  Matrix work = m;
  return decompose(work);
}

bool cycles_cover_exactly(const Matrix& m, const std::vector<std::vector<VertexId>>& cycles) {
  const std::size_t n = m.size();
  Matrix seen(n, std::vector<Count>(n, 0));
  for (const auto& c : cycles) {
    if (c.size() != n || n < 2) return false;
    std::vector<VertexId> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted[i] != i) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = c[i];
      const auto v = c[(i + 1) % n];
      seen[u][v]++;
      seen[v][u]++;
    }
  }
  return seen == m;
}

std::pair<int, int> best_pairing_score(const std::vector<std::size_t>& ends,
                                       const std::vector<long>& labels) {
  std::pair<int, int> best{-1, -1};
  std::vector<bool> taken(ends.size(), false);
  std::function<void(int, int)> go = [&](int same, int comp) {
    std::size_t i = 0;
    while (i < ends.size() && taken[i]) ++i;
    if (i == ends.size()) {
      best = std::max(best, std::pair{same, comp});
      return;
    }
    taken[i] = true;
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      const bool s = ends[i] == ends[j];
      const bool c = !s && labels[i] >= 0 && labels[i] == labels[j];
      go(same + (s ? 1 : 0), comp + (c ? 1 : 0));
      taken[j] = false;
    }
    taken[i] = false;
  };
  go(0, 0);
  return best;
}

std::size_t oracle_edge_components(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || deg(m, s) == 0) continue;
    ++count;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && m[u][v] > 0) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
  }
  return count;
}

std::string oracle_detachment_failure(const ColoredMultigraph& host, const std::vector<Count>& eta,
                                      const std::vector<VertexId>& psi,
                                      const ColoredMultigraph& detached) {
  const std::size_t nh = host.vertex_count();
  const std::size_t ng = detached.vertex_count();
  const std::size_t k = host.colors();
  std::ostringstream why;

  std::vector<Count> fiber(nh, 0);
  for (VertexId u = 0; u < ng; ++u) fiber.at(psi.at(u))++;
  for (VertexId w = 0; w < nh; ++w) {
    if (fiber[w] != eta[w]) return "fiber size differs from eta";
  }

  std::vector<Matrix> h(k + 1);
  std::vector<Matrix> g(k + 1);
  h[k] = Matrix(nh, std::vector<Count>(nh, 0));
  g[k] = Matrix(ng, std::vector<Count>(ng, 0));
  for (std::size_t j = 0; j < k; ++j) {
    h[j] = to_matrix(host.layer(j));
    g[j] = to_matrix(detached.layer(j));
    for (std::size_t a = 0; a < nh; ++a) {
      for (std::size_t b = 0; b < nh; ++b) h[k][a][b] += h[j][a][b];
    }
    for (std::size_t a = 0; a < ng; ++a) {
      for (std::size_t b = 0; b < ng; ++b) g[k][a][b] += g[j][a][b];
    }
  }

  for (std::size_t j = 0; j <= k; ++j) {
    Matrix image(nh, std::vector<Count>(nh, 0));
    for (VertexId u = 0; u < ng; ++u) {
      if (g[j][u][u] != 0) return "loop in the detachment";
      for (VertexId v = u + 1; v < ng; ++v) {
        const auto w = psi[u];
        const auto z = psi[v];
        if (w == z) {
          image[w][w] += g[j][u][v];
        } else {
          image[w][z] += g[j][u][v];
          image[z][w] += g[j][u][v];
        }
      }
    }
    if (image != h[j]) return "does not amalgamate back onto the host";

    for (VertexId u = 0; u < ng; ++u) {
      const auto w = psi[u];
      if (!within(deg(g[j], u), deg(h[j], w), eta[w])) {
        why << (j == k ? "A1" : "A2") << " at vertex " << u;
        return why.str();
      }
      for (VertexId v = u + 1; v < ng; ++v) {
        const auto z = psi[v];
        if (w == z) {
          if (!within(g[j][u][v], h[j][w][w], eta[w] * (eta[w] - 1) / 2)) {
            why << (j == k ? "A3" : "A4") << " at pair " << u << "," << v;
            return why.str();
          }
        } else if (!within(g[j][u][v], h[j][w][z], eta[w] * eta[z])) {
          why << (j == k ? "A5" : "A6") << " at pair " << u << "," << v;
          return why.str();
        }
      }
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    bool even = true;
    for (VertexId w = 0; w < nh && even; ++w) {
      const Count d = deg(h[j], w);
      even = d % eta[w] == 0 && (d / eta[w]) % 2 == 0;
    }
    if (even && oracle_edge_components(h[j]) != oracle_edge_components(g[j])) {
      why << "A7 in colour " << j;
      return why.str();
    }
  }
  return {};
}

bool oracle_bee(const BipartiteMultigraph& g, const BipartiteColoring& c) {
  const std::size_t k = c.colors();
  std::vector<std::vector<Count>> left(g.left_count(), std::vector<Count>(k, 0));
  std::vector<std::vector<Count>> right(g.right_count(), std::vector<Count>(k, 0));
  std::vector<Count> total(k, 0);
  auto spread = [](const std::vector<Count>& xs) {
    return *std::max_element(xs.begin(), xs.end()) - *std::min_element(xs.begin(), xs.end());
  };
  for (std::size_t l = 0; l < g.left_count(); ++l) {
    for (std::size_t r = 0; r < g.right_count(); ++r) {
      std::vector<Count> per(k, 0);
      Count sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        per[j] = c.count(l, r, j);
        if (per[j] < 0) return false;
        sum += per[j];
        left[l][j] += per[j];
        right[r][j] += per[j];
        total[j] += per[j];
      }
      if (sum != g.multiplicity(l, r) || spread(per) > 1) return false;
    }
  }
  for (const auto& xs : left) {
    if (spread(xs) > 1) return false;
  }
  for (const auto& xs : right) {
    if (spread(xs) > 1) return false;
  }
  return spread(total) <= 1;
}

bool brute_force_bee_exists(const BipartiteMultigraph& g, std::size_t k) {
  std::vector<SidePair> slots;
  for (const auto& [pair, m] : g.edges()) {
    for (Count i = 0; i < m; ++i) slots.push_back(pair);
  }
  BipartiteColoring c(g.left_count(), g.right_count(), k);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == slots.size()) return oracle_bee(g, c);
    for (std::size_t j = 0; j < k; ++j) {
      c.add(slots[i].first, slots[i].second, j, 1);
      if (go(i + 1)) return true;
      c.add(slots[i].first, slots[i].second, j, -1);
    }
    return false;
  };
  return go(0);
}

}  // namespace amalgam::testing
