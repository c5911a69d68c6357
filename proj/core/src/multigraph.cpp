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

#include "amalgam/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "amalgam/errors.hpp"

namespace amalgam {

Rational::Rational(Count num, Count den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Count g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Count Rational::floor() const noexcept {
  Count q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Count Rational::ceil() const noexcept {
  Count q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

bool approx(const Rational& x, const Rational& y) {
  return Rational(y.floor()) <= x && x <= Rational(y.ceil());
}

Multigraph::Multigraph(std::size_t vertex_count)
    : loops_(vertex_count, 0), adj_(vertex_count) {}

VertexId Multigraph::add_vertex() {
  loops_.push_back(0);
  adj_.emplace_back();
  return loops_.size() - 1;
}

void Multigraph::check(VertexId v) const {
  if (v >= loops_.size()) {
    throw DomainError("unknown vertex " + std::to_string(v));
  }
}

void Multigraph::add_edges(VertexId u, VertexId v, Count count) {
  check(u);
  check(v);
  if (count < 0) throw DomainError("negative edge count");
  if (count == 0) return;
  if (u == v) {
    loops_[u] += count;
    return;
  }
  adj_[u][v] += count;
  adj_[v][u] += count;
}

void Multigraph::remove_edges(VertexId u, VertexId v, Count count) {
  check(u);
  check(v);
  if (count < 0) throw DomainError("negative edge count");
  if (count == 0) return;
  if (u == v) {
    if (loops_[u] < count) {
      throw DomainError("vertex " + std::to_string(u) + " has fewer than " +
                        std::to_string(count) + " loops");
    }
    loops_[u] -= count;
    return;
  }
  auto it = adj_[u].find(v);
  if (it == adj_[u].end() || it->second < count) {
    throw DomainError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                      "} has fewer than " + std::to_string(count) + " edges");
  }
  it->second -= count;
  if (it->second == 0) {
    adj_[u].erase(it);
    adj_[v].erase(u);
  } else {
    adj_[v][u] -= count;
  }
}

Count Multigraph::loops(VertexId v) const {
  check(v);
  return loops_[v];
}

Count Multigraph::multiplicity(VertexId u, VertexId v) const {
  check(u);
  check(v);
  if (u == v) return 0;
  auto it = adj_[u].find(v);
  return it == adj_[u].end() ? 0 : it->second;
}

Count Multigraph::degree(VertexId v) const {
  check(v);
  Count d = 2 * loops_[v];
  for (const auto& [u, m] : adj_[v]) d += m;
  return d;
}

const std::map<VertexId, Count>& Multigraph::adjacency(VertexId v) const {
  check(v);
  return adj_[v];
}

std::vector<EdgeRecord> Multigraph::edges() const {
  std::vector<EdgeRecord> out;
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) {
      out.push_back({u, it->first, it->second});
    }
  }
  return out;
}

Count Multigraph::edge_count() const noexcept {
  Count total = loop_count();
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) total += it->second;
  }
  return total;
}

Count Multigraph::loop_count() const noexcept {
  return std::accumulate(loops_.begin(), loops_.end(), Count{0});
}

Count degree(const Multigraph& g, VertexId v) { return g.degree(v); }

Count multiplicity_sets(const Multigraph& g, std::span<const VertexId> a,
                        std::span<const VertexId> b) {
  std::set<VertexId> in_b;
  for (VertexId v : b) {
    if (v >= g.vertex_count()) throw DomainError("unknown vertex " + std::to_string(v));
    in_b.insert(v);
  }
  Count total = 0;
  for (VertexId u : a) {
    if (in_b.contains(u)) {
      throw DomainError("vertex sets overlap at " + std::to_string(u));
    }
    for (const auto& [v, m] : g.adjacency(u)) {
      if (in_b.contains(v)) total += m;
    }
  }
  return total;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller id as root so labels are component minima.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<VertexId> parent;
};

}  // namespace

std::vector<VertexId> component_labels(const Multigraph& g,
                                       std::span<const VertexId> excluded) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> skip(n, false);
  for (VertexId v : excluded) {
    if (v >= n) throw DomainError("unknown vertex " + std::to_string(v));
    skip[v] = true;
  }
  DisjointSets sets(n);
  for (const auto& e : g.edges()) {
    if (!skip[e.u] && !skip[e.v]) sets.unite(e.u, e.v);
  }
  std::vector<VertexId> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = sets.find(v);
  return label;
}

std::size_t component_count(const Multigraph& g) {
  const auto label = component_labels(g);
  std::size_t count = 0;
  for (VertexId v = 0; v < label.size(); ++v) count += label[v] == v;
  return count;
}

std::size_t edge_component_count(const Multigraph& g) {
  const auto label = component_labels(g);
  std::set<VertexId> roots;
  for (VertexId v = 0; v < label.size(); ++v) {
    if (g.degree(v) > 0) roots.insert(label[v]);
  }
  return roots.size();
}

ColoredMultigraph::ColoredMultigraph(std::size_t vertex_count, std::size_t colors)
    : vertex_count_(vertex_count), layers_(colors, Multigraph(vertex_count)) {
  if (colors == 0) throw DomainError("a coloured multigraph needs at least one colour");
}

std::size_t ColoredMultigraph::vertex_count() const noexcept { return vertex_count_; }

VertexId ColoredMultigraph::add_vertex() {
  for (auto& layer : layers_) layer.add_vertex();
  return vertex_count_++;
}

const Multigraph& ColoredMultigraph::layer(std::size_t color) const {
  if (color >= layers_.size()) throw DomainError("unknown colour " + std::to_string(color));
  return layers_[color];
}

Multigraph& ColoredMultigraph::layer(std::size_t color) {
  if (color >= layers_.size()) throw DomainError("unknown colour " + std::to_string(color));
  return layers_[color];
}

Multigraph ColoredMultigraph::underlying() const {
  Multigraph sum(vertex_count_);
  for (const auto& layer : layers_) {
    for (VertexId v = 0; v < vertex_count_; ++v) sum.add_edges(v, v, layer.loops(v));
    for (const auto& e : layer.edges()) sum.add_edges(e.u, e.v, e.multiplicity);
  }
  return sum;
}

void AmalgamationSpec::validate(const Multigraph& host) const {
  if (eta.size() != host.vertex_count()) {
    throw PreconditionError("eta has " + std::to_string(eta.size()) +
                            " entries but the host graph has " +
                            std::to_string(host.vertex_count()) + " vertices");
  }
  for (VertexId w = 0; w < eta.size(); ++w) {
    if (eta[w] < 1) {
      throw PreconditionError("eta(" + std::to_string(w) + ") must be positive");
    }
    if (eta[w] == 1 && host.loops(w) != 0) {
      throw PreconditionError("vertex " + std::to_string(w) +
                              " has eta = 1 but carries " +
                              std::to_string(host.loops(w)) + " loop(s)");
    }
  }
}

DetachmentMap DetachmentMap::from_psi(std::vector<VertexId> psi, std::size_t host_vertices) {
  DetachmentMap map;
  map.fibers.assign(host_vertices, {});
  for (VertexId u = 0; u < psi.size(); ++u) {
    if (psi[u] >= host_vertices) {
      throw StructuralError("psi maps " + std::to_string(u) + " to unknown host vertex " +
                            std::to_string(psi[u]));
    }
    map.fibers[psi[u]].push_back(u);
  }
  for (VertexId w = 0; w < host_vertices; ++w) {
    if (map.fibers[w].empty()) {
      throw StructuralError("psi is not onto: host vertex " + std::to_string(w) +
                            " has an empty fiber");
    }
  }
  map.psi = std::move(psi);
  return map;
}

}  // namespace amalgam
