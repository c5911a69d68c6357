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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace amalgam {

using VertexId = std::size_t;
using Count = std::int64_t;

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Count value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Count num, Count den);

  Count num() const noexcept { return num_; }
  Count den() const noexcept { return den_; }

  Count floor() const noexcept;
  Count ceil() const noexcept;
  bool is_integer() const noexcept { return den_ == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Count num_ = 0;
  Count den_ = 1;
};

/// x ≈ y  iff  floor(y) <= x <= ceil(y).
bool approx(const Rational& x, const Rational& y);

struct EdgeRecord {
  VertexId u;
  VertexId v;
  Count multiplicity;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Undirected multigraph with loops on the dense vertex set {0, ..., n-1}.
///
/// Edges carry no identity: the graph is the loop count of every vertex and
/// the multiplicity of every unordered pair. Zero multiplicities are never
/// stored, so two graphs compare equal iff they have the same counts.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return loops_.size(); }
  VertexId add_vertex();

  /// Adds `count` parallel edges between u and v; u == v adds loops.
  void add_edges(VertexId u, VertexId v, Count count = 1);
  /// Removes `count` edges between u and v (loops when u == v). Throws
  /// DomainError if fewer are present.
  void remove_edges(VertexId u, VertexId v, Count count = 1);

  Count loops(VertexId v) const;
  Count multiplicity(VertexId u, VertexId v) const;
  Count degree(VertexId v) const;

  /// Neighbours of v other than v itself, ascending, with multiplicities.
  const std::map<VertexId, Count>& adjacency(VertexId v) const;

  /// Non-loop edges as (u < v, multiplicity) records in ascending order.
  std::vector<EdgeRecord> edges() const;
  /// Number of edges, each loop counted once.
  Count edge_count() const noexcept;
  Count loop_count() const noexcept;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void check(VertexId v) const;

  std::vector<Count> loops_;
  std::vector<std::map<VertexId, Count>> adj_;
};

Count degree(const Multigraph& g, VertexId v);

/// m(A, B): edges joining a vertex of A to a vertex of B. A and B must be
/// disjoint.
Count multiplicity_sets(const Multigraph& g, std::span<const VertexId> a,
                        std::span<const VertexId> b);

/// Connected components, isolated vertices included. Loops and parallel edges
/// add no connectivity beyond a single adjacency.
std::size_t component_count(const Multigraph& g);

/// Components of the subgraph induced by the edges of g: vertices without
/// any incident edge or loop are not part of it.
std::size_t edge_component_count(const Multigraph& g);

/// Component label for every vertex: the smallest vertex id in its component.
/// Edges incident with a vertex in `excluded` are ignored, and excluded
/// vertices get their own label.
std::vector<VertexId> component_labels(const Multigraph& g,
                                       std::span<const VertexId> excluded = {});

/// k colour classes over one shared vertex set. Layer j is the colour class j.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  ColoredMultigraph(std::size_t vertex_count, std::size_t colors);

  std::size_t colors() const noexcept { return layers_.size(); }
  std::size_t vertex_count() const noexcept;
  VertexId add_vertex();

  const Multigraph& layer(std::size_t color) const;
  Multigraph& layer(std::size_t color);
  const std::vector<Multigraph>& layers() const noexcept { return layers_; }

  /// Entrywise sum of all colour classes.
  Multigraph underlying() const;

  friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Multigraph> layers_;
};

/// Number function eta: how many vertices each host vertex splits into.
struct AmalgamationSpec {
  std::vector<Count> eta;

  /// Throws PreconditionError unless eta covers exactly the vertices of
  /// `host`, every value is positive, and eta(w) = 1 implies w has no loops.
  void validate(const Multigraph& host) const;
};

/// psi: V(G) -> V(H) together with its fibers.
struct DetachmentMap {
  std::vector<VertexId> psi;
  /// fibers[w] lists psi^{-1}(w): w itself first, then the vertices split off
  /// from it in creation order.
  std::vector<std::vector<VertexId>> fibers;

  static DetachmentMap from_psi(std::vector<VertexId> psi, std::size_t host_vertices);
  friend bool operator==(const DetachmentMap&, const DetachmentMap&) = default;
};

/// C(n, 2).
constexpr Count choose2(Count n) { return n * (n - 1) / 2; }

}  // namespace amalgam
