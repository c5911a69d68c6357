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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

/// (left, right) index pair. Left and right vertices are numbered
/// independently from zero.
using SidePair = std::pair<std::size_t, std::size_t>;

class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;
  BipartiteMultigraph(std::size_t left_count, std::size_t right_count);

  std::size_t left_count() const noexcept { return left_count_; }
  std::size_t right_count() const noexcept { return right_count_; }
  std::size_t add_left();
  std::size_t add_right();

  void add_edges(std::size_t left, std::size_t right, Count count = 1);
  Count multiplicity(std::size_t left, std::size_t right) const;
  Count left_degree(std::size_t left) const;
  Count right_degree(std::size_t right) const;
  Count max_degree() const;
  Count edge_count() const;

  /// Non-zero multiplicities in ascending (left, right) order.
  const std::map<SidePair, Count>& edges() const noexcept { return mult_; }

  friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

 private:
  std::size_t left_count_ = 0;
  std::size_t right_count_ = 0;
  std::map<SidePair, Count> mult_;
};

/// A k-edge-colouring of a bipartite multigraph, stored as per-pair colour
/// counts. Colours are 0..k-1.
class BipartiteColoring {
 public:
  BipartiteColoring(std::size_t left_count, std::size_t right_count, std::size_t colors);

  std::size_t colors() const noexcept { return colors_; }
  std::size_t left_count() const noexcept { return left_count_; }
  std::size_t right_count() const noexcept { return right_count_; }

  void add(std::size_t left, std::size_t right, std::size_t color, Count count = 1);
  Count count(std::size_t left, std::size_t right, std::size_t color) const;

  /// Per-colour counts of every pair with at least one edge.
  const std::map<SidePair, std::vector<Count>>& pairs() const noexcept { return counts_; }

  Count class_size(std::size_t color) const;
  Count left_degree(std::size_t left, std::size_t color) const;
  Count right_degree(std::size_t right, std::size_t color) const;

  /// Colour classes summed back into one graph.
  BipartiteMultigraph underlying() const;
  /// Edges of the given colours only.
  BipartiteMultigraph restrict_to(const std::vector<std::size_t>& colors) const;

 private:
  std::size_t left_count_;
  std::size_t right_count_;
  std::size_t colors_;
  std::map<SidePair, std::vector<Count>> counts_;
};

/// Proper k-edge-colouring by alternating-path recolouring. Requires
/// max degree <= k; ties go to the lowest vertex, then the lowest colour.
BipartiteColoring konig_proper_coloring(const BipartiteMultigraph& graph, std::size_t colors);

/// A balanced, equitable and equalized k-edge-colouring.
///
/// Starts from the round-robin colouring (already balanced and equalized) and
/// repeatedly picks two colours a < b that violate one of the three
/// conditions between them, re-splitting the edges coloured a or b with
/// `bee_two_split`. Every re-split lowers the sum of squared colour counts at
/// the offending vertex, pair or class without raising any other term, so the
/// loop terminates.
BipartiteColoring bee_coloring(const BipartiteMultigraph& graph, std::size_t colors);

/// Splits `graph` into two classes that are balanced, equitable and equalized.
/// Returns the multiplicities of class 0; class 1 is the remainder.
BipartiteMultigraph bee_two_split(const BipartiteMultigraph& graph);

bool is_balanced(const BipartiteColoring& coloring);
bool is_equitable(const BipartiteColoring& coloring);
bool is_equalized(const BipartiteColoring& coloring);

/// At every vertex each colour is used at most once.
bool is_proper(const BipartiteColoring& coloring);

}  // namespace amalgam
