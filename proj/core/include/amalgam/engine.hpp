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
#include <optional>
#include <vector>

#include "amalgam/bee.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam {

/// Bipartite picture of the edges at a pivot vertex y: one left vertex per
/// colour, one right vertex per neighbour of y plus a loop proxy. Colour j
/// joins neighbour u once per edge of colour j between y and u, and joins the
/// loop proxy twice per loop of colour j at y.
struct SplitBipartite {
  VertexId pivot = 0;
  /// Right vertex r < neighbors.size() stands for neighbors[r].
  std::vector<VertexId> neighbors;
  BipartiteMultigraph graph;

  std::size_t loop_proxy() const noexcept { return neighbors.size(); }
};

/// The pivot's two-class subgraph with each qualifying colour split into
/// alpha vertices of degree exactly 2.
struct RefinedBipartite {
  BipartiteMultigraph graph;
  /// Colour of every left vertex.
  std::vector<std::size_t> owner;
};

struct MoveSummary {
  std::size_t color = 0;
  /// Edges y-u re-attached as v-u.
  Count edges_moved = 0;
  /// Loops at y turned into edges y-v.
  Count loops_opened = 0;

  friend bool operator==(const MoveSummary&, const MoveSummary&) = default;
};

struct DetachmentStep {
  VertexId pivot = 0;
  VertexId new_vertex = 0;
  Count eta_before = 0;
  std::vector<std::size_t> qualifying_colors;
  std::vector<MoveSummary> moves;

  friend bool operator==(const DetachmentStep&, const DetachmentStep&) = default;
};

struct DetachmentTrace {
  std::vector<DetachmentStep> steps;

  friend bool operator==(const DetachmentTrace&, const DetachmentTrace&) = default;
};

struct StepResult {
  ColoredMultigraph graph;
  AmalgamationSpec eta;
  VertexId new_vertex = 0;
  DetachmentStep record;
};

struct DetachmentResult {
  ColoredMultigraph graph;
  DetachmentMap map;
  DetachmentTrace trace;
};

struct EngineOptions {
  /// Check the per-step and cumulative relations after every step and throw
  /// InvariantViolation on the first failure.
  bool check_steps = false;
};

/// Colours j for which d_{H(j)}(v)/eta(v) is an even integer at every vertex.
std::vector<std::size_t> condition3_colors(const ColoredMultigraph& graph,
                                           const AmalgamationSpec& eta);

SplitBipartite build_split_bipartite(const ColoredMultigraph& graph, VertexId pivot);

/// Splits each colour j with alpha[j] set into alpha[j] left vertices of
/// degree 2. Pairs of parallel edges to one right vertex are formed first,
/// then pairs of edges into the same component (labels[j][u] is the
/// component of u in colour j with the pivot removed), then whatever is left,
/// always in ascending id order. Colours without alpha keep a single left
/// vertex. Throws InvariantViolation if a split colour does not have degree
/// 2 * alpha[j].
RefinedBipartite refine(const SplitBipartite& two_classes,
                        const std::vector<std::optional<Count>>& alpha,
                        const std::vector<std::vector<VertexId>>& labels);

/// Detaches one new vertex from `pivot`, which must have eta >= 2.
StepResult detach_step(const ColoredMultigraph& graph, const AmalgamationSpec& eta,
                       VertexId pivot);

/// Repeats detach_step on the smallest vertex with eta >= 2 until eta is 1
/// everywhere. The result is a loopless detachment satisfying A1..A7.
DetachmentResult detach_all(const ColoredMultigraph& graph, const AmalgamationSpec& eta,
                            const EngineOptions& options = {});

}  // namespace amalgam
