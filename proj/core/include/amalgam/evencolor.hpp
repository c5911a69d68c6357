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
#include <utility>
#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

/// Closed walk as a list of traversal steps (from, to). Consecutive steps
/// share a vertex and the last step ends where the first begins. A loop at v
/// is the step (v, v).
struct EulerCircuit {
  std::vector<std::pair<VertexId, VertexId>> steps;
};

/// Hierholzer's algorithm on the component of `root`, always leaving a vertex
/// along the lowest-numbered unused neighbour (a loop counts as neighbour v).
/// Throws PreconditionError if the component has a vertex of odd degree.
EulerCircuit euler_circuit(const Multigraph& g, VertexId root);

/// Decomposes a loopless 2m-regular multigraph into m spanning 2-regular
/// subgraphs: Euler orientation, then a proper m-colouring of the out/in
/// bipartite graph.
std::vector<Multigraph> two_factorization(const Multigraph& g);

/// Splits an even multigraph into two even subgraphs whose degrees differ by
/// at most two at every vertex. Returns the first part; the second part is
/// the remainder.
Multigraph even_two_split(const Multigraph& g);

/// Colouring of an even multigraph in which every colour degree is even and
/// any two colour degrees at a vertex differ by at most two.
ColoredMultigraph evenly_equitable_coloring(const Multigraph& g, std::size_t colors);

}  // namespace amalgam
