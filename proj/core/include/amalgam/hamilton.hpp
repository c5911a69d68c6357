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

#include <string>
#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

/// K(a_1, ..., a_p; lambda1, lambda2): p parts of the given sizes, multiplicity
/// lambda1 inside a part and lambda2 between parts.
struct GddParams {
  std::vector<Count> sizes;
  Count lambda1 = 0;
  Count lambda2 = 0;

  std::size_t parts() const noexcept { return sizes.size(); }
  Count order() const;
  /// Same graph with the part sizes in ascending order.
  GddParams canonical() const;

  friend bool operator==(const GddParams&, const GddParams&) = default;
};

/// Edge-disjoint spanning cycles whose union is `host`. A cycle is the
/// vertex sequence v_0, ..., v_{n-1}; the closing edge v_{n-1} v_0 is implied,
/// so on two vertices a cycle is a pair of parallel edges.
struct HamDecomposition {
  Multigraph host;
  std::vector<std::vector<VertexId>> cycles;
};

struct Feasibility {
  bool feasible = false;
  /// Number of Hamiltonian cycles when feasible.
  Count cycles = 0;
  /// Branch that decided the answer, e.g. "condition (ii)" or
  /// "trivial case (i)", or "conditions (i)-(iii)" for a feasible general case.
  std::string label;
  /// Every failed condition, in order; empty when feasible.
  std::vector<std::string> violated;
  std::string reason;
};

Multigraph complete_multigraph(Count n, Count lambda);
Multigraph make_gdd(const GddParams& params);
/// Parts as consecutive blocks of vertex ids, in the order of params.sizes.
std::vector<std::vector<VertexId>> gdd_partition(const GddParams& params);

/// Walecki's rotational decomposition of K_n into (n-1)/2 Hamiltonian cycles.
HamDecomposition walecki_odd(Count n);

/// Hamiltonian decomposition of lambda K_n by detaching a single vertex that
/// carries lambda C(n,2) loops, coloured lambda(n-1)/2 ways with n loops per
/// colour, into n vertices. Throws InfeasibleError when lambda(n-1) is odd.
HamDecomposition ham_decompose_lambda_kn(Count n, Count lambda);

Feasibility gdd_feasible(const GddParams& params);

/// Hamiltonian decomposition of K(a_1, ..., a_p; lambda1, lambda2).
///
/// In the general case the p-vertex amalgamation H (lambda1 C(a,2) loops per
/// vertex, lambda2 a^2 edges per pair) is coloured so that colour j contains
/// one Hamiltonian cycle of the loopless part plus an evenly-equitable share
/// of the rest, then every vertex is detached into a vertices. Vertex ids
/// follow gdd_partition. Throws InfeasibleError naming the failed condition.
HamDecomposition ham_decompose_gdd(const GddParams& params);

/// Reads the Hamiltonian cycle of a connected 2-regular spanning graph,
/// starting at vertex 0 and always stepping to the smallest unused neighbour.
/// Throws InvariantViolation if the graph is not such a cycle.
std::vector<VertexId> extract_cycle(const Multigraph& cycle_graph);

}  // namespace amalgam
