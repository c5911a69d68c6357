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
#include <random>

#include "amalgam/bee.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam::gen {

struct InstanceLimits {
  std::size_t max_vertices = 6;
  Count max_eta = 4;
  std::size_t max_colors = 4;
  /// Caps on the underlying graph.
  Count max_multiplicity = 6;
  Count max_loops = 8;
};

struct Instance {
  ColoredMultigraph graph;
  AmalgamationSpec eta;
};

/// Random host satisfying the eta guard. About half the colours are built
/// by stub matching so that d/eta is an even integer at every vertex, which
/// makes the connectivity condition non-vacuous.
Instance random_instance(std::mt19937_64& rng, const InstanceLimits& limits = {});

BipartiteMultigraph random_bipartite(std::mt19937_64& rng, std::size_t max_side = 8,
                                     Count max_multiplicity = 6);

/// Random even multigraph: either a union of random closed walks and loops,
/// or a union of random Hamiltonian cycles (regular and loopless).
Multigraph random_even_graph(std::mt19937_64& rng, std::size_t max_vertices = 8);

inline Count uniform(std::mt19937_64& rng, Count lo, Count hi) {
  return std::uniform_int_distribution<Count>(lo, hi)(rng);
}

}  // namespace amalgam::gen
