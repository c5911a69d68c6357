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

#include "amalgam/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "amalgam/errors.hpp"
#include "amalgam/verify.hpp"

namespace amalgam {

std::vector<std::size_t> condition3_colors(const ColoredMultigraph& graph,
                                           const AmalgamationSpec& eta) {
  if (eta.eta.size() != graph.vertex_count()) {
    throw PreconditionError("eta does not cover the vertices of the graph");
  }
  std::vector<std::size_t> colors;
  for (std::size_t j = 0; j < graph.colors(); ++j) {
    bool qualifies = true;
    for (VertexId v = 0; qualifies && v < graph.vertex_count(); ++v) {
      const Count d = graph.layer(j).degree(v);
      qualifies = d % eta.eta[v] == 0 && (d / eta.eta[v]) % 2 == 0;
    }
    if (qualifies) colors.push_back(j);
  }
  return colors;
}

SplitBipartite build_split_bipartite(const ColoredMultigraph& graph, VertexId pivot) {
  if (pivot >= graph.vertex_count()) {
    throw DomainError("unknown vertex " + std::to_string(pivot));
  }
  SplitBipartite split;
  split.pivot = pivot;
  std::map<VertexId, std::size_t> index;
  for (const auto& layer : graph.layers()) {
    for (const auto& [u, m] : layer.adjacency(pivot)) index.emplace(u, 0);
  }
  for (auto& [u, r] : index) {
    r = split.neighbors.size();
    split.neighbors.push_back(u);
  }
  split.graph = BipartiteMultigraph(graph.colors(), split.neighbors.size() + 1);
  for (std::size_t j = 0; j < graph.colors(); ++j) {
    const auto& layer = graph.layer(j);
    for (const auto& [u, m] : layer.adjacency(pivot)) split.graph.add_edges(j, index.at(u), m);
    split.graph.add_edges(j, split.loop_proxy(), 2 * layer.loops(pivot));
  }
  return split;
}

RefinedBipartite refine(const SplitBipartite& two_classes,
                        const std::vector<std::optional<Count>>& alpha,
                        const std::vector<std::vector<VertexId>>& labels) {
  const auto& t = two_classes.graph;
  const std::size_t right = t.right_count();
  const std::size_t proxy = two_classes.loop_proxy();
  RefinedBipartite out;
  out.graph = BipartiteMultigraph(0, right);

  for (std::size_t j = 0; j < t.left_count(); ++j) {
    if (j >= alpha.size() || !alpha[j]) {
      const std::size_t c = out.graph.add_left();
      out.owner.push_back(j);
      for (std::size_t r = 0; r < right; ++r) out.graph.add_edges(c, r, t.multiplicity(j, r));
      continue;
    }

    const Count want = *alpha[j];
    if (t.left_degree(j) != 2 * want) {
      throw InvariantViolation("colour " + std::to_string(j) + " has degree " +
                               std::to_string(t.left_degree(j)) + " in the two-class graph, not 2*" +
                               std::to_string(want));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    // Parallel pairs to one right vertex.
    std::vector<std::size_t> singles;
    for (std::size_t r = 0; r < right; ++r) {
      const Count m = t.multiplicity(j, r);
      for (Count i = 0; i < m / 2; ++i) pairs.emplace_back(r, r);
      if (m % 2 == 1) singles.push_back(r);
    }

    // Pairs inside one component of colour j minus the pivot. The loop proxy
    // lies in no component.
    std::map<VertexId, std::vector<std::size_t>> by_component;
    std::vector<std::size_t> leftover;
    for (std::size_t r : singles) {
      if (r == proxy) {
        leftover.push_back(r);
      } else {
        by_component[labels.at(j).at(two_classes.neighbors[r])].push_back(r);
      }
    }
    for (const auto& [label, members] : by_component) {
      std::size_t i = 0;
      for (; i + 1 < members.size(); i += 2) pairs.emplace_back(members[i], members[i + 1]);
      if (i < members.size()) leftover.push_back(members[i]);
    }

    std::sort(leftover.begin(), leftover.end());
    for (std::size_t i = 0; i + 1 < leftover.size(); i += 2) {
      pairs.emplace_back(leftover[i], leftover[i + 1]);
    }
    if (static_cast<Count>(pairs.size()) != want) {
      throw InvariantViolation("colour " + std::to_string(j) + " split into " +
                               std::to_string(pairs.size()) + " vertices instead of " +
                               std::to_string(want));
    }
    for (const auto& [r1, r2] : pairs) {
      const std::size_t c = out.graph.add_left();
      out.owner.push_back(j);
      out.graph.add_edges(c, r1);
      out.graph.add_edges(c, r2);
    }
  }
  return out;
}

StepResult detach_step(const ColoredMultigraph& graph, const AmalgamationSpec& eta,
                       VertexId pivot) {
  if (pivot >= graph.vertex_count()) {
    throw DomainError("unknown vertex " + std::to_string(pivot));
  }
  if (eta.eta.size() != graph.vertex_count()) {
    throw PreconditionError("eta does not cover the vertices of the graph");
  }
  const Count eta_y = eta.eta[pivot];
  if (eta_y < 2) {
    throw PreconditionError("cannot detach from vertex " + std::to_string(pivot) +
                            " with eta = " + std::to_string(eta_y));
  }

  const auto split = build_split_bipartite(graph, pivot);
  const auto coloring = bee_coloring(split.graph, static_cast<std::size_t>(eta_y));
  SplitBipartite two_classes = split;
  two_classes.graph = coloring.restrict_to({0, 1});

  const auto qualifying = condition3_colors(graph, eta);
  std::vector<std::optional<Count>> alpha(graph.colors());
  std::vector<std::vector<VertexId>> labels(graph.colors());
  const VertexId excluded[] = {pivot};
  for (std::size_t j : qualifying) {
    alpha[j] = graph.layer(j).degree(pivot) / eta_y;
    labels[j] = component_labels(graph.layer(j), excluded);
  }
  const auto refined = refine(two_classes, alpha, labels);
  const auto halves = bee_coloring(refined.graph, 2);

  StepResult result{graph, eta, 0, {}};
  const VertexId fresh = result.graph.add_vertex();
  result.new_vertex = fresh;
  result.eta.eta[pivot] -= 1;
  result.eta.eta.push_back(1);

  std::vector<MoveSummary> moves(graph.colors());
  for (std::size_t j = 0; j < moves.size(); ++j) moves[j].color = j;
  for (const auto& [pair, per_color] : halves.pairs()) {
    const Count f = per_color[0];
    if (f == 0) continue;
    const std::size_t j = refined.owner[pair.first];
    auto& layer = result.graph.layer(j);
    if (pair.second == split.loop_proxy()) {
      moves[j].loops_opened += f;
    } else {
      const VertexId u = split.neighbors[pair.second];
      layer.remove_edges(pivot, u, f);
      layer.add_edges(fresh, u, f);
      moves[j].edges_moved += f;
    }
  }
  for (auto& move : moves) {
    if (move.loops_opened == 0) continue;
    auto& layer = result.graph.layer(move.color);
    if (layer.loops(pivot) < move.loops_opened) {
      throw InvariantViolation("colour " + std::to_string(move.color) + " would open " +
                               std::to_string(move.loops_opened) + " loops but vertex " +
                               std::to_string(pivot) + " has " +
                               std::to_string(layer.loops(pivot)));
    }
    layer.remove_edges(pivot, pivot, move.loops_opened);
    layer.add_edges(pivot, fresh, move.loops_opened);
  }

  result.record.pivot = pivot;
  result.record.new_vertex = fresh;
  result.record.eta_before = eta_y;
  result.record.qualifying_colors = qualifying;
  for (const auto& move : moves) {
    if (move.edges_moved != 0 || move.loops_opened != 0) result.record.moves.push_back(move);
  }
  return result;
}

DetachmentResult detach_all(const ColoredMultigraph& graph, const AmalgamationSpec& eta,
                            const EngineOptions& options) {
  eta.validate(graph.underlying());
  for (std::size_t j = 0; j < graph.colors(); ++j) {
    // The guard must hold per colour too; it follows from the underlying
    // graph, but a colour-level message is easier to act on.
    for (VertexId w = 0; w < graph.vertex_count(); ++w) {
      if (eta.eta[w] == 1 && graph.layer(j).loops(w) != 0) {
        throw PreconditionError("vertex " + std::to_string(w) + " has eta = 1 but carries loops");
      }
    }
  }

  ColoredMultigraph current = graph;
  AmalgamationSpec current_eta = eta;
  std::vector<VertexId> origin(graph.vertex_count());
  for (VertexId v = 0; v < origin.size(); ++v) origin[v] = v;
  DetachmentTrace trace;

  for (;;) {
    VertexId pivot = current.vertex_count();
    for (VertexId v = 0; v < current.vertex_count(); ++v) {
      if (current_eta.eta[v] >= 2) {
        pivot = v;
        break;
      }
    }
    if (pivot == current.vertex_count()) break;

    auto step = detach_step(current, current_eta, pivot);
    origin.push_back(origin[pivot]);
    if (options.check_steps) {
      auto fail = [&](const char* what, const CheckResult& r) {
        throw InvariantViolation(std::string(what) + " after step " +
                                 std::to_string(trace.steps.size()) + ": " + r.witness);
      };
      if (auto r = assert_step_relations(current, step.graph, pivot, step.new_vertex, current_eta); !r) {
        fail("step relation", r);
      }
      if (auto r = check_connectivity_step(current, current_eta, step.graph, step.eta); !r) {
        fail("connectivity relation", r);
      }
      if (auto r = check_cumulative_relations(graph, eta, step.graph, step.eta, origin); !r) {
        fail("cumulative relation", r);
      }
    }
    trace.steps.push_back(std::move(step.record));
    current = std::move(step.graph);
    current_eta = std::move(step.eta);
  }

  return {std::move(current), DetachmentMap::from_psi(origin, graph.vertex_count()),
          std::move(trace)};
}

}  // namespace amalgam
