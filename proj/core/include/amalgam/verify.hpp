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

#include <array>
#include <string>
#include <vector>

#include "amalgam/hamilton.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam {

/// Outcome of one check. `witness` describes the smallest counterexample
/// (by vertex id, then colour) when the check fails.
struct CheckResult {
  bool ok = true;
  std::string witness;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string witness) { return {false, std::move(witness)}; }
};

struct ConditionVerdict {
  std::string name;
  CheckResult result;
};

/// Verdicts for the seven fairness conditions A1..A7 of a detachment, plus
/// looplessness and the requirement that G amalgamates back onto H colour by
/// colour.
struct DetachmentReport {
  std::array<ConditionVerdict, 7> conditions;
  ConditionVerdict loopless;
  ConditionVerdict amalgamates;

  bool all_hold() const;
  /// Every verdict in a fixed order: A1..A7, loopless, amalgamates.
  std::vector<ConditionVerdict> verdicts() const;
};

/// Checks a detachment G of H under psi in exact arithmetic:
///   A1  d_G(u) ≈ d_H(w)/eta(w)
///   A2  the same per colour
///   A3  m_G(u,u') ≈ l_H(w)/C(eta(w),2) inside a fiber with eta(w) >= 2
///   A4  the same per colour
///   A5  m_G(u,v) ≈ m_H(w,z)/(eta(w) eta(z)) across fibers
///   A6  the same per colour
///   A7  colours with d_{H(j)}(w)/eta(w) an even integer everywhere keep their
///       number of components (of the edge-induced colour class)
/// Throws StructuralError if psi, eta and the two graphs do not fit together.
DetachmentReport verify_detachment(const ColoredMultigraph& host, const AmalgamationSpec& eta,
                                   const DetachmentMap& psi, const ColoredMultigraph& detached);

CheckResult verify_ham_decomposition(const Multigraph& host, const HamDecomposition& decomposition);

/// Intra-part multiplicities are lambda1, inter-part ones lambda2, and there
/// are no loops. `partition` must list every vertex exactly once with part
/// sizes matching params.sizes.
CheckResult is_gdd(const Multigraph& g, const GddParams& params,
                   const std::vector<std::vector<VertexId>>& partition);

/// Relations between one detachment step H_i -> H_{i+1} (pivot y, new vertex
/// v): loop counts, degrees and multiplicities at y and v scale by
/// (eta(y)-1)/eta(y) and 1/eta(y) respectively, per colour and overall.
CheckResult assert_step_relations(const ColoredMultigraph& before, const ColoredMultigraph& after,
                                  VertexId pivot, VertexId new_vertex,
                                  const AmalgamationSpec& eta_before);

/// Cumulative relations between the original host H and an intermediate H_i:
/// d_{H_i}(w)/eta_i(w), m_{H_i}(w,v_r)/eta_i(w) for vertices v_r split off
/// from w, and m_{H_i}(w,z)/(eta_i(w) eta_i(z)) all stay ≈ their values in H.
/// `origin` maps each vertex of H_i to the host vertex it came from.
CheckResult check_cumulative_relations(const ColoredMultigraph& host, const AmalgamationSpec& eta,
                                       const ColoredMultigraph& current,
                                       const AmalgamationSpec& eta_current,
                                       const std::vector<VertexId>& origin);

/// For every colour whose ratio d/eta is an even integer at every vertex of
/// `before`, the ratio stays an even integer after the step and the number of
/// components of the colour class does not change.
CheckResult check_connectivity_step(const ColoredMultigraph& before,
                                    const AmalgamationSpec& eta_before,
                                    const ColoredMultigraph& after,
                                    const AmalgamationSpec& eta_after);

/// Every colour degree is even, colour degrees at a vertex differ by at most
/// two, and the colour classes sum to `g`.
CheckResult is_evenly_equitable(const Multigraph& g, const ColoredMultigraph& coloring);

struct CycleProfile {
  std::vector<Count> pure_per_part;
  Count mixed = 0;
};

CycleProfile cycle_profile(const std::vector<VertexId>& cycle,
                           const std::vector<std::vector<VertexId>>& partition);

/// Each cycle has at most a-1 pure edges per part and at least p mixed edges;
/// when lambda1 = lambda2 a (p-1) both bounds are attained by every cycle.
CheckResult check_cycle_counting_bounds(const HamDecomposition& decomposition,
                                        const GddParams& params,
                                        const std::vector<std::vector<VertexId>>& partition);

}  // namespace amalgam
