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

#include "amalgam/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os.str();
}

// Builds a witness message from streamable parts.
template <typename... Parts>
std::string say(const Parts&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

std::string near(const Rational& x, const Rational& y) {
  return say(str(x), " is not ≈ ", str(y));
}

}  // namespace

bool DetachmentReport::all_hold() const {
  for (const auto& v : verdicts()) {
    if (!v.result.ok) return false;
  }
  return true;
}

std::vector<ConditionVerdict> DetachmentReport::verdicts() const {
  std::vector<ConditionVerdict> out(conditions.begin(), conditions.end());
  out.push_back(loopless);
  out.push_back(amalgamates);
  return out;
}

DetachmentReport verify_detachment(const ColoredMultigraph& host, const AmalgamationSpec& eta,
                                   const DetachmentMap& psi, const ColoredMultigraph& detached) {
  const std::size_t nh = host.vertex_count();
  const std::size_t ng = detached.vertex_count();
  const std::size_t k = host.colors();
  if (detached.colors() != k) {
    throw StructuralError(say("host has ", k, " colours but the detachment has ",
                              detached.colors()));
  }
  if (eta.eta.size() != nh) throw StructuralError("eta does not cover the host vertices");
  if (psi.psi.size() != ng) throw StructuralError("psi does not cover the detached vertices");
  if (psi.fibers.size() != nh) throw StructuralError("psi fibers do not cover the host vertices");
  for (VertexId w = 0; w < nh; ++w) {
    if (static_cast<Count>(psi.fibers[w].size()) != eta.eta[w]) {
      throw StructuralError(say("fiber of host vertex ", w, " has ", psi.fibers[w].size(),
                                " vertices but eta = ", eta.eta[w]));
    }
    for (VertexId u : psi.fibers[w]) {
      if (u >= ng || psi.psi[u] != w) {
        throw StructuralError(say("fiber of host vertex ", w, " lists ", u,
                                  " which psi does not map to it"));
      }
    }
  }

  DetachmentReport report;
  const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7"};
  for (std::size_t i = 0; i < 7; ++i) report.conditions[i].name = names[i];
  report.loopless.name = "loopless";
  report.amalgamates.name = "amalgamates";
  auto& [a1, a2, a3, a4, a5, a6, a7] = report.conditions;

  const Multigraph h = host.underlying();
  const Multigraph g = detached.underlying();

  for (VertexId u = 0; u < ng && report.loopless.result.ok; ++u) {
    if (g.loops(u) != 0) {
      report.loopless.result = CheckResult::fail(say("vertex ", u, " has ", g.loops(u), " loop(s)"));
    }
  }

  // Amalgamating G back under psi must give H exactly, colour by colour.
  for (std::size_t j = 0; j < k && report.amalgamates.result.ok; ++j) {
    Multigraph image(nh);
    const auto& layer = detached.layer(j);
    for (VertexId u = 0; u < ng; ++u) image.add_edges(psi.psi[u], psi.psi[u], layer.loops(u));
    for (const auto& e : layer.edges()) image.add_edges(psi.psi[e.u], psi.psi[e.v], e.multiplicity);
    const auto& want = host.layer(j);
    for (VertexId w = 0; w < nh && report.amalgamates.result.ok; ++w) {
      if (image.loops(w) != want.loops(w)) {
        report.amalgamates.result = CheckResult::fail(
            say("colour ", j, ": host vertex ", w, " has ", want.loops(w),
                " loop(s) but the fiber carries ", image.loops(w), " internal edge(s)"));
      }
      for (VertexId z = w + 1; z < nh && report.amalgamates.result.ok; ++z) {
        if (image.multiplicity(w, z) != want.multiplicity(w, z)) {
          report.amalgamates.result = CheckResult::fail(
              say("colour ", j, ": host pair {", w, ",", z, "} has ", want.multiplicity(w, z),
                  " edge(s) but the fibers are joined by ", image.multiplicity(w, z)));
        }
      }
    }
  }

  for (VertexId u = 0; u < ng; ++u) {
    const VertexId w = psi.psi[u];
    const Count n = eta.eta[w];
    if (a1.result.ok) {
      const Rational want(h.degree(w), n);
      if (!approx(g.degree(u), want)) {
        a1.result = CheckResult::fail(say("vertex ", u, " (host ", w, "): degree ",
                                          near(g.degree(u), want)));
      }
    }
    for (std::size_t j = 0; j < k && a2.result.ok; ++j) {
      const Rational want(host.layer(j).degree(w), n);
      const Count got = detached.layer(j).degree(u);
      if (!approx(got, want)) {
        a2.result = CheckResult::fail(
            say("vertex ", u, " (host ", w, ") colour ", j, ": degree ", near(got, want)));
      }
    }
  }

  for (VertexId u = 0; u < ng; ++u) {
    for (VertexId v = u + 1; v < ng; ++v) {
      const VertexId w = psi.psi[u];
      const VertexId z = psi.psi[v];
      if (w == z) {
        const Count n = eta.eta[w];
        if (n < 2) continue;
        if (a3.result.ok) {
          const Rational want(h.loops(w), choose2(n));
          if (!approx(g.multiplicity(u, v), want)) {
            a3.result = CheckResult::fail(say("pair {", u, ",", v, "} in fiber of ", w, ": ",
                                              near(g.multiplicity(u, v), want)));
          }
        }
        for (std::size_t j = 0; j < k && a4.result.ok; ++j) {
          const Rational want(host.layer(j).loops(w), choose2(n));
          const Count got = detached.layer(j).multiplicity(u, v);
          if (!approx(got, want)) {
            a4.result = CheckResult::fail(say("pair {", u, ",", v, "} in fiber of ", w,
                                              " colour ", j, ": ", near(got, want)));
          }
        }
      } else {
        const Count n = eta.eta[w] * eta.eta[z];
        if (a5.result.ok) {
          const Rational want(h.multiplicity(w, z), n);
          if (!approx(g.multiplicity(u, v), want)) {
            a5.result = CheckResult::fail(say("pair {", u, ",", v, "} over host pair {", w, ",",
                                              z, "}: ", near(g.multiplicity(u, v), want)));
          }
        }
        for (std::size_t j = 0; j < k && a6.result.ok; ++j) {
          const Rational want(host.layer(j).multiplicity(w, z), n);
          const Count got = detached.layer(j).multiplicity(u, v);
          if (!approx(got, want)) {
            a6.result = CheckResult::fail(say("pair {", u, ",", v, "} over host pair {", w, ",",
                                              z, "} colour ", j, ": ", near(got, want)));
          }
        }
      }
    }
  }

  for (std::size_t j = 0; j < k && a7.result.ok; ++j) {
    bool qualifies = true;
    for (VertexId w = 0; qualifies && w < nh; ++w) {
      const Count d = host.layer(j).degree(w);
      qualifies = d % eta.eta[w] == 0 && (d / eta.eta[w]) % 2 == 0;
    }
    if (!qualifies) continue;
    const auto before = edge_component_count(host.layer(j));
    const auto after = edge_component_count(detached.layer(j));
    if (before != after) {
      a7.result = CheckResult::fail(say("colour ", j, ": ", before,
                                        " component(s) in the host but ", after,
                                        " in the detachment"));
    }
  }
  return report;
}

CheckResult verify_ham_decomposition(const Multigraph& host, const HamDecomposition& decomposition) {
  const std::size_t n = host.vertex_count();
  Multigraph total(n);
  for (std::size_t c = 0; c < decomposition.cycles.size(); ++c) {
    const auto& cycle = decomposition.cycles[c];
    if (cycle.size() != n || n < 2) {
      return CheckResult::fail(say("cycle ", c, " has ", cycle.size(), " vertices, the host has ", n));
    }
    std::vector<bool> seen(n, false);
    for (VertexId v : cycle) {
      if (v >= n) return CheckResult::fail(say("cycle ", c, " visits unknown vertex ", v));
      if (seen[v]) return CheckResult::fail(say("cycle ", c, " visits vertex ", v, " twice"));
      seen[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i) total.add_edges(cycle[i], cycle[(i + 1) % n]);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (host.loops(v) != 0) {
      return CheckResult::fail(say("host vertex ", v, " has loops, which no cycle can use"));
    }
    for (VertexId u = v + 1; u < n; ++u) {
      if (total.multiplicity(v, u) != host.multiplicity(v, u)) {
        return CheckResult::fail(say("pair {", v, ",", u, "} is covered ", total.multiplicity(v, u),
                                     " time(s) but has multiplicity ", host.multiplicity(v, u)));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_gdd(const Multigraph& g, const GddParams& params,
                   const std::vector<std::vector<VertexId>>& partition) {
  const std::size_t n = g.vertex_count();
  if (partition.size() != params.parts()) {
    return CheckResult::fail(say("partition has ", partition.size(), " parts, expected ",
                                 params.parts()));
  }
  std::vector<std::size_t> part_of(n, partition.size());
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (static_cast<Count>(partition[i].size()) != params.sizes[i]) {
      return CheckResult::fail(say("part ", i, " has ", partition[i].size(), " vertices, expected ",
                                   params.sizes[i]));
    }
    for (VertexId v : partition[i]) {
      if (v >= n || part_of[v] != partition.size()) {
        return CheckResult::fail(say("vertex ", v, " is unknown or listed twice"));
      }
      part_of[v] = i;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] == partition.size()) {
      return CheckResult::fail(say("vertex ", v, " is in no part"));
    }
    if (g.loops(v) != 0) return CheckResult::fail(say("vertex ", v, " has a loop"));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const Count want = part_of[u] == part_of[v] ? params.lambda1 : params.lambda2;
      if (g.multiplicity(u, v) != want) {
        return CheckResult::fail(say("pair {", u, ",", v, "} has multiplicity ",
                                     g.multiplicity(u, v), ", expected ", want));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult assert_step_relations(const ColoredMultigraph& before, const ColoredMultigraph& after,
                                  VertexId y, VertexId v, const AmalgamationSpec& eta_before) {
  if (y >= before.vertex_count() || v >= after.vertex_count() ||
      eta_before.eta.size() != before.vertex_count()) {
    throw StructuralError("step relation inputs do not fit together");
  }
  const Count n = eta_before.eta[y];
  const Count n1 = n - 1;
  if (n < 2) throw StructuralError("pivot had eta < 2");

  // Layer index k() denotes the underlying graph.
  const std::size_t k = before.colors();
  const Multigraph hb = before.underlying();
  const Multigraph ha = after.underlying();
  auto pick = [&](std::size_t j, bool old) -> const Multigraph& {
    if (j == k) return old ? hb : ha;
    return old ? before.layer(j) : after.layer(j);
  };
  auto label = [&](const char* overall, const char* per_color, std::size_t j) {
    return j == k ? std::string(overall) : say(per_color, " colour ", j);
  };

  std::set<VertexId> neighbours;
  for (const auto& [u, m] : hb.adjacency(y)) neighbours.insert(u);

  // The underlying graph first, then each colour.
  for (std::size_t i = 0; i <= k; ++i) {
    const std::size_t j = (i + k) % (k + 1);
    const Multigraph& old = pick(j, true);
    const Multigraph& now = pick(j, false);
    {
      const Rational want(old.loops(y) * (n1 - 1), n);
      if (!approx(now.loops(y), want)) {
        return CheckResult::fail(say(label("B1", "B2", j), ": loops at ", y, ": ",
                                     near(now.loops(y), want)));
      }
    }
    {
      const Rational got(now.degree(y), n1);
      const Rational want(old.degree(y), n);
      if (!approx(got, want)) {
        return CheckResult::fail(say(label("B3(i)", "B4(i)", j), ": ", near(got, want)));
      }
      if (!approx(now.degree(v), want)) {
        return CheckResult::fail(say(label("B3(ii)", "B4(ii)", j), ": ",
                                     near(now.degree(v), want)));
      }
    }
    for (VertexId u : neighbours) {
      const Rational want(old.multiplicity(y, u), n);
      const Rational got(now.multiplicity(y, u), n1);
      if (!approx(got, want)) {
        return CheckResult::fail(say(label("B5(i)", "B6(i)", j), ": neighbour ", u, ": ",
                                     near(got, want)));
      }
      if (!approx(now.multiplicity(v, u), want)) {
        return CheckResult::fail(say(label("B5(ii)", "B6(ii)", j), ": neighbour ", u, ": ",
                                     near(now.multiplicity(v, u), want)));
      }
    }
    {
      const Rational got(now.multiplicity(y, v), n1);
      const Rational want(old.loops(y), choose2(n));
      if (!approx(got, want)) {
        return CheckResult::fail(say(label("B5(iii)", "B6(iii)", j), ": ", near(got, want)));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_cumulative_relations(const ColoredMultigraph& host, const AmalgamationSpec& eta,
                                       const ColoredMultigraph& current,
                                       const AmalgamationSpec& eta_current,
                                       const std::vector<VertexId>& origin) {
  const std::size_t nh = host.vertex_count();
  if (origin.size() != current.vertex_count() || eta_current.eta.size() != origin.size() ||
      eta.eta.size() != nh) {
    throw StructuralError("cumulative relation inputs do not fit together");
  }
  const Multigraph h = host.underlying();
  const Multigraph hi = current.underlying();

  for (VertexId w = 0; w < nh; ++w) {
    const Rational got(hi.degree(w), eta_current.eta[w]);
    const Rational want(h.degree(w), eta.eta[w]);
    if (!approx(got, want)) {
      return CheckResult::fail(say("C3(i): vertex ", w, ": ", near(got, want)));
    }
  }
  for (VertexId r = nh; r < origin.size(); ++r) {
    const VertexId w = origin[r];
    const Rational got(hi.multiplicity(w, r), eta_current.eta[w]);
    const Rational want(h.loops(w), choose2(eta.eta[w]));
    if (!approx(got, want)) {
      return CheckResult::fail(say("C5(i): vertex ", w, " and its split-off ", r, ": ",
                                   near(got, want)));
    }
  }
  for (VertexId w = 0; w < nh; ++w) {
    for (VertexId z = w + 1; z < nh; ++z) {
      const Rational got(hi.multiplicity(w, z), eta_current.eta[w] * eta_current.eta[z]);
      const Rational want(h.multiplicity(w, z), eta.eta[w] * eta.eta[z]);
      if (!approx(got, want)) {
        return CheckResult::fail(say("C7(i): pair {", w, ",", z, "}: ", near(got, want)));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_connectivity_step(const ColoredMultigraph& before,
                                    const AmalgamationSpec& eta_before,
                                    const ColoredMultigraph& after,
                                    const AmalgamationSpec& eta_after) {
  auto qualifies = [](const Multigraph& layer, const AmalgamationSpec& eta) {
    for (VertexId v = 0; v < layer.vertex_count(); ++v) {
      const Count d = layer.degree(v);
      if (d % eta.eta[v] != 0 || (d / eta.eta[v]) % 2 != 0) return false;
    }
    return true;
  };
  for (std::size_t j = 0; j < before.colors(); ++j) {
    if (!qualifies(before.layer(j), eta_before)) continue;
    if (!qualifies(after.layer(j), eta_after)) {
      return CheckResult::fail(say("D1: colour ", j, " no longer has even ratios d/eta"));
    }
    const auto b = edge_component_count(before.layer(j));
    const auto a = edge_component_count(after.layer(j));
    if (a != b) {
      return CheckResult::fail(say("D2: colour ", j, " went from ", b, " to ", a, " component(s)"));
    }
  }
  return CheckResult::pass();
}

CheckResult is_evenly_equitable(const Multigraph& g, const ColoredMultigraph& coloring) {
  if (coloring.vertex_count() != g.vertex_count()) {
    return CheckResult::fail("colouring and graph have different vertex sets");
  }
  if (coloring.underlying() != g) {
    return CheckResult::fail("colour classes do not sum to the graph");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Count lo = 0;
    Count hi = 0;
    for (std::size_t j = 0; j < coloring.colors(); ++j) {
      const Count d = coloring.layer(j).degree(v);
      if (d % 2 != 0) {
        return CheckResult::fail(say("vertex ", v, " has odd degree ", d, " in colour ", j));
      }
      lo = j == 0 ? d : std::min(lo, d);
      hi = j == 0 ? d : std::max(hi, d);
    }
    if (hi - lo > 2) {
      return CheckResult::fail(say("vertex ", v, " has colour degrees from ", lo, " to ", hi));
    }
  }
  return CheckResult::pass();
}

CycleProfile cycle_profile(const std::vector<VertexId>& cycle,
                           const std::vector<std::vector<VertexId>>& partition) {
  std::map<VertexId, std::size_t> part_of;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (VertexId v : partition[i]) part_of[v] = i;
  }
  CycleProfile profile;
  profile.pure_per_part.assign(partition.size(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t a = part_of.at(cycle[i]);
    const std::size_t b = part_of.at(cycle[(i + 1) % cycle.size()]);
    if (a == b) {
      ++profile.pure_per_part[a];
    } else {
      ++profile.mixed;
    }
  }
  return profile;
}

CheckResult check_cycle_counting_bounds(const HamDecomposition& decomposition,
                                        const GddParams& params,
                                        const std::vector<std::vector<VertexId>>& partition) {
  const Count p = static_cast<Count>(params.parts());
  // With one part there are no mixed edges to count.
  const Count need_mixed = p >= 2 ? p : 0;
  const bool tight = p >= 2 && params.lambda1 == params.lambda2 * params.sizes[0] * (p - 1);
  for (std::size_t c = 0; c < decomposition.cycles.size(); ++c) {
    const auto profile = cycle_profile(decomposition.cycles[c], partition);
    for (std::size_t i = 0; i < partition.size(); ++i) {
      const Count cap = params.sizes[i] - 1;
      const Count pure = profile.pure_per_part[i];
      if (pure > cap || (tight && pure != cap)) {
        return CheckResult::fail(say("cycle ", c, " has ", pure, " pure edge(s) in part ", i,
                                     tight ? ", expected exactly " : ", at most ", cap));
      }
    }
    if (profile.mixed < need_mixed || (tight && profile.mixed != p)) {
      return CheckResult::fail(say("cycle ", c, " has ", profile.mixed, " mixed edge(s), expected ",
                                   tight ? "exactly " : "at least ", need_mixed));
    }
  }
  return CheckResult::pass();
}

}  // namespace amalgam
