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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amalgam/engine.hpp"
#include "amalgam/hamilton.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam::cli {

inline constexpr std::string_view kVersion = "v1";

/// The input is not a well-formed document.
class MalformedDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coloured multigraph with an optional number function (for detach) or an
/// optional map onto a host (when it is the detached half of a pair).
struct GraphDocument {
  ColoredMultigraph graph;
  std::optional<AmalgamationSpec> eta;
  std::optional<std::vector<VertexId>> psi;
};

struct DetachmentDocument {
  ColoredMultigraph host;
  AmalgamationSpec eta;
  ColoredMultigraph detached;
  DetachmentMap map;
  DetachmentTrace trace;
};

struct HamDocument {
  HamDecomposition decomposition;
  /// Set for K(a_1..a_p; lambda1, lambda2); unset for lambda K_n.
  std::optional<GddParams> gdd;
  Count lambda = 0;
};

using Document = std::variant<GraphDocument, DetachmentDocument, HamDocument>;

// Documents are JSON lines: a header object carrying "version" and "kind",
// then one record per line. Multiplicities are counts, never repeated
// records, and records come in ascending (colour, vertex) order.
std::string serialize(const GraphDocument& doc);
std::string serialize(const DetachmentDocument& doc);
std::string serialize(const HamDocument& doc);
std::string serialize(const Document& doc);

/// Throws MalformedDocument on any syntax or schema error.
Document parse_document(std::string_view text);

/// Graphviz rendering of the underlying graph, one edge line per colour and
/// parallel edge, coloured by class.
std::string to_dot(const Document& doc);

}  // namespace amalgam::cli
