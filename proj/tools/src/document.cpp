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

#include "amalgam_cli/document.hpp"

#include <json.hpp>
#include <sstream>
#include <type_traits>

#include "amalgam/errors.hpp"

namespace amalgam::cli {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw MalformedDocument("line " + std::to_string(line) + ": " + what);
}

// Reads a field of the expected JSON type, or fails with the line number.
template <typename T>
T field(const Json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) malformed(line, std::string("missing field \"") + key + "\"");
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) throw std::invalid_argument("not an integer");
      const auto v = it->template get<std::int64_t>();
      if constexpr (std::is_unsigned_v<T>) {
        if (v < 0) throw std::invalid_argument("negative");
      }
      return static_cast<T>(v);
    } else {
      return it->template get<T>();
    }
  } catch (const std::exception&) {
    malformed(line, std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<Count> counts(const Json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    malformed(line, std::string("field \"") + key + "\" must be an array of integers");
  }
  std::vector<Count> out;
  for (const auto& x : *it) {
    if (!x.is_number_integer()) malformed(line, std::string("field \"") + key + "\" has a non-integer");
    out.push_back(x.get<Count>());
  }
  return out;
}

std::vector<VertexId> ids(const Json& obj, const char* key, std::size_t line) {
  std::vector<VertexId> out;
  for (Count c : counts(obj, key, line)) {
    if (c < 0) malformed(line, std::string("field \"") + key + "\" has a negative id");
    out.push_back(static_cast<VertexId>(c));
  }
  return out;
}

Json header(const char* kind) {
  Json h;
  h["version"] = kVersion;
  h["kind"] = kind;
  return h;
}

void write_graph(std::ostringstream& os, const ColoredMultigraph& g, const char* tag) {
  for (std::size_t j = 0; j < g.colors(); ++j) {
    const auto& layer = g.layer(j);
    for (VertexId v = 0; v < layer.vertex_count(); ++v) {
      if (layer.loops(v) == 0) continue;
      Json r;
      if (tag != nullptr) r["graph"] = tag;
      r["color"] = j;
      r["loop"] = v;
      r["count"] = layer.loops(v);
      os << r.dump() << '\n';
    }
    for (const auto& e : layer.edges()) {
      Json r;
      if (tag != nullptr) r["graph"] = tag;
      r["color"] = j;
      r["edge"] = {e.u, e.v};
      r["count"] = e.multiplicity;
      os << r.dump() << '\n';
    }
  }
}

// Adds one loop or edge record to `g`.
void read_record(const Json& r, std::size_t line, ColoredMultigraph& g) {
  const auto color = field<std::size_t>(r, "color", line);
  const auto count = field<Count>(r, "count", line);
  if (color >= g.colors()) malformed(line, "colour " + std::to_string(color) + " out of range");
  if (count < 1) malformed(line, "count must be positive");
  try {
    if (r.contains("loop")) {
      const auto v = field<VertexId>(r, "loop", line);
      if (g.layer(color).loops(v) != 0) malformed(line, "repeated loop record");
      g.layer(color).add_edges(v, v, count);
    } else if (r.contains("edge")) {
      const auto e = ids(r, "edge", line);
      if (e.size() != 2 || e[0] == e[1]) malformed(line, "an edge joins two distinct vertices");
      if (g.layer(color).multiplicity(e[0], e[1]) != 0) malformed(line, "repeated edge record");
      g.layer(color).add_edges(e[0], e[1], count);
    } else {
      malformed(line, "expected a loop or edge record");
    }
  } catch (const DomainError& e) {
    malformed(line, e.what());
  }
}

GraphDocument parse_graph(const Json& h, const std::vector<std::pair<std::size_t, Json>>& records) {
  const auto n = field<std::size_t>(h, "vertices", 1);
  const auto k = field<std::size_t>(h, "colors", 1);
  if (k == 0) malformed(1, "at least one colour is required");
  GraphDocument doc{ColoredMultigraph(n, k), {}, {}};
  if (h.contains("eta")) {
    doc.eta = AmalgamationSpec{counts(h, "eta", 1)};
    if (doc.eta->eta.size() != n) malformed(1, "eta must list one value per vertex");
  }
  if (h.contains("psi")) {
    doc.psi = ids(h, "psi", 1);
    if (doc.psi->size() != n) malformed(1, "psi must list one value per vertex");
  }
  for (const auto& [line, r] : records) read_record(r, line, doc.graph);
  return doc;
}

DetachmentDocument parse_detachment(const Json& h,
                                    const std::vector<std::pair<std::size_t, Json>>& records) {
  const auto nh = field<std::size_t>(h, "host_vertices", 1);
  const auto ng = field<std::size_t>(h, "vertices", 1);
  const auto k = field<std::size_t>(h, "colors", 1);
  if (k == 0) malformed(1, "at least one colour is required");
  DetachmentDocument doc{ColoredMultigraph(nh, k), {counts(h, "eta", 1)}, ColoredMultigraph(ng, k),
                         {}, {}};
  if (doc.eta.eta.size() != nh) malformed(1, "eta must list one value per host vertex");
  const auto psi = ids(h, "psi", 1);
  if (psi.size() != ng) malformed(1, "psi must list one value per detached vertex");
  try {
    doc.map = DetachmentMap::from_psi(psi, nh);
  } catch (const StructuralError& e) {
    malformed(1, e.what());
  }
  for (const auto& [line, r] : records) {
    if (r.contains("step")) {
      DetachmentStep s;
      s.pivot = field<VertexId>(r, "pivot", line);
      s.new_vertex = field<VertexId>(r, "new_vertex", line);
      s.eta_before = field<Count>(r, "eta_before", line);
      for (VertexId c : ids(r, "qualifying", line)) s.qualifying_colors.push_back(c);
      const auto moves = r.find("moves");
      if (moves == r.end() || !moves->is_array()) malformed(line, "field \"moves\" must be an array");
      for (const auto& m : *moves) {
        if (!m.is_object()) malformed(line, "a move must be an object");
        s.moves.push_back({field<std::size_t>(m, "color", line),
                           field<Count>(m, "edges_moved", line),
                           field<Count>(m, "loops_opened", line)});
      }
      doc.trace.steps.push_back(std::move(s));
      continue;
    }
    const auto which = field<std::string>(r, "graph", line);
    if (which == "host") {
      read_record(r, line, doc.host);
    } else if (which == "detached") {
      read_record(r, line, doc.detached);
    } else {
      malformed(line, "field \"graph\" must be \"host\" or \"detached\"");
    }
  }
  return doc;
}

HamDocument parse_ham(const Json& h, const std::vector<std::pair<std::size_t, Json>>& records) {
  const auto n = field<std::size_t>(h, "vertices", 1);
  HamDocument doc{{Multigraph(n), {}}, {}, 0};
  if (h.contains("sizes")) {
    doc.gdd = GddParams{counts(h, "sizes", 1), field<Count>(h, "lambda1", 1),
                        field<Count>(h, "lambda2", 1)};
  } else {
    doc.lambda = field<Count>(h, "lambda", 1);
  }
  for (const auto& [line, r] : records) {
    if (r.contains("cycle")) {
      doc.decomposition.cycles.push_back(ids(r, "cycle", line));
      continue;
    }
    const auto e = ids(r, "edge", line);
    const auto count = field<Count>(r, "count", line);
    if (e.size() != 2 || e[0] == e[1] || count < 1) malformed(line, "bad edge record");
    try {
      if (doc.decomposition.host.multiplicity(e[0], e[1]) != 0) malformed(line, "repeated edge record");
      doc.decomposition.host.add_edges(e[0], e[1], count);
    } catch (const DomainError& err) {
      malformed(line, err.what());
    }
  }
  const auto declared = field<std::size_t>(h, "cycles", 1);
  if (declared != doc.decomposition.cycles.size()) {
    malformed(1, "header declares " + std::to_string(declared) + " cycles, found " +
                     std::to_string(doc.decomposition.cycles.size()));
  }
  return doc;
}

const char* palette(std::size_t j) {
  static const char* colors[] = {"red",    "blue",  "darkgreen", "orange", "purple",
                                 "brown",  "cyan4", "magenta",   "gold3",  "gray40"};
  return colors[j % (sizeof(colors) / sizeof(colors[0]))];
}

void dot_layers(std::ostringstream& os, const ColoredMultigraph& g, bool list_vertices = true) {
  if (list_vertices) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  }
  for (std::size_t j = 0; j < g.colors(); ++j) {
    const auto& layer = g.layer(j);
    for (VertexId v = 0; v < layer.vertex_count(); ++v) {
      for (Count i = 0; i < layer.loops(v); ++i) {
        os << "  " << v << " -- " << v << " [color=" << palette(j) << ", label=\"" << j << "\"];\n";
      }
    }
    for (const auto& e : layer.edges()) {
      for (Count i = 0; i < e.multiplicity; ++i) {
        os << "  " << e.u << " -- " << e.v << " [color=" << palette(j) << ", label=\"" << j
           << "\"];\n";
      }
    }
  }
}

}  // namespace

std::string serialize(const GraphDocument& doc) {
  std::ostringstream os;
  Json h = header("graph");
  h["vertices"] = doc.graph.vertex_count();
  h["colors"] = doc.graph.colors();
  if (doc.eta) h["eta"] = doc.eta->eta;
  if (doc.psi) h["psi"] = *doc.psi;
  os << h.dump() << '\n';
  write_graph(os, doc.graph, nullptr);
  return os.str();
}

std::string serialize(const DetachmentDocument& doc) {
  std::ostringstream os;
  Json h = header("detachment");
  h["colors"] = doc.host.colors();
  h["host_vertices"] = doc.host.vertex_count();
  h["vertices"] = doc.detached.vertex_count();
  h["eta"] = doc.eta.eta;
  h["psi"] = doc.map.psi;
  os << h.dump() << '\n';
  write_graph(os, doc.host, "host");
  write_graph(os, doc.detached, "detached");
  for (std::size_t i = 0; i < doc.trace.steps.size(); ++i) {
    const auto& s = doc.trace.steps[i];
    Json r;
    r["step"] = i;
    r["pivot"] = s.pivot;
    r["new_vertex"] = s.new_vertex;
    r["eta_before"] = s.eta_before;
    r["qualifying"] = s.qualifying_colors;
    r["moves"] = Json::array();
    for (const auto& m : s.moves) {
      Json mj;
      mj["color"] = m.color;
      mj["edges_moved"] = m.edges_moved;
      mj["loops_opened"] = m.loops_opened;
      r["moves"].push_back(mj);
    }
    os << r.dump() << '\n';
  }
  return os.str();
}

std::string serialize(const HamDocument& doc) {
  std::ostringstream os;
  Json h = header("ham_decomposition");
  h["vertices"] = doc.decomposition.host.vertex_count();
  h["cycles"] = doc.decomposition.cycles.size();
  if (doc.gdd) {
    h["sizes"] = doc.gdd->sizes;
    h["lambda1"] = doc.gdd->lambda1;
    h["lambda2"] = doc.gdd->lambda2;
  } else {
    h["lambda"] = doc.lambda;
  }
  os << h.dump() << '\n';
  for (const auto& e : doc.decomposition.host.edges()) {
    Json r;
    r["edge"] = {e.u, e.v};
    r["count"] = e.multiplicity;
    os << r.dump() << '\n';
  }
  for (const auto& c : doc.decomposition.cycles) {
    Json r;
    r["cycle"] = c;
    os << r.dump() << '\n';
  }
  return os.str();
}

std::string serialize(const Document& doc) {
  return std::visit([](const auto& d) { return serialize(d); }, doc);
}

Document parse_document(std::string_view text) {
  std::vector<std::pair<std::size_t, Json>> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto line = text.substr(start, end - start);
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      malformed(number, std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) malformed(number, "every line must be a JSON object");
    lines.emplace_back(number, std::move(j));
  }
  if (lines.empty()) throw MalformedDocument("empty document");

  const auto& [hline, h] = lines.front();
  const auto version = field<std::string>(h, "version", hline);
  if (version != kVersion) malformed(hline, "unsupported version \"" + version + "\"");
  const auto kind = field<std::string>(h, "kind", hline);
  const std::vector<std::pair<std::size_t, Json>> records(lines.begin() + 1, lines.end());
  if (kind == "graph") return parse_graph(h, records);
  if (kind == "detachment") return parse_detachment(h, records);
  if (kind == "ham_decomposition") return parse_ham(h, records);
  malformed(hline, "unknown document kind \"" + kind + "\"");
}

std::string to_dot(const Document& doc) {
  std::ostringstream os;
  os << "graph G {\n";
  if (const auto* g = std::get_if<GraphDocument>(&doc)) {
    dot_layers(os, g->graph);
  } else if (const auto* d = std::get_if<DetachmentDocument>(&doc)) {
    for (VertexId u = 0; u < d->detached.vertex_count(); ++u) {
      os << "  " << u << " [label=\"" << u << " (" << d->map.psi[u] << ")\"];\n";
    }
    dot_layers(os, d->detached, false);
  } else {
    const auto& h = std::get<HamDocument>(doc);
    for (VertexId v = 0; v < h.decomposition.host.vertex_count(); ++v) os << "  " << v << ";\n";
    for (std::size_t c = 0; c < h.decomposition.cycles.size(); ++c) {
      const auto& cycle = h.decomposition.cycles[c];
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        os << "  " << cycle[i] << " -- " << cycle[(i + 1) % cycle.size()] << " [color=" << palette(c)
           << ", label=\"" << c << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace amalgam::cli
