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

#include "amalgam_cli/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "amalgam/engine.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/hamilton.hpp"
#include "amalgam/verify.hpp"
#include "amalgam_cli/document.hpp"
#include "amalgam_cli/instances.hpp"

namespace amalgam::cli {
namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw MalformedDocument("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int report(const std::vector<ConditionVerdict>& verdicts, Streams io) {
  const ConditionVerdict* first = nullptr;
  for (const auto& v : verdicts) {
    io.out << v.name << ": " << (v.result.ok ? "ok" : "FAIL") << '\n';
    if (!v.result.ok && first == nullptr) first = &v;
  }
  if (first == nullptr) return kOk;
  io.err << "verification failed: " << first->name << ": " << first->result.witness << '\n';
  return kVerifyFailed;
}

std::vector<ConditionVerdict> check_detachment(const ColoredMultigraph& host,
                                               const AmalgamationSpec& eta, const DetachmentMap& map,
                                               const ColoredMultigraph& detached) {
  try {
    return verify_detachment(host, eta, map, detached).verdicts();
  } catch (const StructuralError& e) {
    throw MalformedDocument(e.what());
  }
}

std::vector<ConditionVerdict> check_ham(const HamDocument& doc) {
  std::vector<ConditionVerdict> verdicts;
  const auto& d = doc.decomposition;
  verdicts.push_back({"hamiltonian", verify_ham_decomposition(d.host, d)});
  if (doc.gdd) {
    Feasibility f = gdd_feasible(*doc.gdd);
    std::vector<std::vector<VertexId>> parts;
    try {
      parts = gdd_partition(*doc.gdd);
    } catch (const DomainError& e) {
      throw MalformedDocument(e.what());
    }
    verdicts.push_back({"gdd", is_gdd(d.host, *doc.gdd, parts)});
    const bool count_ok = f.feasible && static_cast<Count>(d.cycles.size()) == f.cycles;
    verdicts.push_back({"cycle_count", count_ok ? CheckResult::pass()
                                                : CheckResult::fail("expected " +
                                                                    std::to_string(f.cycles) +
                                                                    " cycles")});
    if (f.feasible && f.label == "conditions (i)-(iii)" && verdicts[1].result.ok) {
      verdicts.push_back({"counting_bounds", check_cycle_counting_bounds(d, *doc.gdd, parts)});
    }
  } else {
    const auto n = static_cast<Count>(d.host.vertex_count());
    CheckResult shape;
    for (VertexId u = 0; u < d.host.vertex_count() && shape.ok; ++u) {
      if (d.host.loops(u) != 0) shape = CheckResult::fail("loop at vertex " + std::to_string(u));
      for (VertexId v = u + 1; v < d.host.vertex_count() && shape.ok; ++v) {
        if (d.host.multiplicity(u, v) != doc.lambda) {
          shape = CheckResult::fail("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} does not have multiplicity " + std::to_string(doc.lambda));
        }
      }
    }
    verdicts.push_back({"complete", shape});
    const Count want = doc.lambda * (n - 1) / 2;
    verdicts.push_back({"cycle_count", static_cast<Count>(d.cycles.size()) == want
                                           ? CheckResult::pass()
                                           : CheckResult::fail("expected " + std::to_string(want) +
                                                               " cycles")});
  }
  return verdicts;
}

std::vector<Count> parse_list(const std::string& text) {
  std::vector<Count> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Count v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw MalformedDocument("bad integer list \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

struct DetachArgs {
  std::string input = "-";
  std::string output;
  std::string eta;
  bool check_steps = false;
};

int cmd_detach(const DetachArgs& a, Streams io) {
  const auto doc = parse_document(read_input(a.input, io.in));
  const auto* g = std::get_if<GraphDocument>(&doc);
  if (g == nullptr) throw MalformedDocument("detach expects a graph document");
  AmalgamationSpec eta;
  if (!a.eta.empty()) {
    eta.eta = parse_list(a.eta);
  } else if (g->eta) {
    eta = *g->eta;
  } else {
    throw PreconditionError("the document carries no eta; pass --eta");
  }
  auto result = detach_all(g->graph, eta, {.check_steps = a.check_steps});
  DetachmentDocument out{g->graph, eta, std::move(result.graph), std::move(result.map),
                         std::move(result.trace)};
  write_output(a.output, serialize(out), io.out);
  return kOk;
}

struct HamArgs {
  std::optional<Count> n;
  std::optional<Count> lambda;
  std::optional<Count> parts;
  std::optional<Count> size;
  std::string sizes;
  std::optional<Count> l1;
  std::optional<Count> l2;
  std::string output;
};

int cmd_ham(const HamArgs& a, Streams io) {
  HamDocument doc;
  if (a.n) {
    if (a.parts || a.size || !a.sizes.empty() || a.l1 || a.l2) {
      throw PreconditionError("--n/--lambda cannot be combined with multipartite options");
    }
    doc.lambda = a.lambda.value_or(1);
    doc.decomposition = ham_decompose_lambda_kn(*a.n, doc.lambda);
  } else {
    GddParams params;
    if (!a.sizes.empty()) {
      params.sizes = parse_list(a.sizes);
      if (a.parts && static_cast<Count>(params.sizes.size()) != *a.parts) {
        throw PreconditionError("--parts disagrees with the number of --sizes");
      }
    } else if (a.parts && a.size) {
      params.sizes.assign(static_cast<std::size_t>(std::max<Count>(*a.parts, 0)), *a.size);
    } else {
      throw PreconditionError("give either --n [--lambda] or --parts --size / --sizes with --l1 --l2");
    }
    if (!a.l1 || !a.l2) throw PreconditionError("--l1 and --l2 are required");
    params.lambda1 = *a.l1;
    params.lambda2 = *a.l2;
    const auto f = gdd_feasible(params);
    if (!f.feasible) throw InfeasibleError(f.label, f.reason);
    doc.gdd = params;
    doc.decomposition = ham_decompose_gdd(params);
  }
  write_output(a.output, serialize(doc), io.out);
  return kOk;
}

int cmd_verify(const std::vector<std::string>& files, Streams io) {
  const auto first = parse_document(read_input(files[0], io.in));
  if (files.size() == 2) {
    const auto second = parse_document(read_input(files[1], io.in));
    const auto* host = std::get_if<GraphDocument>(&first);
    const auto* detached = std::get_if<GraphDocument>(&second);
    if (host == nullptr || detached == nullptr) {
      throw MalformedDocument("a verify pair is two graph documents");
    }
    if (!host->eta) throw MalformedDocument("the host document carries no eta");
    if (!detached->psi) throw MalformedDocument("the detached document carries no psi");
    DetachmentMap map;
    try {
      map = DetachmentMap::from_psi(*detached->psi, host->graph.vertex_count());
    } catch (const StructuralError& e) {
      throw MalformedDocument(e.what());
    }
    return report(check_detachment(host->graph, *host->eta, map, detached->graph), io);
  }
  if (const auto* d = std::get_if<DetachmentDocument>(&first)) {
    return report(check_detachment(d->host, d->eta, d->map, d->detached), io);
  }
  if (const auto* h = std::get_if<HamDocument>(&first)) return report(check_ham(*h), io);
  throw MalformedDocument("verify expects a detachment or ham_decomposition document, or a pair");
}

struct FuzzArgs {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string out_dir;
};

struct FuzzOutcome {
  std::string line;
  std::string document;
  bool ok = true;
};

FuzzOutcome fuzz_one(std::uint64_t seed, std::size_t index) {
  // Each instance has its own generator, so results do not depend on --jobs.
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  const auto inst = gen::random_instance(rng);
  FuzzOutcome out;
  std::ostringstream line;
  line << "instance " << index << ": " << inst.graph.vertex_count() << " vertices, "
       << inst.graph.colors() << " colours";
  try {
    auto result = detach_all(inst.graph, inst.eta, {.check_steps = true});
    const auto report = verify_detachment(inst.graph, inst.eta, result.map, result.graph);
    line << ", " << result.trace.steps.size() << " steps";
    for (const auto& v : report.verdicts()) {
      if (!v.result.ok) {
        out.ok = false;
        line << ", " << v.name << " FAIL: " << v.result.witness;
        break;
      }
    }
    out.document = serialize(DetachmentDocument{inst.graph, inst.eta, std::move(result.graph),
                                                std::move(result.map), std::move(result.trace)});
  } catch (const std::exception& e) {
    out.ok = false;
    line << ", error: " << e.what();
  }
  line << (out.ok ? ", ok" : "");
  out.line = line.str();
  return out;
}

int cmd_fuzz(const FuzzArgs& a, Streams io) {
  std::vector<FuzzOutcome> outcomes(a.count);
  const unsigned jobs = std::max(1U, a.jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < a.count; i += jobs) outcomes[i] = fuzz_one(a.seed, i);
    });
  }
  for (auto& t : workers) t.join();

  std::size_t failures = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    io.out << outcomes[i].line << '\n';
    if (!outcomes[i].ok) ++failures;
    if (!a.out_dir.empty() && !outcomes[i].document.empty()) {
      std::filesystem::create_directories(a.out_dir);
      write_output((std::filesystem::path(a.out_dir) / ("instance_" + std::to_string(i) + ".jsonl"))
                       .string(),
                   outcomes[i].document, io.out);
    }
  }
  io.out << a.count - failures << "/" << a.count << " instances passed\n";
  return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_export(const std::string& input, const std::string& output, bool dot, Streams io) {
  const auto doc = parse_document(read_input(input, io.in));
  write_output(output, dot ? to_dot(doc) : serialize(doc), io.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Fair detachments of edge-coloured multigraphs and Hamiltonian decompositions",
               "amalgam"};
  app.require_subcommand(1);

  DetachArgs detach;
  auto* detach_cmd = app.add_subcommand("detach", "Detach every vertex w into eta(w) vertices");
  detach_cmd->add_option("input", detach.input, "Graph document (- for stdin)");
  detach_cmd->add_option("-o,--output", detach.output, "Write the detachment document here");
  detach_cmd->add_option("--eta", detach.eta, "Comma-separated eta, overriding the document");
  detach_cmd->add_flag("--check-steps", detach.check_steps,
                       "Check the per-step relations after every step");

  HamArgs ham;
  auto* ham_cmd = app.add_subcommand("ham", "Hamiltonian decomposition of lambda K_n or K(a^(p); l1, l2)");
  ham_cmd->add_option("--n", ham.n, "Order of lambda K_n");
  ham_cmd->add_option("--lambda", ham.lambda, "Multiplicity of lambda K_n (default 1)");
  ham_cmd->add_option("--parts", ham.parts, "Number of parts p");
  ham_cmd->add_option("--size", ham.size, "Common part size a");
  ham_cmd->add_option("--sizes", ham.sizes, "Comma-separated part sizes");
  ham_cmd->add_option("--l1", ham.l1, "Multiplicity inside a part");
  ham_cmd->add_option("--l2", ham.l2, "Multiplicity between parts");
  ham_cmd->add_option("-o,--output", ham.output, "Write the decomposition document here");

  std::vector<std::string> verify_files;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a detachment or decomposition document, or a host/detached pair");
  verify_cmd->add_option("files", verify_files, "One document, or host and detached graphs")
      ->required()
      ->expected(1, 2);

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Detach and verify random instances");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Seed of the instance generator");
  fuzz_cmd->add_option("--jobs", fuzz.jobs, "Worker threads");
  fuzz_cmd->add_option("--out-dir", fuzz.out_dir, "Write every detachment document here");

  std::string export_input = "-";
  std::string export_output;
  bool export_dot = false;
  auto* export_cmd = app.add_subcommand("export", "Re-emit a document, or render it with --dot");
  export_cmd->add_option("input", export_input, "Any document (- for stdin)");
  export_cmd->add_option("-o,--output", export_output, "Output path");
  export_cmd->add_flag("--dot", export_dot, "Graphviz output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kMalformed;
  }

  try {
    if (*detach_cmd) return cmd_detach(detach, io);
    if (*ham_cmd) return cmd_ham(ham, io);
    if (*verify_cmd) return cmd_verify(verify_files, io);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, io);
    return cmd_export(export_input, export_output, export_dot, io);
  } catch (const MalformedDocument& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.label() << ": " << e.what() << '\n';
    return kInfeasible;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace amalgam::cli
