// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

// graphstab: convert and verify graph codes and stabilizer codes.
//
//   graphstab info FILE [--distance]
//   graphstab convert FILE --to {stabilizer|graph} -o OUT [--no-check]
//   graphstab verify FILE [--max-weight W] [--json]
//   graphstab distance FILE
//   graphstab dot FILE [-o OUT]
//   graphstab roundtrip FILE
//
// Exit codes: 0 success, 1 input or usage error, 2 failed check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "graphstab/code_io.hpp"
#include "graphstab/code_sim.hpp"
#include "graphstab/convert.hpp"
#include "graphstab/errors.hpp"
#include "graphstab/graph_code.hpp"
#include "graphstab/stabilizer.hpp"

namespace {

using namespace graphstab;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

// Thrown for requests that are well-formed JSON but the wrong kind of code.
struct KindError : Error {
  using Error::Error;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
  if (!out.flush()) throw UsageError("write to " + path + " failed");
}

const GraphCode& require_graph(const CodeFile& file, const std::string& what) {
  if (file.kind() != CodeKind::kGraph) {
    throw KindError(what + " needs a graph code; run `graphstab convert --to graph` first");
  }
  return std::get<GraphCode>(file.payload);
}

std::string params(std::size_t n, std::size_t k) {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "]]";
}

// distance_kl when the simulator can hold the code, otherwise the reason it cannot.
std::variant<std::size_t, std::string> try_distance_kl(const GraphCode& g) {
  try {
    return distance_kl(encode_isometry(g));
  } catch (const SizeLimitError& e) {
    return std::string(e.what());
  } catch (const UnsupportedCharacter& e) {
    return std::string(e.what());
  }
}

int cmd_info(const std::string& path, bool with_distance) {
  const CodeFile file = load_code_file(path);
  if (file.kind() == CodeKind::kGraph) {
    const auto& g = std::get<GraphCode>(file.payload);
    const auto s = graph_to_stabilizer(g);
    std::cout << "graph code, p=" << g.field().p() << ", " << params(g.outputs(), g.inputs())
              << "\n";
    std::cout << "vertices: inputs=" << g.inputs() << " aux=" << g.aux()
              << " outputs=" << g.outputs() << "\n";
    std::cout << "dim S=" << s.dim() << ", degenerate dim " << g.aux() << "\n";
    if (with_distance) {
      const auto d = distance_algebraic(s);
      std::cout << "d=" << d << "\n";
      const auto kl = try_distance_kl(g);
      if (const auto* dk = std::get_if<std::size_t>(&kl)) {
        std::cout << "distance_algebraic=" << d << " distance_kl=" << *dk << "\n";
        if (*dk != d) {
          std::cerr << "error: distances disagree\n";
          return kCheckFailed;
        }
      } else {
        std::cout << "distance_kl skipped: " << std::get<std::string>(kl) << "\n";
      }
    }
    return kOk;
  }
  const auto& s = std::get<StabilizerSpace>(file.payload);
  std::cout << "stabilizer, p=" << s.field().p() << ", " << params(s.n(), s.n() - s.dim())
            << ", degenerate dim " << degenerate_part(s).dim() << "\n";
  std::cout << "dim S=" << s.dim() << "\n";
  if (with_distance) std::cout << "d=" << distance_algebraic(s) << "\n";
  return kOk;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out,
                bool no_check) {
  const CodeFile file = load_code_file(path);
  const bool want_graph = to == "graph";
  if (want_graph == (file.kind() == CodeKind::kGraph)) {
    throw KindError(path + " is already a " + to + " code");
  }
  if (want_graph) {
    const auto& s = std::get<StabilizerSpace>(file.payload);
    const GraphCode g = stabilizer_to_graph(s);
    write_file(out, dump_json(to_json(g)));
    if (!no_check) {
      if (graph_to_stabilizer(g) != s) {
        std::cerr << "error: round-trip check failed\n";
        return kCheckFailed;
      }
      std::cout << "wrote " << out << " (" << g.vertex_count()
                << " vertices); round-trip check: ok\n";
    }
    return kOk;
  }
  const auto& g = std::get<GraphCode>(file.payload);
  const StabilizerSpace s = graph_to_stabilizer(g);
  write_file(out, dump_json(to_json(s)));
  if (!no_check) {
    if (graph_to_stabilizer(stabilizer_to_graph(s)) != s) {
      std::cerr << "error: round-trip check failed\n";
      return kCheckFailed;
    }
    std::cout << "wrote " << out << " (" << s.dim() << " generators); round-trip check: ok\n";
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::size_t max_weight, bool as_json) {
  const CodeFile file = load_code_file(path);
  const GraphCode& g = require_graph(file, "verify");
  const CodeIsometry iso = encode_isometry(g);
  const CheckReport reports[] = {isometry_check(iso), stabilizer_eigencheck(g, iso),
                                 kl_check(iso, max_weight)};
  bool pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (as_json) {
      doc.push_back(r.to_json());
    } else {
      std::cout << r.to_text() << "\n";
      if (r.details.contains("weights")) {
        for (const auto& w : r.details["weights"]) {
          if (w["pass"].get<bool>()) continue;
          std::cout << "  weight " << w["weight"] << ": " << w["violations"]
                    << " violations, first " << w["first_violation"].dump() << "\n";
        }
      }
    }
  }
  if (as_json) std::cout << dump_json(doc);
  if (!as_json) std::cout << (pass ? "verify: pass\n" : "verify: FAIL\n");
  return pass ? kOk : kCheckFailed;
}

int cmd_distance(const std::string& path) {
  const CodeFile file = load_code_file(path);
  if (file.kind() == CodeKind::kStabilizer) {
    std::cout << "distance_algebraic=" << distance_algebraic(std::get<StabilizerSpace>(file.payload))
              << "\n";
    return kOk;
  }
  const auto& g = std::get<GraphCode>(file.payload);
  const auto d = distance_algebraic(graph_to_stabilizer(g));
  std::cout << "distance_algebraic=" << d << "\n";
  const auto kl = try_distance_kl(g);
  if (const auto* dk = std::get_if<std::size_t>(&kl)) {
    std::cout << "distance_kl=" << *dk << "\n";
    if (*dk != d) {
      std::cerr << "error: distances disagree\n";
      return kCheckFailed;
    }
  } else {
    std::cout << "distance_kl skipped: " << std::get<std::string>(kl) << "\n";
  }
  return kOk;
}

int cmd_dot(const std::string& path, const std::string& out) {
  const CodeFile file = load_code_file(path);
  const std::string dot = to_dot(require_graph(file, "dot"));
  if (out.empty()) {
    std::cout << dot;
  } else {
    write_file(out, dot);
  }
  return kOk;
}

int cmd_roundtrip(const std::string& path) {
  const CodeFile file = load_code_file(path);
  const RoundtripReport report = std::visit([](const auto& c) { return roundtrip_check(c); },
                                            file.payload);
  for (const auto& stage : report.stages) {
    std::cout << stage.name << ": " << params(stage.n, stage.k) << "\n";
  }
  if (!report.message.empty()) std::cout << report.message << "\n";
  std::cout << (report.pass ? "roundtrip: pass\n" : "roundtrip: FAIL\n");
  return report.pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph codes and stabilizer codes over prime fields"};
  app.require_subcommand(1);

  std::string path;
  std::string out;
  std::string to;
  bool with_distance = false;
  bool no_check = false;
  bool as_json = false;
  std::size_t max_weight = 1;

  auto* info = app.add_subcommand("info", "Print code parameters");
  info->add_option("file", path, "Code file (JSON)")->required();
  info->add_flag("--distance", with_distance, "Also compute the minimum distance");

  auto* convert = app.add_subcommand("convert", "Convert between graph and stabilizer form");
  convert->add_option("file", path, "Code file (JSON)")->required();
  convert->add_option("--to", to, "Target kind")
      ->required()
      ->check(CLI::IsMember({"stabilizer", "graph"}));
  convert->add_option("-o,--output", out, "Output file")->required();
  convert->add_flag("--no-check", no_check, "Skip the re-conversion check");

  auto* verify = app.add_subcommand("verify", "Simulate a graph code and check it");
  verify->add_option("file", path, "Graph code file (JSON)")->required();
  verify->add_option("--max-weight", max_weight, "Largest error weight for the KL check");
  verify->add_flag("--json", as_json, "Print the reports as JSON");

  auto* distance = app.add_subcommand("distance", "Minimum distance");
  distance->add_option("file", path, "Code file (JSON)")->required();

  auto* dot = app.add_subcommand("dot", "Export a graph code as Graphviz DOT");
  dot->add_option("file", path, "Graph code file (JSON)")->required();
  dot->add_option("-o,--output", out, "Output file (default: stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Convert there and back and compare");
  roundtrip->add_option("file", path, "Code file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(path, with_distance);
    if (*convert) return cmd_convert(path, to, out, no_check);
    if (*verify) return cmd_verify(path, max_weight, as_json);
    if (*distance) return cmd_distance(path);
    if (*dot) return cmd_dot(path, out);
    if (*roundtrip) return cmd_roundtrip(path);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
