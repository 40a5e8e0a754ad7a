// Copyright 2026 The mcq Authors
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

// mcq: maximal-clique Grover search and counting from the command line.
//
//   mcq enum        --input g.txt
//   mcq oracle-test --input g.txt --backend gate
//   mcq grover      --input g.txt [--m M] [--r R] [--shots K] [--seed S]
//   mcq count       --input g.txt [--t BITS]
//   mcq pipeline    --input g.txt [--t BITS]
//   mcq resources   (--input g.txt | --n N) [--decompose]
//   mcq sweep       --input w.json [--threshold X ...] [--steps K] [--csv]
//
// Exit status: 0 ok, 2 parse error, 3 capability/width error, 4 mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcq/commands.hpp"

namespace {

struct Options {
  std::string input;
  std::string format = "edgelist";
  std::string backend = "structured";
  std::uint64_t shots = 0;  // 0 = command default
  std::uint64_t seed = mcq::kDefaultSeed;
  std::optional<std::size_t> t;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> r;
  std::optional<std::size_t> n;
  std::vector<double> thresholds;
  std::optional<std::size_t> steps;
  bool json = false;
  bool csv = false;
  bool decompose = false;
  bool no_classical_fallback = false;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw mcq::ParseError("--input is required", 0);
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw mcq::ParseError("cannot open " + path, 0);
  buf << in.rdbuf();
  return buf.str();
}

mcq::AdjacencyMatrix load_graph(const Options& o) {
  const auto format = mcq::graph_format_from_string(o.format);
  if (!format) throw mcq::ParseError("unknown format '" + o.format + "'", 0);
  return mcq::parse_graph(read_input(o.input), *format);
}

mcq::Backend parse_backend(const Options& o) {
  const auto b = mcq::backend_from_string(o.backend);
  if (!b) throw std::invalid_argument("unknown backend '" + o.backend + "'");
  return *b;
}

mcq::RunReport run(const std::string& command, const Options& o) {
  if (command == "enum") return mcq::cmd_enum(load_graph(o));
  if (command == "oracle-test") return mcq::cmd_oracle_test(load_graph(o), parse_backend(o));
  if (command == "grover") {
    mcq::GroverConfig cfg;
    cfg.marked = o.m;
    cfg.iterations = o.r;
    cfg.backend = parse_backend(o);
    if (o.shots) cfg.shots = o.shots;
    cfg.seed = o.seed;
    cfg.classical_fallback = !o.no_classical_fallback;
    return mcq::cmd_grover(load_graph(o), cfg);
  }
  if (command == "count" || command == "pipeline") {
    mcq::CountConfig cfg;
    cfg.precision = o.t;
    cfg.backend = parse_backend(o);
    if (o.shots) cfg.shots = o.shots;
    cfg.seed = o.seed;
    const auto a = load_graph(o);
    return command == "count" ? mcq::cmd_count(a, cfg) : mcq::cmd_pipeline(a, cfg);
  }
  if (command == "resources") {
    if (o.n) return mcq::cmd_resources(*o.n, o.decompose);
    const auto a = load_graph(o);
    return mcq::cmd_resources(a.size(), o.decompose, mcq::graph_digest(a));
  }
  if (command == "sweep") {
    const auto w = mcq::parse_weighted_json(read_input(o.input));
    auto thresholds = o.thresholds;
    if (thresholds.empty() && o.steps) thresholds = mcq::even_thresholds(w, *o.steps);
    return mcq::cmd_sweep(w, thresholds);
  }
  throw std::logic_error("unhandled command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-clique oracle, Grover search and quantum counting"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Graph file ('-' for stdin)");
    sub->add_option("--format", o.format, "edgelist | matrix-json | dimacs")
        ->check(CLI::IsMember({"edgelist", "matrix-json", "dimacs"}));
  };
  const auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", o.backend, "gate | structured")
        ->check(CLI::IsMember({"gate", "structured"}));
  };
  const auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--shots", o.shots, "Measurement shots");
    sub->add_option("--seed", o.seed, "RNG seed");
  };

  auto* enum_cmd = app.add_subcommand("enum", "List maximal cliques by brute force");
  add_graph(enum_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-test", "Compare oracle phases to the classical test");
  add_graph(oracle_cmd);
  add_backend(oracle_cmd);

  auto* grover_cmd = app.add_subcommand("grover", "Run Grover search");
  add_graph(grover_cmd);
  add_backend(grover_cmd);
  add_sampling(grover_cmd);
  grover_cmd->add_option("--m", o.m, "Known number of maximal cliques");
  grover_cmd->add_option("--r", o.r, "Iteration override");
  grover_cmd->add_flag("--no-classical-fallback", o.no_classical_fallback,
                       "Do not enumerate M classically when --m is absent");

  auto* count_cmd = app.add_subcommand("count", "Estimate M by quantum counting");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Count, then search with the estimate");
  for (auto* sub : {count_cmd, pipeline_cmd}) {
    add_graph(sub);
    add_backend(sub);
    add_sampling(sub);
    sub->add_option("--t", o.t, "Counting precision qubits")->check(CLI::Range(1, 8));
  }

  auto* resources_cmd = app.add_subcommand("resources", "Gate and qubit accounting of one oracle call");
  add_graph(resources_cmd);
  resources_cmd->add_option("--n", o.n, "Node count (instead of --input)");
  resources_cmd->add_flag("--decompose", o.decompose, "Cost MCX/MCZ as Toffoli chains");

  auto* sweep_cmd = app.add_subcommand("sweep", "Clique census over binarization thresholds");
  sweep_cmd->add_option("--input", o.input, "Weighted matrix as JSON")->required();
  sweep_cmd->add_option("--threshold", o.thresholds, "Thresholds (strict '>')");
  sweep_cmd->add_option("--steps", o.steps, "Evenly spaced threshold count");
  sweep_cmd->add_flag("--csv", o.csv, "Print CSV rows");

  app.add_flag("--json", o.json, "Emit the run report as one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mcq::kExitParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto report = run(command, o);
    if (o.json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else if (o.csv && !report.csv.empty()) {
      std::cout << report.csv;
    } else {
      std::cout << report.text;
    }
    return report.exit_code;
  } catch (const mcq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return mcq::kExitParse;
  } catch (const mcq::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return mcq::kExitCapability;
  } catch (const mcq::NoMarkedStatesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mcq::kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mcq::kExitCapability;
  }
}
