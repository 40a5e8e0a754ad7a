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

// Command implementations behind the `mcq` driver. Each returns a
// RunReport; the driver only parses flags, reads input and prints.
// Field names are documented in docs/report-schema.md.

#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcq/circuit.hpp"
#include "mcq/counting.hpp"
#include "mcq/error.hpp"
#include "mcq/graph.hpp"
#include "mcq/graph_io.hpp"
#include "mcq/grover.hpp"
#include "mcq/oracle.hpp"
#include "mcq/resources.hpp"
#include "mcq/state_vector.hpp"

namespace mcq {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitCapability = 3,
  kExitMismatch = 4,
};

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  std::string input_digest;  // empty when no graph was read
  Json parameters = Json::object();
  Json results = Json::object();
  double wall_time_ms = 0.0;
  int exit_code = kExitOk;
  std::string text;  // human-readable summary
  std::string csv;   // sweep rows, when the command produces them

  /// Everything except wall time is a function of inputs and seed.
  Json to_json(bool include_wall_time = true) const {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["parameters"] = parameters;
    j["results"] = results;
    j["versions"] = {{"mcq", kVersion}, {"rng", "mt19937_64"}};
    if (include_wall_time) j["wall_time_ms"] = wall_time_ms;
    j["exit_code"] = exit_code;
    return j;
  }
};

namespace detail {

inline Json samples_json(const SampleCounts& s) {
  Json counts = Json::object();
  for (const auto& [bits, count] : s.counts) counts[bits] = count;
  return {{"shots", s.shots}, {"seed", s.seed}, {"generator", s.generator},
          {"counts", counts}};
}

inline Json nodes_json(const NodeSubset& x) {
  Json nodes = Json::array();
  for (std::size_t j : x.nodes()) nodes.push_back(j + 1);
  return nodes;
}

inline std::string fixed(double v, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

inline std::string samples_text(const SampleCounts& s) {
  std::ostringstream out;
  for (const auto& [bits, count] : s.counts) out << "  " << bits << "  " << count << "\n";
  return out.str();
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline RunReport cmd_enum(const AdjacencyMatrix& a) {
  detail::Stopwatch clock;
  RunReport r;
  r.command = "enum";
  r.input_digest = graph_digest(a);
  r.parameters = {{"n", a.size()}};
  const auto cliques = enumerate_maximal_cliques(a);
  Json list = Json::array();
  std::ostringstream text;
  text << "maximal cliques of a " << a.size() << "-node graph: M = " << cliques.size()
       << "\n";
  for (const auto& c : cliques) {
    list.push_back({{"bits", c.to_string()}, {"nodes", detail::nodes_json(c)}});
    text << "  " << c.to_string() << "  {";
    const auto nodes = c.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) text << (i ? "," : "") << nodes[i] + 1;
    text << "}\n";
  }
  r.results = {{"M", cliques.size()}, {"cliques", list}};
  r.text = text.str();
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

/// Oracle phase per basis state against the classical test. The gate
/// backend simulates the literal circuit on the uniform clique state and
/// reads each sign; the structured backend applies the diagonal phase.
inline RunReport cmd_oracle_test(const AdjacencyMatrix& a, Backend backend) {
  detail::Stopwatch clock;
  RunReport r;
  r.command = "oracle-test";
  r.input_digest = graph_digest(a);
  r.parameters = {{"n", a.size()}, {"backend", to_string(backend)}};

  const std::size_t n = a.size();
  GroverOperator g(a, backend);
  StateVector s = g.initial_state();
  g.apply_oracle(s);
  double leakage = 0.0;
  const auto amps = g.clique_amplitudes(s, &leakage);
  const double uniform = 1.0 / std::sqrt(static_cast<double>(amps.size()));

  Json rows = Json::array();
  bool all_agree = leakage <= 1e-12;
  std::ostringstream text;
  text << "x" << std::string(n > 1 ? n - 1 : 0, ' ')
       << "  f_circuit  f_classical  agree\n";
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    const NodeSubset subset(n, x);
    const bool clean = std::abs(std::abs(amps[x].real()) - uniform) <= 1e-10 &&
                       std::abs(amps[x].imag()) <= 1e-10;
    const bool f_circuit = amps[x].real() < 0.0;
    const bool f_classical = is_maximal_clique(a, subset);
    const bool agree = clean && f_circuit == f_classical;
    all_agree = all_agree && agree;
    rows.push_back({{"x", subset.to_string()},
                    {"f_circuit", f_circuit ? 1 : 0},
                    {"f_classical", f_classical ? 1 : 0},
                    {"sign", f_circuit ? -1 : 1},
                    {"agree", agree}});
    text << subset.to_string() << "  " << (f_circuit ? 1 : 0) << "          "
         << (f_classical ? 1 : 0) << "            " << (agree ? "yes" : "NO") << "\n";
  }
  text << (all_agree ? "all states agree" : "MISMATCH") << " (leakage "
       << leakage << ")\n";
  r.results = {{"rows", rows}, {"all_agree", all_agree}, {"leakage", leakage}};
  r.exit_code = all_agree ? kExitOk : kExitMismatch;
  r.text = text.str();
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

inline Json search_json(const SearchResult& s) {
  const double shots = static_cast<double>(s.samples.shots);
  const double p = s.predicted_success;
  const double sigma = std::sqrt(p * (1.0 - p) / shots);
  return {{"M", s.marked},
          {"R", s.iterations},
          {"theta", s.theta},
          {"predicted_success", p},
          {"exact_marked_probability", s.exact_marked_probability},
          {"marked_mass", s.marked_mass},
          {"binomial_sigma", sigma},
          {"asymptotic_R", s.asymptotic_iterations},
          {"global_phase", s.global_phase},
          {"leakage", s.leakage},
          {"samples", detail::samples_json(s.samples)}};
}

inline std::string search_text(const SearchResult& s) {
  std::ostringstream out;
  out << "M = " << s.marked << ", R = " << s.iterations << " (asymptotic "
      << detail::fixed(s.asymptotic_iterations, 3) << "), theta = "
      << detail::fixed(s.theta) << "\n"
      << "predicted success " << detail::fixed(s.predicted_success)
      << ", measured marked mass " << detail::fixed(s.marked_mass) << " over "
      << s.samples.shots << " shots\n"
      << detail::samples_text(s.samples);
  return out.str();
}

inline RunReport cmd_grover(const AdjacencyMatrix& a, const GroverConfig& cfg) {
  detail::Stopwatch clock;
  RunReport r;
  r.command = "grover";
  r.input_digest = graph_digest(a);
  r.parameters = {{"n", a.size()},
                  {"backend", to_string(cfg.backend)},
                  {"shots", cfg.shots},
                  {"seed", cfg.seed},
                  {"M", cfg.marked ? Json(*cfg.marked) : Json(nullptr)},
                  {"R", cfg.iterations ? Json(*cfg.iterations) : Json(nullptr)},
                  {"classical_fallback", cfg.classical_fallback}};
  const auto s = run_search(a, cfg);
  r.results = search_json(s);
  r.text = search_text(s);
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

inline Json estimate_json(const CountEstimate& e) {
  const std::uint64_t mirror = ((std::uint64_t{1} << e.t) - e.j_measured) % (std::uint64_t{1} << e.t);
  return {{"t", e.t},
          {"j", e.j_measured},
          {"j_mirror", mirror},
          {"theta_hat", e.theta_hat},
          {"M_raw", e.m_raw},
          {"M_raw_mirror", estimate_from_outcome(e.n, e.t, mirror).m_raw},
          {"M_rounded", e.m_rounded},
          {"rounding_tie", e.rounding_tie},
          {"samples", detail::samples_json(e.samples)}};
}

inline std::string estimate_text(const CountEstimate& e) {
  std::ostringstream out;
  out << "t = " << e.t << ", modal j = " << e.j_measured << ", theta = "
      << detail::fixed(e.theta_hat) << "\n"
      << "M_raw = " << detail::fixed(e.m_raw) << ", M = " << e.m_rounded
      << (e.rounding_tie ? " (half-integer tie rounded up)" : "") << "\n"
      << detail::samples_text(e.samples);
  return out.str();
}

struct CountConfig {
  std::optional<std::size_t> precision;  // t; defaults to ceil(n/2) + 3
  std::uint64_t shots = kDefaultCountingShots;
  std::uint64_t seed = kDefaultSeed;
  Backend backend = Backend::structured;
  std::uint64_t search_shots = 1000;  // pipeline only
};

inline RunReport cmd_count(const AdjacencyMatrix& a, const CountConfig& cfg) {
  detail::Stopwatch clock;
  const std::size_t t = cfg.precision.value_or(default_precision(a.size()));
  RunReport r;
  r.command = "count";
  r.input_digest = graph_digest(a);
  r.parameters = {{"n", a.size()}, {"t", t}, {"shots", cfg.shots},
                  {"seed", cfg.seed}, {"backend", to_string(cfg.backend)}};
  const auto e = run_counting(a, t, cfg.shots, cfg.seed, cfg.backend);
  r.results = estimate_json(e);
  r.text = estimate_text(e);
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

inline RunReport cmd_pipeline(const AdjacencyMatrix& a, const CountConfig& cfg) {
  detail::Stopwatch clock;
  const std::size_t t = cfg.precision.value_or(default_precision(a.size()));
  RunReport r;
  r.command = "pipeline";
  r.input_digest = graph_digest(a);
  r.parameters = {{"n", a.size()},         {"t", t},
                  {"shots", cfg.shots},    {"search_shots", cfg.search_shots},
                  {"seed", cfg.seed},      {"backend", to_string(cfg.backend)}};
  const auto out = count_then_search(a, t, cfg.shots, cfg.seed, cfg.backend, cfg.search_shots);
  r.results = {{"count", estimate_json(out.estimate)}, {"search", search_json(out.search)}};
  r.text = "counting:\n" + estimate_text(out.estimate) + "search:\n" + search_text(out.search);
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

inline Json resources_json(const ResourceReport& r) {
  Json j = {{"toffoli_count", r.toffoli_count},
            {"mcx_count_pre_decomposition", r.mcx_count_pre_decomposition},
            {"mcz_count_pre_decomposition", r.mcz_count_pre_decomposition},
            {"x_count", r.x_count},
            {"cnot_count", r.cnot_count},
            {"cz_count", r.cz_count},
            {"other_count", r.other_count},
            {"gate_total", r.gate_total},
            {"total_qubits", r.total_qubits},
            {"workspace_qubits", r.workspace_qubits},
            {"work_qubits_used", r.work_qubits_used}};
  j["depth"] = r.depth ? Json(*r.depth) : Json(nullptr);
  return j;
}

/// Closed form for the decomposed Toffoli count of one oracle call,
/// valid for n >= 3: 6n^2 (copy blocks) + 4n(n - 1) (intersect blocks)
/// + 2(n - 2) (phase flip).
inline std::int64_t oracle_toffoli_closed_form(std::int64_t n) {
  return 10 * n * n - 2 * n - 4;
}

/// Resource accounting for the oracle on n nodes. The layout reserves n
/// work qubits for decomposition; at most n - 1 are used.
inline RunReport cmd_resources(std::size_t n, bool decompose,
                               std::optional<std::string> digest = std::nullopt) {
  detail::Stopwatch clock;
  if (n == 0) throw std::invalid_argument("resources need n >= 1");
  RunReport r;
  r.command = "resources";
  r.input_digest = digest.value_or("");
  r.parameters = {{"n", n}, {"decompose", decompose}};

  // The counts do not depend on the edges, only on n.
  const auto b = build_oracle(AdjacencyMatrix(n), n);
  const Json blocks = {
      {"V", resources_json(count_resources(b.v, decompose))},
      {"W", resources_json(count_resources(b.w, decompose))},
      {"phase_flip", resources_json(count_resources(b.phase_flip, decompose))},
      {"W_inverse", resources_json(count_resources(invert(b.w), decompose))},
      {"V_inverse", resources_json(count_resources(invert(b.v), decompose))}};
  const auto body = count_resources(b.body, decompose);
  const auto closed = oracle_toffoli_closed_form(static_cast<std::int64_t>(n));
  const double scale = 10.0 * static_cast<double>(n * n);

  r.results = {{"oracle", resources_json(body)},
               {"blocks", blocks},
               {"qubits",
                {{"clique", n},
                 {"data", n * n},
                 {"ancilla", n * n},
                 {"work_reserved", b.layout.work.size()},
                 {"total", b.layout.total_width}}}};
  if (decompose && n >= 3) {
    r.results["closed_form"] = {
        {"expected_toffoli", closed},
        {"matches", static_cast<std::int64_t>(body.toffoli_count) == closed},
        {"ratio_to_10n2", static_cast<double>(body.toffoli_count) / scale}};
    if (static_cast<std::int64_t>(body.toffoli_count) != closed) r.exit_code = kExitMismatch;
  }

  std::ostringstream text;
  text << "oracle on n = " << n << (decompose ? " (decomposed)" : " (pre-decomposition)")
       << "\n"
       << "  qubits: " << n << " clique + " << n * n << " data + " << n * n
       << " ancilla + " << b.layout.work.size() << " work = " << b.layout.total_width << "\n"
       << "  toffoli " << body.toffoli_count << ", mcx " << body.mcx_count_pre_decomposition
       << ", mcz " << body.mcz_count_pre_decomposition << ", x " << body.x_count
       << ", cnot " << body.cnot_count << ", cz " << body.cz_count << ", total "
       << body.gate_total << "\n";
  if (decompose && n >= 3) {
    text << "  closed form 10n^2 - 2n - 4 = " << closed
         << (static_cast<std::int64_t>(body.toffoli_count) == closed ? " (matches)"
                                                                      : " (MISMATCH)")
         << ", ratio to 10n^2 = "
         << detail::fixed(static_cast<double>(body.toffoli_count) / scale, 4) << "\n";
  }
  r.text = text.str();
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

/// `steps` evenly spaced thresholds from the largest weight (no edges)
/// down to one spacing below the smallest (all edges).
inline std::vector<double> even_thresholds(const WeightedMatrix& w, std::size_t steps) {
  const auto values = w.distinct_off_diagonal();
  if (values.empty() || steps == 0) return {};
  if (steps == 1) return {values.front()};
  const double hi = values.front();
  const double span = values.front() - values.back();
  const double spacing = (span > 0.0 ? span : 1.0) / static_cast<double>(steps - 1);
  const double lo = values.back() - spacing;
  std::vector<double> out;
  for (std::size_t k = 0; k < steps; ++k) {
    out.push_back(hi - (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  return out;
}

/// Clique census along a threshold sweep. With no thresholds given, the
/// order-complex thresholds are used.
inline RunReport cmd_sweep(const WeightedMatrix& w, std::vector<double> thresholds) {
  detail::Stopwatch clock;
  if (thresholds.empty()) thresholds = order_complex_thresholds(w);
  RunReport r;
  r.command = "sweep";
  r.parameters = {{"n", w.size()}, {"thresholds", thresholds}};
  Json rows = Json::array();
  std::ostringstream csv;
  std::ostringstream text;
  csv << "threshold,edges,edge_density,M\n";
  text << std::left << std::setw(14) << "threshold" << std::setw(8) << "edges"
       << std::setw(14) << "edge_density" << "M\n";
  for (double th : thresholds) {
    const auto a = binarize(w, th);
    const std::size_t m = enumerate_maximal_cliques(a).size();
    const Json density = a.size() >= 2 ? Json(edge_density(a)) : Json(nullptr);
    rows.push_back({{"threshold", th},
                    {"edges", a.edge_count()},
                    {"edge_density", density},
                    {"M", m},
                    {"graph_digest", graph_digest(a)}});
    const std::string density_text = a.size() >= 2 ? detail::fixed(edge_density(a)) : "";
    csv << th << "," << a.edge_count() << "," << density_text << "," << m << "\n";
    text << std::left << std::setw(14) << th << std::setw(8) << a.edge_count()
         << std::setw(14) << density_text << m << "\n";
  }
  r.results = {{"rows", rows}};
  r.csv = csv.str();
  r.text = text.str();
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

}  // namespace mcq
