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

// Grover search for the maximal cliques of a graph.
//
// One iteration is G = U O with O the clique oracle and U = 2|psi><psi| - I
// the inversion about the mean. Two backends advance a state by G:
//
//   gate        the literal oracle circuit on the full n + 2n^2 register,
//               followed by H^n (I - 2|0><0|) H^n on the clique qubits.
//               That circuit equals -U, so each step carries a global -1.
//   structured  an n-qubit state; O is a diagonal sign table from the
//               classical oracle evaluation and U is applied exactly.
//
// After R steps the marked amplitude is sin((2R + 1) theta / 2) with
// sin(theta / 2) = sqrt(M / N).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcq/circuit.hpp"
#include "mcq/error.hpp"
#include "mcq/graph.hpp"
#include "mcq/oracle.hpp"
#include "mcq/state_vector.hpp"

namespace mcq {

enum class Backend { gate, structured };

inline std::optional<Backend> backend_from_string(std::string_view s) {
  if (s == "gate") return Backend::gate;
  if (s == "structured") return Backend::structured;
  return std::nullopt;
}

inline std::string to_string(Backend b) {
  return b == Backend::gate ? "gate" : "structured";
}

/// The bare reflection circuit on n qubits: H^n (I - 2|0><0|) H^n, which
/// equals -(2|psi><psi| - I).
inline Circuit build_diffusion(std::size_t n) {
  std::vector<Qubit> qubits(n);
  for (std::size_t q = 0; q < n; ++q) qubits[q] = q;
  Circuit c(n);
  for (Qubit q : qubits) c.add(Gate::h(q));
  c.append(build_zero_reflection(qubits, n));
  for (Qubit q : qubits) c.add(Gate::h(q));
  return c;
}

/// Same reflection on the clique register of an oracle layout.
inline Circuit build_diffusion(const RegisterLayout& layout) {
  Circuit c(layout.total_width);
  for (Qubit q : layout.clique) c.add(Gate::h(q));
  c.append(build_zero_reflection(layout.clique, layout.total_width));
  for (Qubit q : layout.clique) c.add(Gate::h(q));
  c.set_layout(layout);
  return c;
}

/// Global phase of build_diffusion relative to 2|psi><psi| - I.
inline constexpr double kDiffusionCircuitPhase = -1.0;

/// 2 * mean - a over a block of amplitudes.
inline void invert_about_mean(std::span<Complex> amps) {
  Complex mean{0.0, 0.0};
  for (const auto& a : amps) mean += a;
  mean /= static_cast<double>(amps.size());
  for (auto& a : amps) a = 2.0 * mean - a;
}

/// One textbook Grover step (sign table, then 2|psi><psi| - I) on a block.
inline void structured_grover_step(std::span<Complex> amps,
                                   std::span<const std::uint8_t> marks) {
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (marks[x]) amps[x] = -amps[x];
  }
  invert_about_mean(amps);
}

/// Advances a state by one Grover iteration on either backend.
class GroverOperator {
 public:
  GroverOperator(const AdjacencyMatrix& a, Backend backend)
      : backend_(backend), n_(a.size()) {
    if (n_ == 0) throw std::invalid_argument("graph has no nodes");
    if (backend == Backend::structured) {
      if (n_ > kMaxStructuredQubits) {
        throw CapabilityError("structured backend supports at most " +
                              std::to_string(kMaxStructuredQubits) + " nodes, got " +
                              std::to_string(n_));
      }
    } else {
      const auto width = build_layout(n_).total_width;
      if (width > kMaxGateQubits) {
        throw CapabilityError("gate backend needs " + std::to_string(width) +
                              " qubits for n = " + std::to_string(n_) + "; limit is " +
                              std::to_string(kMaxGateQubits));
      }
      bundle_ = build_oracle(a);
      diffusion_ = build_diffusion(bundle_->layout);
    }
    marks_ = oracle_truth_table(a);
  }

  Backend backend() const noexcept { return backend_; }
  std::size_t nodes() const noexcept { return n_; }

  /// Qubits in the simulated register.
  std::size_t width() const { return bundle_ ? bundle_->layout.total_width : n_; }

  /// Per-step phase relative to the textbook operator U O.
  double global_phase() const {
    return backend_ == Backend::gate ? kDiffusionCircuitPhase : 1.0;
  }

  const std::vector<std::uint8_t>& marks() const noexcept { return marks_; }
  const std::optional<OracleBundle>& bundle() const noexcept { return bundle_; }

  /// Uniform superposition on the clique register; for the gate backend
  /// the data register is loaded and ancillas are |0>.
  StateVector initial_state() const {
    if (!bundle_) return init_uniform(n_);
    StateVector s(width());
    apply_circuit(s, bundle_->prep);
    Circuit h(width());
    for (Qubit q : bundle_->layout.clique) h.add(Gate::h(q));
    apply_circuit(s, h);
    return s;
  }

  void apply_oracle(StateVector& s) const {
    if (bundle_) {
      apply_circuit(s, bundle_->body);
    } else {
      apply_diagonal_phase(s, marks_);
    }
  }

  void apply(StateVector& s) const {
    if (bundle_) {
      apply_circuit(s, bundle_->body);
      apply_circuit(s, diffusion_);
    } else {
      structured_grover_step(s.amplitudes(), marks_);
    }
  }

  /// Clique-register amplitudes with data and ancillas at their resting
  /// values. `leakage`, if given, receives the probability outside that
  /// slice (zero when the oracle uncomputes correctly).
  std::vector<Complex> clique_amplitudes(const StateVector& s,
                                         double* leakage = nullptr) const {
    if (s.width() != width()) throw std::invalid_argument("state width mismatch");
    const std::size_t count = std::size_t{1} << n_;
    std::vector<Complex> out(count);
    if (!bundle_) {
      for (std::size_t x = 0; x < count; ++x) out[x] = s[x];
      if (leakage) *leakage = 0.0;
      return out;
    }
    const auto rest = resting_index();
    const std::size_t shift = width() - n_;
    double kept = 0.0;
    for (std::uint64_t x = 0; x < count; ++x) {
      out[x] = s[(x << shift) | rest];
      kept += std::norm(out[x]);
    }
    if (leakage) *leakage = std::max(0.0, s.norm_squared() - kept);
    return out;
  }

 private:
  // Basis index of the non-clique qubits: data loaded, everything else 0.
  std::uint64_t resting_index() const {
    std::uint64_t idx = 0;
    const auto& l = bundle_->layout;
    for (std::size_t i = 0; i < l.n; ++i) {
      for (std::size_t j = 0; j < l.n; ++j) {
        if (bundle_->matrix.closed_entry(i, j) != 0) {
          idx |= std::uint64_t{1} << (l.total_width - 1 - l.data_at(i, j));
        }
      }
    }
    return idx;
  }

  Backend backend_;
  std::size_t n_;
  std::vector<std::uint8_t> marks_;
  std::optional<OracleBundle> bundle_;
  Circuit diffusion_;
};

/// theta = 2 asin(sqrt(M / 2^n)).
inline double grover_angle(std::size_t n, std::uint64_t marked) {
  const double N = std::ldexp(1.0, static_cast<int>(n));
  return 2.0 * std::asin(std::sqrt(static_cast<double>(marked) / N));
}

/// sin^2((2R + 1) theta / 2).
inline double predicted_success(double theta, std::uint64_t iterations) {
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta / 2.0);
  return s * s;
}

/// The large-N estimate (pi/4) sqrt(N / M), reported for reference.
inline double asymptotic_iterations(std::size_t n, std::uint64_t marked) {
  const double N = std::ldexp(1.0, static_cast<int>(n));
  return std::numbers::pi / 4.0 * std::sqrt(N / static_cast<double>(marked));
}

class NoMarkedStatesError : public std::runtime_error {
 public:
  explicit NoMarkedStatesError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Iteration count maximizing sin^2((2R + 1) theta / 2). The candidates are
/// the integers either side of pi / (2 theta) - 1/2; equal success picks
/// the smaller R.
inline std::uint64_t optimal_iterations(std::size_t n, std::uint64_t marked) {
  if (marked == 0) throw NoMarkedStatesError("no marked states: M must be >= 1");
  if (n >= 63 || marked > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("M must not exceed 2^n");
  }
  const double theta = grover_angle(n, marked);
  const double r0 = std::numbers::pi / (2.0 * theta) - 0.5;
  const auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(r0)));
  const auto hi = static_cast<std::uint64_t>(std::max(0.0, std::ceil(r0)));
  const double p_lo = predicted_success(theta, lo);
  const double p_hi = predicted_success(theta, hi);
  return p_hi > p_lo + 1e-12 ? hi : lo;
}

inline constexpr std::uint64_t kDefaultSeed = 20171114;

struct GroverConfig {
  std::optional<std::uint64_t> marked;      // M, when known
  std::optional<std::uint64_t> iterations;  // R override
  Backend backend = Backend::structured;
  std::uint64_t shots = 1000;
  std::uint64_t seed = kDefaultSeed;
  bool classical_fallback = true;  // enumerate M when it is not given
};

struct SearchResult {
  std::uint64_t marked = 0;  // M used for scheduling
  std::uint64_t iterations = 0;
  double theta = 0.0;
  double predicted_success = 0.0;
  double asymptotic_iterations = 0.0;
  double exact_marked_probability = 0.0;  // from the final state
  double marked_mass = 0.0;               // fraction of samples that verify
  double global_phase = 1.0;              // accumulated relative to (U O)^R
  double leakage = 0.0;                   // gate backend only
  Backend backend = Backend::structured;
  SampleCounts samples;
  std::vector<Complex> clique_amplitudes;
};

/// Prepares the uniform state, applies G R times, and samples the clique
/// register. Every sampled bitstring is checked with is_maximal_clique.
inline SearchResult run_search(const AdjacencyMatrix& a, const GroverConfig& config) {
  const std::size_t n = a.size();
  std::uint64_t marked = 0;
  if (config.marked) {
    marked = *config.marked;
  } else if (config.classical_fallback) {
    marked = enumerate_maximal_cliques(a).size();
  } else {
    throw std::invalid_argument(
        "the number of maximal cliques M is unknown; estimate it with `count` "
        "(or pass --m) before searching");
  }
  if (marked == 0) throw NoMarkedStatesError("no marked states: M = 0");
  if (n < 63 && marked > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("M must not exceed 2^n");
  }

  GroverOperator g(a, config.backend);
  SearchResult r;
  r.backend = config.backend;
  r.marked = marked;
  r.theta = grover_angle(n, marked);
  r.iterations = config.iterations ? *config.iterations : optimal_iterations(n, marked);
  r.predicted_success = predicted_success(r.theta, r.iterations);
  r.asymptotic_iterations = asymptotic_iterations(n, marked);

  StateVector s = g.initial_state();
  for (std::uint64_t k = 0; k < r.iterations; ++k) g.apply(s);
  r.global_phase = std::pow(g.global_phase(), static_cast<double>(r.iterations));

  r.clique_amplitudes = g.clique_amplitudes(s, &r.leakage);
  // Marginal over the clique register; data and ancillas are traced out.
  const auto p = marginal_probabilities(s, 0, n);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (g.marks()[x]) r.exact_marked_probability += p[x];
  }
  r.samples = sample_distribution(p, n, config.shots, config.seed);

  std::uint64_t verified = 0;
  for (const auto& [bits, count] : r.samples.counts) {
    if (is_maximal_clique(a, NodeSubset::from_string(bits))) verified += count;
  }
  r.marked_mass = static_cast<double>(verified) / static_cast<double>(r.samples.shots);
  return r;
}

}  // namespace mcq
