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

// Quantum counting: phase estimation of the Grover operator.
//
// G has eigenvalues e^{+-i theta} on span{|chi>, |xi>}, and the uniform
// state splits evenly between the two eigenvectors. A t-qubit counting
// register (qubit 0 most significant) controls G^(2^(t-1-q)) from qubit q;
// the inverse QFT then peaks at j ~ 2^t theta / 2pi or its mirror
// 2^t - j. Both branches give the same count M = 2^n sin^2(theta / 2).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcq/circuit.hpp"
#include "mcq/error.hpp"
#include "mcq/graph.hpp"
#include "mcq/grover.hpp"
#include "mcq/oracle.hpp"
#include "mcq/state_vector.hpp"

namespace mcq {

inline constexpr std::size_t kMaxCountingQubits = 8;
inline constexpr std::uint64_t kDefaultCountingShots = 64;

/// ceil(n / 2) + 3.
inline std::size_t default_precision(std::size_t n) { return (n + 1) / 2 + 3; }

/// QFT on t qubits, |j> -> 2^{-t/2} sum_k e^{2 pi i j k / 2^t} |k>, with
/// qubit 0 the most significant bit of j and k. Hadamard and controlled
/// phase ladder followed by the bit-reversal swaps.
inline Circuit qft(std::size_t t) {
  if (t < 1) throw std::invalid_argument("QFT needs at least one qubit");
  Circuit c(t);
  for (std::size_t q = 0; q < t; ++q) {
    c.add(Gate::h(q));
    for (std::size_t m = q + 1; m < t; ++m) {
      const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(m - q + 1));
      c.add(Gate::cphase(m, q, angle));
    }
  }
  for (std::size_t q = 0; q < t / 2; ++q) c.add(Gate::swap(q, t - 1 - q));
  return c;
}

/// t(t + 1)/2 rotations (H and controlled phases) and floor(t / 2) swaps.
inline Circuit inverse_qft(std::size_t t) { return invert(qft(t)); }

struct CountEstimate {
  std::size_t n = 0;
  std::size_t t = 0;
  std::uint64_t j_measured = 0;
  double theta_hat = 0.0;  // canonical branch, in [0, pi]
  double m_raw = 0.0;
  std::uint64_t m_rounded = 0;
  bool rounding_tie = false;  // m_raw sat on a half-integer
  SampleCounts samples;       // over the counting register
};

/// The estimate implied by one measured value j.
inline CountEstimate estimate_from_outcome(std::size_t n, std::size_t t, std::uint64_t j) {
  const double two_t = std::ldexp(1.0, static_cast<int>(t));
  if (static_cast<double>(j) >= two_t) throw std::out_of_range("j outside [0, 2^t)");
  CountEstimate e;
  e.n = n;
  e.t = t;
  e.j_measured = j;
  double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / two_t;
  if (theta > std::numbers::pi) theta = 2.0 * std::numbers::pi - theta;
  e.theta_hat = theta;
  const double N = std::ldexp(1.0, static_cast<int>(n));
  const double s = std::sin(theta / 2.0);
  e.m_raw = std::clamp(N * s * s, 0.0, N);
  // N sin^2 is integral only when sin^2 is 0, 1/2 or 1; there the sin call
  // is off by an ulp or so, so snap back.
  const double nearest = std::round(e.m_raw);
  if (std::abs(e.m_raw - nearest) <= 1e-12 * N) e.m_raw = nearest;
  const double frac = e.m_raw - std::floor(e.m_raw);
  e.rounding_tie = std::abs(frac - 0.5) < 1e-9;
  e.m_rounded = static_cast<std::uint64_t>(std::floor(e.m_raw + 0.5));
  if (e.rounding_tie) e.m_rounded = static_cast<std::uint64_t>(std::floor(e.m_raw)) + 1;
  return e;
}

namespace detail {

inline void check_counting_limits(std::size_t n, std::size_t t, Backend backend) {
  if (t < 1) throw std::invalid_argument("counting needs t >= 1 precision qubits");
  if (t > kMaxCountingQubits) {
    throw CapabilityError("counting precision is limited to " +
                          std::to_string(kMaxCountingQubits) + " qubits");
  }
  const std::size_t width =
      t + (backend == Backend::gate ? build_layout(n).total_width : n);
  const std::size_t limit = backend == Backend::gate ? kMaxGateQubits : kMaxStateQubits;
  if (backend == Backend::structured && n > kMaxStructuredQubits) {
    throw CapabilityError("structured backend supports at most " +
                          std::to_string(kMaxStructuredQubits) + " nodes");
  }
  if (width > limit) {
    throw CapabilityError("counting register plus target needs " +
                          std::to_string(width) + " qubits; limit is " +
                          std::to_string(limit));
  }
}

// Structured backend: t counting qubits then n target qubits. For each
// counting qubit the G power is applied, by repetition, to every target
// block whose control bit is set.
inline StateVector structured_counting_state(const AdjacencyMatrix& a, std::size_t t) {
  const std::size_t n = a.size();
  const auto marks = oracle_truth_table(a);
  StateVector s(t + n);
  Circuit hadamards(t + n);
  for (Qubit q = 0; q < t + n; ++q) hadamards.add(Gate::h(q));
  apply_circuit(s, hadamards);

  const std::size_t block = std::size_t{1} << n;
  auto amps = s.amplitudes();
  for (std::size_t q = 0; q < t; ++q) {
    // Qubit q is bit (t - 1 - q) of j and controls G to that same power.
    const std::uint64_t power = std::uint64_t{1} << (t - 1 - q);
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << t); ++j) {
      if ((j & power) == 0) continue;
      auto target = amps.subspan(j * block, block);
      for (std::uint64_t k = 0; k < power; ++k) structured_grover_step(target, marks);
    }
  }
  apply_circuit(s, inverse_qft(t).shifted(0, t + n));
  return s;
}

// Controlled Grover step on the gate backend. Only the two zero
// reflections need the extra control: without them the oracle body
// uncomputes to identity and the diffusion Hadamards cancel. The trailing
// Z on the control removes the circuit's -1 so the controlled operator is
// exactly U O.
inline Circuit controlled_grover_circuit(const OracleBundle& b, Qubit control,
                                         std::size_t width, std::size_t offset) {
  const auto& l = b.layout;
  std::vector<Qubit> clique;
  for (Qubit q : l.clique) clique.push_back(q + offset);

  const auto controlled_reflection = [&] {
    Circuit c(width);
    for (Qubit q : clique) c.add(Gate::x(q));
    std::vector<Control> cs{pos(control)};
    for (std::size_t i = 0; i + 1 < clique.size(); ++i) cs.push_back(pos(clique[i]));
    c.add(Gate::mcz(std::move(cs), clique.back()));
    for (Qubit q : clique) c.add(Gate::x(q));
    return c;
  };

  Circuit c(width);
  c.append(b.v.shifted(offset, width));
  c.append(b.w.shifted(offset, width));
  c.append(controlled_reflection());
  c.append(invert(b.w).shifted(offset, width));
  c.append(invert(b.v).shifted(offset, width));
  for (Qubit q : clique) c.add(Gate::h(q));
  c.append(controlled_reflection());
  for (Qubit q : clique) c.add(Gate::h(q));
  c.add(Gate::z(control));
  return c;
}

inline StateVector gate_counting_state(const AdjacencyMatrix& a, std::size_t t) {
  const OracleBundle b = build_oracle(a);
  const std::size_t width = t + b.layout.total_width;
  Circuit c(width);
  for (Qubit q = 0; q < t; ++q) c.add(Gate::h(q));
  c.append(b.prep.shifted(t, width));
  for (Qubit q : b.layout.clique) c.add(Gate::h(q + t));
  for (std::size_t q = 0; q < t; ++q) {
    const Circuit step = controlled_grover_circuit(b, q, width, t);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (t - 1 - q)); ++k) c.append(step);
  }
  c.append(inverse_qft(t).shifted(0, width));
  StateVector s(width);
  apply_circuit(s, c);
  return s;
}

}  // namespace detail

/// Exact distribution of the counting register just before measurement.
inline std::vector<double> counting_distribution(const AdjacencyMatrix& a, std::size_t t,
                                                 Backend backend) {
  detail::check_counting_limits(a.size(), t, backend);
  const StateVector s = backend == Backend::gate ? detail::gate_counting_state(a, t)
                                                 : detail::structured_counting_state(a, t);
  return marginal_probabilities(s, 0, t);
}

/// Most frequent outcome; ties go to the smaller j.
inline std::uint64_t modal_outcome(const SampleCounts& samples) {
  std::uint64_t best = 0;
  std::uint64_t best_count = 0;
  for (const auto& [bits, count] : samples.counts) {
    const std::uint64_t j = std::stoull(bits, nullptr, 2);
    if (count > best_count || (count == best_count && j < best)) {
      best = j;
      best_count = count;
    }
  }
  return best;
}

/// Samples the counting register `shots` times and estimates M from the
/// modal outcome.
inline CountEstimate run_counting(const AdjacencyMatrix& a, std::size_t t,
                                  std::uint64_t shots, std::uint64_t seed,
                                  Backend backend = Backend::structured) {
  const auto p = counting_distribution(a, t, backend);
  auto samples = sample_distribution(p, t, shots, seed);
  CountEstimate e = estimate_from_outcome(a.size(), t, modal_outcome(samples));
  e.samples = std::move(samples);
  return e;
}

struct CountedSearch {
  CountEstimate estimate;
  SearchResult search;
};

/// Estimates M by counting, then searches with R scheduled from that M.
inline CountedSearch count_then_search(const AdjacencyMatrix& a, std::size_t t,
                                       std::uint64_t shots, std::uint64_t seed,
                                       Backend backend = Backend::structured,
                                       std::uint64_t search_shots = 1000) {
  CountedSearch out;
  out.estimate = run_counting(a, t, shots, seed, backend);
  if (out.estimate.m_rounded == 0) {
    throw NoMarkedStatesError("no marked states detected (raw estimate M = " +
                              std::to_string(out.estimate.m_raw) + ", j = " +
                              std::to_string(out.estimate.j_measured) + ")");
  }
  GroverConfig cfg;
  cfg.marked = out.estimate.m_rounded;
  cfg.backend = backend;
  cfg.shots = search_shots;
  cfg.seed = seed;
  cfg.classical_fallback = false;
  out.search = run_search(a, cfg);
  return out;
}

}  // namespace mcq
