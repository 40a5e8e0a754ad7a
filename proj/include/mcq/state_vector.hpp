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

// Dense state-vector simulation.
//
// Amplitudes are a flat array indexed by basis state. Qubit q of a width-w
// register is bit (w - 1 - q) of the index, so qubit 0 is the most
// significant bit and a printed bitstring reads qubit 0 first.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcq/circuit.hpp"
#include "mcq/error.hpp"

namespace mcq {

using Complex = std::complex<double>;

/// 2^24 amplitudes (256 MiB) is the largest register either backend holds.
inline constexpr std::size_t kMaxStateQubits = 24;
/// Clique-register cap of the structured backend.
inline constexpr std::size_t kMaxStructuredQubits = 20;
/// Gate-level backend cap; the full oracle register fits for n <= 3.
inline constexpr std::size_t kMaxGateQubits = 24;

class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(std::size_t width) : width_(width) {
    if (width > kMaxStateQubits) {
      throw CapabilityError("state vector of " + std::to_string(width) +
                            " qubits exceeds the " + std::to_string(kMaxStateQubits) +
                            "-qubit limit");
    }
    amps_.assign(std::size_t{1} << width, Complex{0.0, 0.0});
    amps_[0] = 1.0;
  }

  static StateVector basis(std::size_t width, std::uint64_t index) {
    StateVector s(width);
    if (index >= s.size()) throw std::out_of_range("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
  }

  static StateVector from_amplitudes(std::size_t width, std::vector<Complex> amps) {
    StateVector s(width);
    if (amps.size() != s.size()) {
      throw std::invalid_argument("amplitude count does not match width");
    }
    s.amps_ = std::move(amps);
    return s;
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  Complex operator[](std::uint64_t i) const { return amps_[i]; }
  Complex& operator[](std::uint64_t i) { return amps_[i]; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  std::uint64_t qubit_mask(Qubit q) const {
    if (q >= width_) throw std::out_of_range("qubit out of range");
    return std::uint64_t{1} << (width_ - 1 - q);
  }

 private:
  std::size_t width_ = 0;
  std::vector<Complex> amps_;
};

/// Uniform superposition over n qubits.
inline StateVector init_uniform(std::size_t n, std::size_t limit = kMaxStructuredQubits) {
  if (n < 1 || n > limit) {
    throw CapabilityError("uniform state over " + std::to_string(n) +
                          " qubits outside 1.." + std::to_string(limit));
  }
  StateVector s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (auto& amp : s.amplitudes()) amp = a;
  return s;
}

namespace detail {

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

inline ControlMask control_mask(const StateVector& s, const std::vector<Control>& cs) {
  ControlMask m;
  for (const auto& c : cs) {
    const auto bit = s.qubit_mask(c.qubit);
    m.mask |= bit;
    if (c.polarity == Polarity::positive) m.value |= bit;
  }
  return m;
}

// Index with a zero bit inserted at `bit` (a power of two).
inline std::uint64_t insert_zero(std::uint64_t i, std::uint64_t bit) {
  const std::uint64_t low = i & (bit - 1);
  return ((i - low) << 1) | low;
}

}  // namespace detail

inline void apply_gate(StateVector& s, const Gate& g) {
  g.validate(s.width());
  auto amps = s.amplitudes();
  const std::uint64_t half = s.size() / 2;
  const auto ctl = detail::control_mask(s, g.controls);
  const auto fires = [&](std::uint64_t i) { return (i & ctl.mask) == ctl.value; };

  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::TOFFOLI:
    case GateKind::MCX: {
      const auto t = s.qubit_mask(g.targets[0]);
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = detail::insert_zero(k, t);
        if (fires(i0)) std::swap(amps[i0], amps[i0 | t]);
      }
      break;
    }
    case GateKind::Z:
    case GateKind::MCZ: {
      const auto t = s.qubit_mask(g.targets[0]);
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i1 = detail::insert_zero(k, t) | t;
        if (fires(i1)) amps[i1] = -amps[i1];
      }
      break;
    }
    case GateKind::H: {
      const auto t = s.qubit_mask(g.targets[0]);
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = detail::insert_zero(k, t);
        const Complex a = amps[i0];
        const Complex b = amps[i0 | t];
        amps[i0] = (a + b) * r;
        amps[i0 | t] = (a - b) * r;
      }
      break;
    }
    case GateKind::CPHASE: {
      const auto t = s.qubit_mask(g.targets[0]);
      const Complex phase = std::polar(1.0, g.angle);
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i1 = detail::insert_zero(k, t) | t;
        if (fires(i1)) amps[i1] *= phase;
      }
      break;
    }
    case GateKind::SWAP: {
      const auto a = s.qubit_mask(g.targets[0]);
      const auto b = s.qubit_mask(g.targets[1]);
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i = detail::insert_zero(k, a);  // bit a = 0
        if (i & b) std::swap(amps[i], amps[(i | a) & ~b]);
      }
      break;
    }
  }
}

/// Applies every gate of `c` in order. MCX/MCZ act natively.
inline void apply_circuit(StateVector& s, const Circuit& c) {
  if (c.width() != s.width()) {
    throw std::invalid_argument("circuit width " + std::to_string(c.width()) +
                                " does not match state width " +
                                std::to_string(s.width()));
  }
  for (const auto& g : c.gates()) apply_gate(s, g);
}

/// amplitude[x] *= (-1)^f(x).
inline void apply_diagonal_phase(StateVector& s,
                                 const std::function<bool(std::uint64_t)>& f) {
  auto amps = s.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if (f(x)) amps[x] = -amps[x];
  }
}

/// Same, from a precomputed 0/1 table.
inline void apply_diagonal_phase(StateVector& s, std::span<const std::uint8_t> f) {
  if (f.size() != s.size()) {
    throw std::invalid_argument("phase table size does not match state");
  }
  auto amps = s.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if (f[x]) amps[x] = -amps[x];
  }
}

/// Measurement outcomes keyed by bitstring (qubit 0 leftmost).
struct SampleCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string generator = "mt19937_64";

  std::uint64_t count(const std::string& bits) const {
    auto it = counts.find(bits);
    return it == counts.end() ? 0 : it->second;
  }

  bool operator==(const SampleCounts&) const = default;
};

inline std::string index_to_bits(std::uint64_t index, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t q = 0; q < width; ++q) {
    if ((index >> (width - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

/// Probability of each value of the `count` qubits starting at `first`.
inline std::vector<double> marginal_probabilities(const StateVector& s, Qubit first,
                                                  std::size_t count) {
  if (first + count > s.width()) throw std::out_of_range("qubit range out of register");
  const std::size_t shift = s.width() - first - count;
  const std::uint64_t keep = (std::uint64_t{1} << count) - 1;
  std::vector<double> p(std::size_t{1} << count, 0.0);
  const auto amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    p[(i >> shift) & keep] += std::norm(amps[i]);
  }
  return p;
}

/// I.i.d. draws from a probability table, with a 64-bit Mersenne Twister
/// (fully specified by the C++ standard) and a 53-bit mantissa uniform.
inline SampleCounts sample_distribution(std::span<const double> p, std::size_t width,
                                        std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(p.size(), 0);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    // First entry whose cdf exceeds u; it always carries positive mass.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    ++hits[std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()),
                                 p.size() - 1)];
  }
  SampleCounts out;
  out.shots = shots;
  out.seed = seed;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i]) out.counts[index_to_bits(i, width)] = hits[i];
  }
  return out;
}

/// Samples every qubit.
inline SampleCounts measure(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
  std::vector<double> p(s.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s[i]);
  return sample_distribution(p, s.width(), shots, seed);
}

/// Samples the `count` qubits starting at `first`, tracing out the rest.
inline SampleCounts measure_qubits(const StateVector& s, Qubit first, std::size_t count,
                                   std::uint64_t shots, std::uint64_t seed) {
  const auto p = marginal_probabilities(s, first, count);
  return sample_distribution(p, count, shots, seed);
}

}  // namespace mcq
