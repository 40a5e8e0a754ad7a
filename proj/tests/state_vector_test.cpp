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

#include "mcq/state_vector.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "mcq/oracle.hpp"
#include "test_support.hpp"

namespace mcq {
namespace {

using Matrix = std::vector<std::vector<Complex>>;

int bit_of(std::uint64_t i, std::size_t width, Qubit q) {
  return static_cast<int>((i >> (width - 1 - q)) & 1U);
}

bool controls_on(std::uint64_t i, std::size_t width, const std::vector<Control>& cs) {
  for (const auto& c : cs) {
    if (bit_of(i, width, c.qubit) != (c.polarity == Polarity::positive ? 1 : 0)) return false;
  }
  return true;
}

// Dense 2^w x 2^w matrix of one gate, column by column from its action on
// basis states.
Matrix dense(const Gate& g, std::size_t width) {
  const std::size_t dim = std::size_t{1} << width;
  Matrix m(dim, std::vector<Complex>(dim, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const Qubit t = g.targets[0];
    const std::uint64_t tmask = std::uint64_t{1} << (width - 1 - t);
    const int tb = bit_of(col, width, t);
    const bool on = controls_on(col, width, g.controls);
    switch (g.kind) {
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::TOFFOLI:
      case GateKind::MCX: m[on ? col ^ tmask : col][col] = 1.0; break;
      case GateKind::Z:
      case GateKind::MCZ: m[col][col] = (on && tb) ? -1.0 : 1.0; break;
      case GateKind::CPHASE:
        m[col][col] = (on && tb) ? std::polar(1.0, g.angle) : Complex{1.0};
        break;
      case GateKind::H:
        m[col & ~tmask][col] += r;
        m[col | tmask][col] += tb ? -r : r;
        break;
      case GateKind::SWAP: {
        const Qubit u = g.targets[1];
        const std::uint64_t umask = std::uint64_t{1} << (width - 1 - u);
        std::uint64_t row = col & ~(tmask | umask);
        if (bit_of(col, width, t)) row |= umask;
        if (bit_of(col, width, u)) row |= tmask;
        m[row][col] = 1.0;
        break;
      }
    }
  }
  return m;
}

std::vector<Complex> multiply(const Matrix& m, std::span<const Complex> v) {
  std::vector<Complex> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Gate random_gate(std::size_t width, std::mt19937_64& rng) {
  std::vector<Qubit> q(width);
  std::iota(q.begin(), q.end(), 0);
  std::shuffle(q.begin(), q.end(), rng);
  const auto pol = [&](Qubit x) { return (rng() & 1U) ? pos(x) : neg(x); };
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  switch (rng() % 9) {
    case 0: return Gate::x(q[0]);
    case 1: return Gate::z(q[0]);
    case 2: return Gate::h(q[0]);
    case 3: return Gate::cnot(pol(q[0]), q[1]);
    case 4: return Gate::toffoli(pol(q[0]), pol(q[1]), q[2]);
    case 5: return Gate::mcx({pol(q[0]), pol(q[1]), pol(q[2])}, q[3]);
    case 6: return Gate::mcz({pol(q[0]), pol(q[1])}, q[2]);
    case 7: return Gate::cphase(q[0], q[1], angle(rng));
    default: return Gate::swap(q[0], q[1]);
  }
}

StateVector random_state(std::size_t width, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << width);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector::from_amplitudes(width, std::move(amps));
}

TEST(StateVector, StartsInZeroAndChecksLimits) {
  StateVector s(3);
  EXPECT_EQ(s.size(), 8U);
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_THROW(StateVector(25), CapabilityError);
  EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
  EXPECT_THROW(StateVector::from_amplitudes(2, std::vector<Complex>(3)), std::invalid_argument);
}

TEST(InitUniform, Amplitudes) {
  const auto s1 = init_uniform(1);
  EXPECT_DOUBLE_EQ(s1[0].real(), 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(s1[1].real(), 1.0 / std::sqrt(2.0));
  const auto s3 = init_uniform(3);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_DOUBLE_EQ(s3[i].real(), 1.0 / std::sqrt(8.0));
    EXPECT_EQ(s3[i].imag(), 0.0);
  }
  EXPECT_NEAR(s3.norm_squared(), 1.0, 1e-15);
  EXPECT_THROW(init_uniform(0), CapabilityError);
  EXPECT_THROW(init_uniform(21), CapabilityError);
}

TEST(ApplyGate, XFlipsZero) {
  StateVector s(1);
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[1], Complex(1.0));
  EXPECT_EQ(s[0], Complex(0.0));
}

TEST(ApplyGate, QubitZeroIsMostSignificant) {
  StateVector s(3);
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[0b100], Complex(1.0));
}

TEST(ApplyGate, HadamardTwiceRestores) {
  std::mt19937_64 rng(1);
  const auto start = random_state(4, rng);
  StateVector s = start;
  apply_gate(s, Gate::h(2));
  apply_gate(s, Gate::h(2));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LE(std::abs(s[i] - start[i]), 1e-12);
}

TEST(ApplyGate, MatchesDenseMatrices) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t width = 4 + trial % 2;
    const Gate g = random_gate(width, rng);
    const auto start = random_state(width, rng);
    StateVector s = start;
    apply_gate(s, g);
    const auto want = multiply(dense(g, width), start.amplitudes());
    for (std::size_t i = 0; i < s.size(); ++i) {
      ASSERT_LE(std::abs(s[i] - want[i]), 1e-12) << to_listing(g);
    }
  }
}

TEST(ApplyCircuit, WidthMismatch) {
  StateVector s(2);
  EXPECT_THROW(apply_circuit(s, Circuit(3)), std::invalid_argument);
}

TEST(ApplyCircuit, NormDriftOverManyGates) {
  std::mt19937_64 rng(4);
  Circuit c(10);
  while (c.size() < 10000) c.add(random_gate(10, rng));
  StateVector s = random_state(10, rng);
  apply_circuit(s, c);
  EXPECT_LE(std::abs(s.norm_squared() - 1.0), 1e-9);
}

TEST(ApplyCircuit, PathOracleFlipsMarkedInput) {
  const auto b = build_oracle(testing::path3());
  StateVector s(b.layout.total_width);
  apply_circuit(s, b.prep);
  apply_gate(s, Gate::x(0));
  apply_gate(s, Gate::x(1));
  const StateVector before = s;
  apply_circuit(s, b.body);
  for (std::size_t i = 0; i < s.size(); ++i) ASSERT_LE(std::abs(s[i] + before[i]), 1e-12);
}

TEST(DiagonalPhase, Examples) {
  StateVector s = init_uniform(3);
  apply_diagonal_phase(s, [](std::uint64_t) { return false; });
  for (std::size_t i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(s[i].real(), 1.0 / std::sqrt(8.0));

  const auto f = oracle_truth_table(testing::path3());
  apply_diagonal_phase(s, f);
  for (std::size_t i = 0; i < 8; ++i) {
    const double sign = (i == 0b110 || i == 0b011) ? -1.0 : 1.0;
    EXPECT_DOUBLE_EQ(s[i].real(), sign / std::sqrt(8.0));
  }
  apply_diagonal_phase(s, f);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(s[i].real(), 1.0 / std::sqrt(8.0));

  const std::vector<std::uint8_t> short_table(4, 0);
  EXPECT_THROW(apply_diagonal_phase(s, short_table), std::invalid_argument);
}

TEST(Measure, BasisStateIsDeterministic) {
  const auto s = StateVector::basis(1, 1);
  const auto c = measure(s, 100, 9);
  EXPECT_EQ(c.counts.size(), 1U);
  EXPECT_EQ(c.count("1"), 100U);
  EXPECT_EQ(c.generator, "mt19937_64");
  EXPECT_THROW(measure(s, 0, 9), std::invalid_argument);
}

TEST(Measure, UniformWithinFiveSigma) {
  const auto c = measure(init_uniform(2), 4096, 2024);
  const double sigma = std::sqrt(4096 * 0.25 * 0.75);
  std::uint64_t total = 0;
  for (const char* bits : {"00", "01", "10", "11"}) {
    EXPECT_LE(std::abs(static_cast<double>(c.count(bits)) - 1024.0), 5 * sigma) << bits;
    total += c.count(bits);
  }
  EXPECT_EQ(total, 4096U);
  EXPECT_EQ(c.shots, 4096U);
}

TEST(Measure, SameSeedSameCounts) {
  std::mt19937_64 rng(8);
  const auto s = random_state(6, rng);
  EXPECT_EQ(measure(s, 5000, 42), measure(s, 5000, 42));
  EXPECT_NE(measure(s, 5000, 42).counts, measure(s, 5000, 43).counts);
}

TEST(Measure, MarginalsTraceOutTheRest) {
  StateVector s(3);
  apply_gate(s, Gate::h(0));
  apply_gate(s, Gate::x(2));
  const auto p = marginal_probabilities(s, 0, 2);
  EXPECT_NEAR(p[0b00], 0.5, 1e-15);
  EXPECT_NEAR(p[0b10], 0.5, 1e-15);
  EXPECT_EQ(p[0b01], 0.0);
  const auto c = measure_qubits(s, 2, 1, 50, 1);
  EXPECT_EQ(c.count("1"), 50U);
  EXPECT_THROW(marginal_probabilities(s, 2, 2), std::out_of_range);
}

TEST(Measure, BitStrings) {
  EXPECT_EQ(index_to_bits(6, 3), "110");
  EXPECT_EQ(index_to_bits(1, 4), "0001");
}

}  // namespace
}  // namespace mcq
