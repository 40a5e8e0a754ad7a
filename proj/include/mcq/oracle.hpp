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

// The maximal-clique oracle |x>|data>|0> -> (-1)^f(x) |x>|data>|0>.
//
// Registers (in qubit order): n clique qubits holding x, n^2 data qubits
// holding A + I row-major, n^2 ancilla qubits, then optional work qubits.
//
//   copy      ancilla(i,j) <- x_j c_ij XOR !x_j c_ij XOR !x_j !c_ij
//             = (x_j ? c_ij : 1), three Toffoli variants per entry
//   intersect x_i <- x_i XOR AND_j ancilla(i,j), one MCX per row
//   flip      I - 2|0><0| on the clique register
//
// followed by intersect and copy again to uncompute. x survives the flip
// as zero exactly when the intersection of the selected closed
// neighbourhoods equals x.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcq/circuit.hpp"
#include "mcq/graph.hpp"

namespace mcq {

/// Clique qubits first, then data and ancilla row-major, then `work_qubits`
/// decomposition workspace qubits.
inline RegisterLayout build_layout(std::size_t n, std::size_t work_qubits = 0) {
  if (n == 0) throw std::invalid_argument("layout needs at least one node");
  RegisterLayout l;
  l.n = n;
  Qubit next = 0;
  for (std::size_t i = 0; i < n; ++i) l.clique.push_back(next++);
  for (std::size_t i = 0; i < n * n; ++i) l.data.push_back(next++);
  for (std::size_t i = 0; i < n * n; ++i) l.ancilla.push_back(next++);
  for (std::size_t i = 0; i < work_qubits; ++i) l.work.push_back(next++);
  l.total_width = next;
  return l;
}

namespace detail {

inline Circuit empty_on(const RegisterLayout& layout) {
  Circuit c(layout.total_width);
  c.set_layout(layout);
  return c;
}

}  // namespace detail

/// X on data qubit (i, j) wherever A + I has a 1.
inline Circuit build_data_prep(const AdjacencyMatrix& a, const RegisterLayout& layout) {
  if (a.size() != layout.n) {
    throw std::invalid_argument("layout size does not match graph");
  }
  Circuit c = detail::empty_on(layout);
  for (std::size_t i = 0; i < layout.n; ++i) {
    for (std::size_t j = 0; j < layout.n; ++j) {
      if (a.closed_entry(i, j) != 0) c.add(Gate::x(layout.data_at(i, j)));
    }
  }
  return c;
}

/// Copy/deselect block: 3n^2 Toffoli variants with control polarities
/// (+,+), (-,+), (-,-) on (x_j, c_ij), all targeting ancilla (i, j).
inline Circuit build_v(const RegisterLayout& layout) {
  Circuit c = detail::empty_on(layout);
  for (std::size_t i = 0; i < layout.n; ++i) {
    for (std::size_t j = 0; j < layout.n; ++j) {
      const Qubit x = layout.clique[j];
      const Qubit d = layout.data_at(i, j);
      const Qubit t = layout.ancilla_at(i, j);
      c.add(Gate::toffoli(pos(x), pos(d), t));
      c.add(Gate::toffoli(neg(x), pos(d), t));
      c.add(Gate::toffoli(neg(x), neg(d), t));
    }
  }
  return c;
}

/// Intersect-and-compare block: for each row i, an n-controlled X from
/// ancilla row i onto clique qubit i.
inline Circuit build_w(const RegisterLayout& layout) {
  Circuit c = detail::empty_on(layout);
  for (std::size_t i = 0; i < layout.n; ++i) {
    std::vector<Control> controls;
    for (std::size_t j = 0; j < layout.n; ++j) {
      controls.push_back(pos(layout.ancilla_at(i, j)));
    }
    c.add(Gate::mcx(std::move(controls), layout.clique[i]));
  }
  return c;
}

/// I - 2|0><0| on `qubits` of a `width`-qubit register: X on each, an
/// (k-1)-controlled Z onto the last one, X again. A single qubit gets a
/// bare Z in the middle.
inline Circuit build_zero_reflection(std::span<const Qubit> qubits, std::size_t width) {
  if (qubits.empty()) throw std::invalid_argument("reflection needs at least one qubit");
  Circuit c(width);
  for (Qubit q : qubits) c.add(Gate::x(q));
  if (qubits.size() == 1) {
    c.add(Gate::z(qubits[0]));
  } else {
    std::vector<Control> controls;
    for (std::size_t i = 0; i + 1 < qubits.size(); ++i) controls.push_back(pos(qubits[i]));
    c.add(Gate::mcz(std::move(controls), qubits.back()));
  }
  for (Qubit q : qubits) c.add(Gate::x(q));
  return c;
}

/// Sign flip of |0...0> on the clique register (2n X gates and one
/// (n-1)-controlled Z).
inline Circuit build_phase_flip(const RegisterLayout& layout) {
  Circuit c = build_zero_reflection(layout.clique, layout.total_width);
  c.set_layout(layout);
  return c;
}

struct OracleBundle {
  RegisterLayout layout;
  AdjacencyMatrix matrix;
  Circuit prep;  // data load, applied once per run
  Circuit v;
  Circuit w;
  Circuit phase_flip;
  Circuit body;  // v, w, phase_flip, w^-1, v^-1
};

inline OracleBundle build_oracle(const AdjacencyMatrix& a, std::size_t work_qubits = 0) {
  OracleBundle b;
  b.matrix = a;
  b.layout = build_layout(a.size(), work_qubits);
  b.prep = build_data_prep(a, b.layout);
  b.v = build_v(b.layout);
  b.w = build_w(b.layout);
  b.phase_flip = build_phase_flip(b.layout);
  b.body = detail::empty_on(b.layout);
  b.body.append(b.v).append(b.w).append(b.phase_flip);
  b.body.append(invert(b.w)).append(invert(b.v));
  return b;
}

/// The oracle's phase bit computed arithmetically from the circuit's
/// semantics: ancilla formula, row-wise AND, XOR into x, test for zero.
inline bool eval_oracle_classical(const AdjacencyMatrix& a, const NodeSubset& x) {
  detail::require_same_width(a, x);
  const std::size_t n = a.size();
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool row_and = true;
    for (std::size_t j = 0; j < n; ++j) {
      const bool xj = x.contains(j);
      const bool cij = a.closed_entry(i, j) != 0;
      const bool ancilla = ((xj && cij) != (!xj && cij)) != (!xj && !cij);
      row_and = row_and && ancilla;
    }
    const bool xi = x.contains(i) != row_and;
    all_zero = all_zero && !xi;
  }
  return all_zero;
}

/// f over every basis index of an n-qubit clique register.
inline std::vector<std::uint8_t> oracle_truth_table(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n > kMaxEnumerationNodes) {
    throw CapabilityError("truth table limited to " +
                          std::to_string(kMaxEnumerationNodes) + " nodes");
  }
  std::vector<std::uint8_t> f(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    f[x] = eval_oracle_classical(a, NodeSubset(n, x)) ? 1 : 0;
  }
  return f;
}

}  // namespace mcq
