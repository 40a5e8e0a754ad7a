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

// Multi-controlled gate decomposition and resource accounting.
//
// A k-controlled X or Z (k >= 2 for Z, k >= 3 for X) becomes a V-chain:
// k - 1 Toffolis compute the AND of the controls into clean work qubits,
// one two-qubit CNOT/CZ acts on the target, and k - 1 Toffolis uncompute.
// That is 2(k - 1) Toffolis plus one controlled gate. Negative controls are
// X-conjugated.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcq/circuit.hpp"
#include "mcq/error.hpp"

namespace mcq {

struct ResourceReport {
  std::size_t toffoli_count = 0;
  std::size_t mcx_count_pre_decomposition = 0;
  std::size_t mcz_count_pre_decomposition = 0;
  std::size_t x_count = 0;
  std::size_t cnot_count = 0;
  std::size_t cz_count = 0;  // two-qubit controlled-Z
  std::size_t other_count = 0;
  std::size_t total_qubits = 0;
  std::size_t workspace_qubits = 0;
  std::size_t work_qubits_used = 0;
  std::size_t gate_total = 0;
  std::optional<std::size_t> depth;  // informational, pre-decomposition

  bool operator==(const ResourceReport&) const = default;
};

namespace detail {

inline std::size_t negative_controls(const Gate& g) {
  return static_cast<std::size_t>(
      std::count_if(g.controls.begin(), g.controls.end(),
                    [](const Control& c) { return c.polarity == Polarity::negative; }));
}

// Work qubits a gate needs when decomposed.
inline std::size_t work_needed(const Gate& g) {
  const std::size_t k = g.controls.size();
  if (g.kind == GateKind::MCX && k >= 3) return k - 1;
  if (g.kind == GateKind::MCZ && k >= 2) return k - 1;
  return 0;
}

// Per-gate contribution to a report, as if decomposed.
inline void tally_decomposed(const Gate& g, ResourceReport& r) {
  const std::size_t k = g.controls.size();
  const std::size_t sandwich = 2 * negative_controls(g);
  r.x_count += sandwich;
  switch (g.kind) {
    case GateKind::X: r.x_count += 1; break;
    case GateKind::CNOT: r.cnot_count += 1; break;
    case GateKind::TOFFOLI: r.toffoli_count += 1; break;
    case GateKind::MCX:
      if (k == 1) {
        r.cnot_count += 1;
      } else if (k == 2) {
        r.toffoli_count += 1;
      } else {
        r.toffoli_count += 2 * (k - 1);
        r.cnot_count += 1;
      }
      break;
    case GateKind::MCZ:
      if (k == 1) {
        r.cz_count += 1;
      } else {
        r.toffoli_count += 2 * (k - 1);
        r.cz_count += 1;
      }
      break;
    default: r.other_count += 1; break;
  }
}

inline std::size_t decomposed_gate_total(const Gate& g) {
  const std::size_t k = g.controls.size();
  std::size_t core = 1;
  if (g.kind == GateKind::MCX && k >= 3) core = 2 * (k - 1) + 1;
  if (g.kind == GateKind::MCZ && k >= 2) core = 2 * (k - 1) + 1;
  return core + 2 * negative_controls(g);
}

}  // namespace detail

/// Greedy as-soon-as-possible layer count.
inline std::size_t circuit_depth(const Circuit& c) {
  std::vector<std::size_t> level(c.width(), 0);
  std::size_t depth = 0;
  for (const auto& g : c.gates()) {
    std::size_t at = 0;
    for (Qubit q : g.targets) at = std::max(at, level[q]);
    for (const auto& ctl : g.controls) at = std::max(at, level[ctl.qubit]);
    ++at;
    for (Qubit q : g.targets) level[q] = at;
    for (const auto& ctl : g.controls) level[ctl.qubit] = at;
    depth = std::max(depth, at);
  }
  return depth;
}

/// Expands one MCX/MCZ/TOFFOLI/CNOT over clean `work` qubits. The result
/// has the given register width and restores every work qubit.
inline Circuit decompose_mcx(const Gate& g, std::span<const Qubit> work,
                             std::size_t width) {
  const bool is_x = g.kind == GateKind::MCX || g.kind == GateKind::TOFFOLI ||
                    g.kind == GateKind::CNOT;
  if (!is_x && g.kind != GateKind::MCZ) {
    throw std::invalid_argument("decompose_mcx expects a controlled X or Z gate");
  }
  g.validate(width);
  const std::size_t k = g.controls.size();
  const Qubit target = g.targets[0];
  const std::size_t need = detail::work_needed(g);
  if (work.size() < need) {
    throw CapabilityError("decomposition of a " + std::to_string(k) +
                          "-controlled gate needs " + std::to_string(need) +
                          " work qubits, got " + std::to_string(work.size()));
  }
  for (std::size_t i = 0; i < need; ++i) {
    const Qubit w = work[i];
    if (w == target || std::any_of(g.controls.begin(), g.controls.end(),
                                   [&](const Control& c) { return c.qubit == w; })) {
      throw std::invalid_argument("work qubit overlaps the gate being decomposed");
    }
  }

  Circuit out(width);
  for (const auto& c : g.controls) {
    if (c.polarity == Polarity::negative) out.add(Gate::x(c.qubit));
  }

  if (need == 0) {
    std::vector<Control> cs;
    for (const auto& c : g.controls) cs.push_back(pos(c.qubit));
    if (!is_x) {
      out.add(Gate::mcz(cs, target));
    } else if (k == 1) {
      out.add(Gate::cnot(cs[0], target));
    } else {
      out.add(Gate::toffoli(cs[0], cs[1], target));
    }
  } else {
    Circuit chain(width);
    chain.add(Gate::toffoli(pos(g.controls[0].qubit), pos(g.controls[1].qubit), work[0]));
    for (std::size_t i = 2; i < k; ++i) {
      chain.add(Gate::toffoli(pos(g.controls[i].qubit), pos(work[i - 2]), work[i - 1]));
    }
    const Qubit last = work[k - 2];
    out.append(chain);
    if (is_x) {
      out.add(Gate::cnot(pos(last), target));
    } else {
      out.add(Gate::mcz({pos(last)}, target));
    }
    out.append(invert(chain));
  }

  for (const auto& c : g.controls) {
    if (c.polarity == Polarity::negative) out.add(Gate::x(c.qubit));
  }
  return out;
}

/// Decomposes every multi-controlled gate of `c` using `work`.
inline Circuit decompose(const Circuit& c, std::span<const Qubit> work) {
  Circuit out(c.width());
  for (const auto& g : c.gates()) {
    const bool controlled_xz =
        g.kind == GateKind::MCX || g.kind == GateKind::MCZ ||
        g.kind == GateKind::TOFFOLI || g.kind == GateKind::CNOT;
    if (!controlled_xz) {
      out.add(g);
      continue;
    }
    out.append(decompose_mcx(g, work, c.width()));
  }
  if (c.layout()) out.set_layout(*c.layout());
  return out;
}

/// Counts gates. With `decompose` set, MCX/MCZ and negative controls are
/// costed by the decomposition rules without building the expansion.
/// Workspace is every qubit outside the layout's clique register (zero
/// when the circuit carries no layout).
inline ResourceReport count_resources(const Circuit& c, bool decompose) {
  ResourceReport r;
  r.total_qubits = c.width();
  if (c.layout()) {
    r.workspace_qubits = c.width() - c.layout()->clique.size();
  }
  if (!c.empty()) r.depth = circuit_depth(c);
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MCX) r.mcx_count_pre_decomposition += 1;
    if (g.kind == GateKind::MCZ) r.mcz_count_pre_decomposition += 1;
    if (decompose) {
      detail::tally_decomposed(g, r);
      r.gate_total += detail::decomposed_gate_total(g);
      r.work_qubits_used = std::max(r.work_qubits_used, detail::work_needed(g));
      continue;
    }
    r.gate_total += 1;
    switch (g.kind) {
      case GateKind::X: r.x_count += 1; break;
      case GateKind::CNOT: r.cnot_count += 1; break;
      case GateKind::TOFFOLI: r.toffoli_count += 1; break;
      case GateKind::MCX:
      case GateKind::MCZ: break;
      default: r.other_count += 1; break;
    }
  }
  return r;
}

}  // namespace mcq
