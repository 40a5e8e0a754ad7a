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

// Gate-level intermediate representation.
//
// Controls carry a polarity: a negative control fires when its qubit is 0.
// This keeps the three Toffoli variants of the oracle's copy/deselect block
// as single gates; X-conjugation of negative controls only appears when a
// circuit is decomposed.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcq {

using Qubit = std::size_t;

enum class GateKind { X, Z, H, CNOT, TOFFOLI, MCX, MCZ, CPHASE, SWAP };

enum class Polarity { positive, negative };

struct Control {
  Qubit qubit = 0;
  Polarity polarity = Polarity::positive;

  bool operator==(const Control&) const = default;
};

inline Control pos(Qubit q) { return {q, Polarity::positive}; }
inline Control neg(Qubit q) { return {q, Polarity::negative}; }

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Qubit> targets;
  std::vector<Control> controls;
  double angle = 0.0;  // CPHASE only

  static Gate x(Qubit q) { return {GateKind::X, {q}, {}, 0.0}; }
  static Gate z(Qubit q) { return {GateKind::Z, {q}, {}, 0.0}; }
  static Gate h(Qubit q) { return {GateKind::H, {q}, {}, 0.0}; }
  static Gate cnot(Control c, Qubit t) { return {GateKind::CNOT, {t}, {c}, 0.0}; }
  static Gate toffoli(Control a, Control b, Qubit t) {
    return {GateKind::TOFFOLI, {t}, {a, b}, 0.0};
  }
  static Gate mcx(std::vector<Control> cs, Qubit t) {
    return {GateKind::MCX, {t}, std::move(cs), 0.0};
  }
  static Gate mcz(std::vector<Control> cs, Qubit t) {
    return {GateKind::MCZ, {t}, std::move(cs), 0.0};
  }
  /// Phase e^{i angle} on |11> of (control, target).
  static Gate cphase(Qubit c, Qubit t, double angle) {
    return {GateKind::CPHASE, {t}, {pos(c)}, angle};
  }
  static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b}, {}, 0.0}; }

  /// Throws if the gate is malformed or touches a qubit >= width.
  void validate(std::size_t width) const {
    std::size_t want_targets = kind == GateKind::SWAP ? 2 : 1;
    if (targets.size() != want_targets) {
      throw std::invalid_argument("wrong number of targets for gate");
    }
    switch (kind) {
      case GateKind::X:
      case GateKind::Z:
      case GateKind::H:
      case GateKind::SWAP:
        if (!controls.empty()) throw std::invalid_argument("gate takes no controls");
        break;
      case GateKind::CNOT:
      case GateKind::CPHASE:
        if (controls.size() != 1) throw std::invalid_argument("gate takes one control");
        break;
      case GateKind::TOFFOLI:
        if (controls.size() != 2) throw std::invalid_argument("Toffoli takes two controls");
        break;
      case GateKind::MCX:
      case GateKind::MCZ:
        if (controls.empty()) {
          throw std::invalid_argument("multi-controlled gate needs >= 1 control");
        }
        break;
    }
    std::vector<Qubit> all = targets;
    for (const auto& c : controls) all.push_back(c.qubit);
    for (Qubit q : all) {
      if (q >= width) {
        throw std::out_of_range("gate qubit " + std::to_string(q) +
                                " outside register of width " + std::to_string(width));
      }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw std::invalid_argument("gate uses a qubit more than once");
    }
  }

  bool operator==(const Gate&) const = default;
};

/// Named qubit ranges of the oracle register.
struct RegisterLayout {
  std::size_t n = 0;
  std::vector<Qubit> clique;
  std::vector<Qubit> data;     // row-major, entry (i, j) of A + I
  std::vector<Qubit> ancilla;  // row-major, pairs with data
  std::vector<Qubit> work;     // decomposition workspace
  std::size_t total_width = 0;

  Qubit data_at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  Qubit ancilla_at(std::size_t i, std::size_t j) const { return ancilla[i * n + j]; }

  bool operator==(const RegisterLayout&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  const std::optional<RegisterLayout>& layout() const noexcept { return layout_; }
  void set_layout(RegisterLayout layout) { layout_ = std::move(layout); }

  Circuit& add(Gate g) {
    g.validate(width_);
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Appends another circuit of the same width.
  Circuit& append(const Circuit& other) {
    if (other.width_ != width_) {
      throw std::invalid_argument("cannot append circuits of different width");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  /// The same gates on a register of `new_width` qubits, every index moved
  /// up by `offset`.
  Circuit shifted(std::size_t offset, std::size_t new_width) const {
    Circuit out(new_width);
    for (Gate g : gates_) {
      for (auto& t : g.targets) t += offset;
      for (auto& c : g.controls) c.qubit += offset;
      out.add(std::move(g));
    }
    return out;
  }

  bool operator==(const Circuit& other) const {
    return width_ == other.width_ && gates_ == other.gates_;
  }

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
  std::optional<RegisterLayout> layout_;
};

inline Gate inverse(Gate g) {
  if (g.kind == GateKind::CPHASE) g.angle = -g.angle;
  return g;
}

/// Reversed gate list with each gate inverted. Every kind except CPHASE is
/// self-inverse.
inline Circuit invert(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(inverse(*it));
  }
  if (c.layout()) out.set_layout(*c.layout());
  return out;
}

inline const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::MCX: return "MCX";
    case GateKind::MCZ: return "MCZ";
    case GateKind::CPHASE: return "CPHASE";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

namespace detail {

inline std::string qubit_name(Qubit q) { return "q" + std::to_string(q); }

inline std::string control_name(const Control& c, bool explicit_plus) {
  std::string sign = c.polarity == Polarity::negative ? "-" : (explicit_plus ? "+" : "");
  return sign + qubit_name(c.qubit);
}

inline std::string format_angle(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace detail

/// One line per gate, e.g. "TOFFOLI q3 -q7 -> q12" or
/// "MCX[+q0 -q1 +q2] -> q5". A leading "-" marks a negative control.
inline std::string to_listing(const Gate& g) {
  using detail::control_name;
  using detail::qubit_name;
  std::string s;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Z:
    case GateKind::H:
      s = std::string(to_string(g.kind)) + " " + qubit_name(g.targets[0]);
      break;
    case GateKind::SWAP:
      s = "SWAP " + qubit_name(g.targets[0]) + " " + qubit_name(g.targets[1]);
      break;
    case GateKind::CNOT:
    case GateKind::TOFFOLI:
      s = to_string(g.kind);
      for (const auto& c : g.controls) s += " " + control_name(c, false);
      s += " -> " + qubit_name(g.targets[0]);
      break;
    case GateKind::MCX:
    case GateKind::MCZ: {
      s = std::string(to_string(g.kind)) + "[";
      for (std::size_t i = 0; i < g.controls.size(); ++i) {
        if (i) s += " ";
        s += control_name(g.controls[i], true);
      }
      s += "] -> " + qubit_name(g.targets[0]);
      break;
    }
    case GateKind::CPHASE:
      s = "CPHASE(" + detail::format_angle(g.angle) + ") " +
          qubit_name(g.controls[0].qubit) + " " + qubit_name(g.targets[0]);
      break;
  }
  return s;
}

/// "QUBITS <width>" followed by one gate per line.
inline std::string to_listing(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.width() << "\n";
  for (const auto& g : c.gates()) out << to_listing(g) << "\n";
  return out.str();
}

}  // namespace mcq
