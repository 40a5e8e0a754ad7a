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

// Undirected simple graphs and the classical maximal-clique test.
//
// Node indices are 0-based in the API (file formats are 1-based). A node
// subset over n nodes is packed into an integer whose most significant of
// n bits is node 0, so the printed bitstring "110" means nodes {0, 1} and
// equals basis-state index 6. The same convention is used for qubit
// registers throughout the library.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcq/error.hpp"

namespace mcq {

/// Largest register a NodeSubset can describe.
inline constexpr std::size_t kMaxSubsetWidth = 64;

/// Brute-force enumeration walks all 2^n - 1 nonempty subsets; beyond this
/// the walk stops being a desk-scale computation.
inline constexpr std::size_t kMaxEnumerationNodes = 24;

/// A set of nodes packed MSB-first: node j lives at bit (width - 1 - j).
class NodeSubset {
 public:
  NodeSubset() = default;

  NodeSubset(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width > kMaxSubsetWidth) {
      throw std::invalid_argument("node subset wider than 64 bits");
    }
    if (width < kMaxSubsetWidth && (bits >> width) != 0) {
      throw std::invalid_argument("node subset bits exceed its width");
    }
  }

  static NodeSubset empty(std::size_t width) { return {width, 0}; }

  static NodeSubset full(std::size_t width) { return {width, full_mask(width)}; }

  /// Parses a '0'/'1' string, leftmost character = node 0.
  static NodeSubset from_string(std::string_view text) {
    std::uint64_t bits = 0;
    for (char ch : text) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("node subset string must be 0/1 only");
      }
      bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return {text.size(), bits};
  }

  static std::uint64_t full_mask(std::size_t width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_empty() const noexcept { return bits_ == 0; }
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  bool contains(std::size_t node) const {
    return (bits_ & node_mask(node)) != 0;
  }

  NodeSubset with(std::size_t node) const {
    return {width_, bits_ | node_mask(node)};
  }

  std::uint64_t node_mask(std::size_t node) const {
    if (node >= width_) throw std::out_of_range("node index out of range");
    return std::uint64_t{1} << (width_ - 1 - node);
  }

  std::vector<std::size_t> nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < width_; ++j) {
      if (contains(j)) out.push_back(j);
    }
    return out;
  }

  std::string to_string() const {
    std::string s(width_, '0');
    for (std::size_t j = 0; j < width_; ++j) {
      if (contains(j)) s[j] = '1';
    }
    return s;
  }

  bool operator==(const NodeSubset&) const = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Symmetric 0/1 matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;

  /// Edgeless graph on n nodes.
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  /// Validates symmetry and the zero diagonal.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    AdjacencyMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw std::invalid_argument("adjacency matrix is not square");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const int v = rows[i][j];
        if (v != 0 && v != 1) {
          throw std::invalid_argument("adjacency entries must be 0 or 1");
        }
        a.entries_[i * n + j] = static_cast<std::uint8_t>(v);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, i) != 0) throw std::invalid_argument("self-loop on the diagonal");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(i, j) != a(j, i)) {
          throw std::invalid_argument("adjacency matrix is not symmetric");
        }
      }
    }
    return a;
  }

  static AdjacencyMatrix from_edges(
      std::size_t n,
      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    AdjacencyMatrix a(n);
    for (auto [u, v] : edges) a.add_edge(u, v);
    return a;
  }

  static AdjacencyMatrix complete(std::size_t n) {
    AdjacencyMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) a.add_edge(i, j);
    }
    return a;
  }

  /// The graph whose upper-triangle edges are the bits of `code`, taken in
  /// row-major order (0,1), (0,2), ..., (n-2,n-1). Enumerates all graphs
  /// on n labelled nodes as code runs over [0, 2^(n(n-1)/2)).
  static AdjacencyMatrix from_edge_code(std::size_t n, std::uint64_t code) {
    AdjacencyMatrix a(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if ((code >> bit) & 1U) a.add_edge(i, j);
      }
    }
    return a;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    entries_[u * n_ + v] = 1;
    entries_[v * n_ + u] = 1;
  }

  std::size_t size() const noexcept { return n_; }

  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  bool adjacent(std::size_t i, std::size_t j) const { return (*this)(i, j) != 0; }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) m += entries_[i * n_ + j];
    }
    return m;
  }

  /// Entry (i, j) of A + I.
  int closed_entry(std::size_t i, std::size_t j) const {
    return i == j ? 1 : (*this)(i, j);
  }

  /// Row-major '0'/'1' rows, one string per row.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> rows(n_, std::string(n_, '0'));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (adjacent(i, j)) rows[i][j] = '1';
      }
    }
    return rows;
  }

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// Real symmetric weight matrix (e.g. pairwise correlations).
class WeightedMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-9;

  WeightedMatrix() = default;

  explicit WeightedMatrix(std::vector<std::vector<double>> rows)
      : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) {
        throw std::invalid_argument("weighted matrix is not square");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (std::abs((*this)(i, j) - (*this)(j, i)) > kSymmetryTolerance) {
          throw std::invalid_argument("weighted matrix is not symmetric");
        }
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  /// Distinct off-diagonal weights in descending order.
  std::vector<double> distinct_off_diagonal() const {
    std::vector<double> w;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) w.push_back((*this)(i, j));
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// Edge (i, j) present iff i != j and weight > threshold (strict).
inline AdjacencyMatrix binarize(const WeightedMatrix& w, double threshold) {
  AdjacencyMatrix a(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      // The upper triangle decides; the lower one agrees within tolerance.
      if (w(i, j) > threshold) a.add_edge(i, j);
    }
  }
  return a;
}

/// Thresholds that walk the order complex: one at the largest weight (no
/// edges), one between each pair of consecutive distinct weights, and one
/// below the smallest weight (every edge present).
inline std::vector<double> order_complex_thresholds(const WeightedMatrix& w) {
  const auto values = w.distinct_off_diagonal();
  if (values.empty()) return {};
  std::vector<double> out{values.front()};
  for (std::size_t k = 1; k < values.size(); ++k) {
    out.push_back(0.5 * (values[k - 1] + values[k]));
  }
  const double span = values.front() - values.back();
  out.push_back(values.back() - (span > 0.0 ? span : 1.0));
  return out;
}

inline double edge_density(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw std::domain_error("edge density undefined for fewer than 2 nodes");
  return static_cast<double>(a.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

namespace detail {

inline void require_subset_width(const AdjacencyMatrix& a) {
  if (a.size() > kMaxSubsetWidth) {
    throw CapabilityError("graph has more nodes than a 64-bit subset holds");
  }
}

inline void require_same_width(const AdjacencyMatrix& a, const NodeSubset& x) {
  if (x.width() != a.size()) {
    throw std::invalid_argument("subset width " + std::to_string(x.width()) +
                                " does not match graph size " +
                                std::to_string(a.size()));
  }
}

}  // namespace detail

/// Column j of A + I: node j together with its neighbours.
inline NodeSubset closed_neighborhood(const AdjacencyMatrix& a, std::size_t j) {
  detail::require_subset_width(a);
  const std::size_t n = a.size();
  if (j >= n) throw std::out_of_range("node index out of range");
  NodeSubset col = NodeSubset::empty(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.closed_entry(i, j) != 0) col = col.with(i);
  }
  return col;
}

/// Bitwise AND of the A + I columns selected by x. Deselected columns are
/// all-ones, so the empty selection yields the full set.
inline NodeSubset intersect_columns(const AdjacencyMatrix& a, const NodeSubset& x) {
  detail::require_same_width(a, x);
  std::uint64_t acc = NodeSubset::full_mask(a.size());
  for (std::size_t j : x.nodes()) acc &= closed_neighborhood(a, j).bits();
  return {a.size(), acc};
}

/// x is a nonempty clique that no outside node extends. A non-clique loses
/// a bit under intersect_columns, a non-maximal clique gains one.
inline bool is_maximal_clique(const AdjacencyMatrix& a, const NodeSubset& x) {
  detail::require_same_width(a, x);
  return !x.is_empty() && intersect_columns(a, x) == x;
}

/// All maximal cliques by walking x = 2^n - 1 down to 1.
inline std::vector<NodeSubset> enumerate_maximal_cliques(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n > kMaxEnumerationNodes) {
    throw CapabilityError("brute-force enumeration is limited to " +
                          std::to_string(kMaxEnumerationNodes) + " nodes, got " +
                          std::to_string(n));
  }
  std::vector<std::uint64_t> columns(n);
  for (std::size_t j = 0; j < n; ++j) columns[j] = closed_neighborhood(a, j).bits();

  std::vector<NodeSubset> out;
  for (std::uint64_t x = NodeSubset::full_mask(n); x >= 1; --x) {
    std::uint64_t acc = NodeSubset::full_mask(n);
    for (std::size_t j = 0; j < n && (x & acc) == x; ++j) {
      if ((x >> (n - 1 - j)) & 1U) acc &= columns[j];
    }
    if (acc == x) out.emplace_back(n, x);
  }
  return out;
}

}  // namespace mcq
