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

// Test-only reference implementations. Nothing here calls the code under
// test, so they can serve as independent oracles.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mcq/graph.hpp"

namespace mcq::testing {

inline AdjacencyMatrix path3() {
  return AdjacencyMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
}

inline AdjacencyMatrix random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) a.add_edge(i, j);
    }
  }
  return a;
}

// Node j of an n-bit subset index x, MSB first.
inline bool has_node(std::uint64_t x, std::size_t n, std::size_t j) {
  return ((x >> (n - 1 - j)) & 1U) != 0;
}

// Pairwise definition of a clique.
inline bool naive_is_clique(const AdjacencyMatrix& a, std::uint64_t x) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (has_node(x, n, i) && has_node(x, n, j) && !a.adjacent(i, j)) return false;
    }
  }
  return true;
}

// Nonempty clique that no outside node extends.
inline bool naive_is_maximal(const AdjacencyMatrix& a, std::uint64_t x) {
  const std::size_t n = a.size();
  if (x == 0 || !naive_is_clique(a, x)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (has_node(x, n, v)) continue;
    if (naive_is_clique(a, x | (std::uint64_t{1} << (n - 1 - v)))) return false;
  }
  return true;
}

inline std::uint64_t naive_maximal_count(const AdjacencyMatrix& a) {
  std::uint64_t m = 0;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << a.size()); ++x) {
    m += naive_is_maximal(a, x) ? 1 : 0;
  }
  return m;
}

// max_k |a_k - phase * b_k| minimized over a unit phase fixed by the
// largest entry of b.
inline double distance_up_to_phase(const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& b) {
  std::size_t pivot = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (std::abs(b[k]) > std::abs(b[pivot])) pivot = k;
  }
  std::complex<double> phase{1.0, 0.0};
  if (std::abs(b[pivot]) > 0.0 && std::abs(a[pivot]) > 0.0) {
    phase = a[pivot] / b[pivot];
    phase /= std::abs(phase);
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - phase * b[k]));
  }
  return worst;
}

}  // namespace mcq::testing
