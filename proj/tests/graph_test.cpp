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

#include "mcq/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"

namespace mcq {
namespace {

using testing::naive_is_clique;
using testing::naive_is_maximal;
using testing::path3;

std::vector<std::string> strings(const std::vector<NodeSubset>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

TEST(NodeSubset, MsbFirstBitOrder) {
  const auto x = NodeSubset::from_string("110");
  EXPECT_EQ(x.bits(), 6U);
  EXPECT_TRUE(x.contains(0));
  EXPECT_TRUE(x.contains(1));
  EXPECT_FALSE(x.contains(2));
  EXPECT_EQ(x.nodes(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(NodeSubset(3, 1).to_string(), "001");
  EXPECT_EQ(x.count(), 2U);
}

TEST(NodeSubset, RejectsBadInput) {
  EXPECT_THROW(NodeSubset(2, 4), std::invalid_argument);
  EXPECT_THROW(NodeSubset(65, 0), std::invalid_argument);
  EXPECT_THROW(NodeSubset::from_string("12"), std::invalid_argument);
  EXPECT_THROW(NodeSubset(3, 0).contains(3), std::out_of_range);
}

TEST(AdjacencyMatrix, FromRowsValidates) {
  EXPECT_THROW(AdjacencyMatrix::from_rows({{0, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(AdjacencyMatrix::from_rows({{1, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(AdjacencyMatrix::from_rows({{0, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(AdjacencyMatrix::from_rows({{0, 1, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(AdjacencyMatrix(3).add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(AdjacencyMatrix(3).add_edge(0, 3), std::out_of_range);
}

TEST(AdjacencyMatrix, EdgeCodeEnumeratesAllGraphs) {
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t code = 0; code < 64; ++code) {
    seen.insert(AdjacencyMatrix::from_edge_code(4, code).to_strings());
  }
  EXPECT_EQ(seen.size(), 64U);
  EXPECT_EQ(AdjacencyMatrix::from_edge_code(4, 63), AdjacencyMatrix::complete(4));
}

TEST(Binarize, ThresholdAboveMaxGivesZeroMatrix) {
  const WeightedMatrix w({{1, .9, .2}, {.9, 1, .5}, {.2, .5, 1}});
  EXPECT_EQ(binarize(w, 0.95), AdjacencyMatrix(3));
}

TEST(Binarize, JustBelowMaxGivesOneEdge) {
  const WeightedMatrix w({{1, .9, .2}, {.9, 1, .5}, {.2, .5, 1}});
  const auto a = binarize(w, 0.9 - 1e-9);
  EXPECT_EQ(a.edge_count(), 1U);
  EXPECT_TRUE(a.adjacent(0, 1));
  // Strict comparison: the maximum itself is not above the threshold.
  EXPECT_EQ(binarize(w, 0.9).edge_count(), 0U);
}

TEST(Binarize, BelowMinGivesCompleteGraph) {
  const WeightedMatrix w({{1, .9, .2}, {.9, 1, .5}, {.2, .5, 1}});
  EXPECT_EQ(binarize(w, 0.1), AdjacencyMatrix::complete(3));
}

TEST(Binarize, RejectsAsymmetricWeights) {
  EXPECT_THROW(WeightedMatrix({{0, 1}, {0.5, 0}}), std::invalid_argument);
  EXPECT_THROW(WeightedMatrix({{0, 1}}), std::invalid_argument);
}

TEST(Binarize, LoweringThresholdNeverRemovesEdges) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = u(rng);
    }
    const WeightedMatrix w(rows);
    const auto ts = order_complex_thresholds(w);
    ASSERT_TRUE(std::is_sorted(ts.rbegin(), ts.rend()));
    for (std::size_t k = 1; k < ts.size(); ++k) {
      const auto hi = binarize(w, ts[k - 1]);
      const auto lo = binarize(w, ts[k]);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_TRUE(!hi.adjacent(i, j) || lo.adjacent(i, j));
        }
      }
      EXPECT_EQ(lo.edge_count(), hi.edge_count() + 1) << "distinct weights add one edge";
    }
    EXPECT_EQ(binarize(w, ts.front()).edge_count(), 0U);
    EXPECT_EQ(binarize(w, ts.back()), AdjacencyMatrix::complete(n));
  }
}

TEST(EdgeDensity, Examples) {
  EXPECT_DOUBLE_EQ(edge_density(path3()), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(edge_density(AdjacencyMatrix(5)), 0.0);
  EXPECT_DOUBLE_EQ(edge_density(AdjacencyMatrix::complete(4)), 1.0);
  EXPECT_THROW(edge_density(AdjacencyMatrix(1)), std::domain_error);
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(path3(), 0).to_string(), "110");
  EXPECT_EQ(closed_neighborhood(path3(), 1).to_string(), "111");
  EXPECT_EQ(closed_neighborhood(AdjacencyMatrix(3), 1).to_string(), "010");
  EXPECT_THROW(closed_neighborhood(path3(), 3), std::out_of_range);
}

TEST(IntersectColumns, Examples) {
  EXPECT_EQ(intersect_columns(path3(), NodeSubset::from_string("110")).to_string(), "110");
  EXPECT_EQ(intersect_columns(path3(), NodeSubset::from_string("111")).to_string(), "010");
  EXPECT_EQ(intersect_columns(path3(), NodeSubset::empty(3)).to_string(), "111");
  EXPECT_EQ(intersect_columns(AdjacencyMatrix(5), NodeSubset::empty(5)).to_string(), "11111");
  EXPECT_THROW(intersect_columns(path3(), NodeSubset::from_string("11")),
               std::invalid_argument);
}

TEST(IsMaximalClique, Examples) {
  EXPECT_TRUE(is_maximal_clique(path3(), NodeSubset::from_string("110")));
  EXPECT_FALSE(is_maximal_clique(path3(), NodeSubset::from_string("111")));
  EXPECT_FALSE(is_maximal_clique(path3(), NodeSubset::from_string("010")));
  EXPECT_TRUE(is_maximal_clique(AdjacencyMatrix(2), NodeSubset::from_string("10")));
  EXPECT_FALSE(is_maximal_clique(path3(), NodeSubset::empty(3)));
  EXPECT_THROW(is_maximal_clique(path3(), NodeSubset::from_string("1")),
               std::invalid_argument);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(strings(enumerate_maximal_cliques(path3())),
            (std::vector<std::string>{"110", "011"}));
  EXPECT_EQ(strings(enumerate_maximal_cliques(AdjacencyMatrix(3))),
            (std::vector<std::string>{"100", "010", "001"}));
  EXPECT_EQ(strings(enumerate_maximal_cliques(AdjacencyMatrix::complete(3))),
            (std::vector<std::string>{"111"}));
  EXPECT_THROW(enumerate_maximal_cliques(AdjacencyMatrix(25)), CapabilityError);
}

// Every enumerated set is a clique, maximal, pairwise incomparable, and
// together they cover every node.
void check_enumeration(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  const auto cliques = enumerate_maximal_cliques(a);
  std::set<std::uint64_t> members;
  std::uint64_t cover = 0;
  std::uint64_t prev = ~std::uint64_t{0};
  for (const auto& c : cliques) {
    EXPECT_TRUE(naive_is_clique(a, c.bits()));
    EXPECT_LT(c.bits(), prev) << "descending order";
    prev = c.bits();
    members.insert(c.bits());
    cover |= c.bits();
    for (const auto& d : cliques) {
      if (c == d) continue;
      EXPECT_NE(c.bits() & d.bits(), c.bits()) << c.to_string() << " inside " << d.to_string();
    }
  }
  EXPECT_EQ(cover, NodeSubset::full_mask(n));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const NodeSubset s(n, x);
    const bool listed = members.count(x) != 0;
    EXPECT_EQ(is_maximal_clique(a, s), listed);
    EXPECT_EQ(naive_is_maximal(a, x), listed);
  }
}

TEST(Enumerate, AllGraphsOnFourNodes) {
  for (std::uint64_t code = 0; code < 64; ++code) {
    SCOPED_TRACE(code);
    check_enumeration(AdjacencyMatrix::from_edge_code(4, code));
  }
}

TEST(Enumerate, RandomGraphsUpToTenNodes) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 5; n <= 10; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (int trial = 0; trial < 10; ++trial) {
        check_enumeration(testing::random_graph(n, p, rng));
      }
    }
  }
}

}  // namespace
}  // namespace mcq
