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

// Readers for the three graph formats and the weighted-matrix format.
//
//   edgelist     first line "n", then "u v" per edge (1-based), '#' comments
//   matrix-json  [[0,1],[1,0]]
//   dimacs       "c" comments, "p edge n m", then "e u v"
//
// Duplicate edges collapse; self-loops and out-of-range endpoints are
// ParseErrors carrying the offending line.

#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcq/error.hpp"
#include "mcq/graph.hpp"

namespace mcq {

enum class GraphFormat { edgelist, matrix_json, dimacs };

inline std::optional<GraphFormat> graph_format_from_string(std::string_view s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "matrix-json") return GraphFormat::matrix_json;
  if (s == "dimacs") return GraphFormat::dimacs;
  return std::nullopt;
}

inline std::string to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist: return "edgelist";
    case GraphFormat::matrix_json: return "matrix-json";
    case GraphFormat::dimacs: return "dimacs";
  }
  return "unknown";
}

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected a non-negative integer, got '" + token + "'", line);
  }
  return value;
}

inline void add_parsed_edge(AdjacencyMatrix& a, std::size_t u, std::size_t v,
                            std::size_t line) {
  const std::size_t n = a.size();
  if (u < 1 || u > n || v < 1 || v > n) {
    throw ParseError("node index out of range 1.." + std::to_string(n), line);
  }
  if (u == v) {
    throw ParseError("self-loop on node " + std::to_string(u), line);
  }
  a.add_edge(u - 1, v - 1);
}

// Line number of a byte offset, for JSON diagnostics.
inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

inline AdjacencyMatrix parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<AdjacencyMatrix> a;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!a) {
      if (tokens.size() != 1) {
        throw ParseError("first line must hold the node count", line_no);
      }
      a.emplace(parse_index(tokens[0], line_no));
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge line must be 'u v'", line_no);
    }
    add_parsed_edge(*a, parse_index(tokens[0], line_no),
                    parse_index(tokens[1], line_no), line_no);
  }
  if (!a) throw ParseError("missing node count", line_no == 0 ? 1 : line_no);
  return *a;
}

inline AdjacencyMatrix parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<AdjacencyMatrix> a;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = split_tokens(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (a) throw ParseError("duplicate problem line", line_no);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError("problem line must be 'p edge n m'", line_no);
      }
      a.emplace(parse_index(tokens[2], line_no));
      parse_index(tokens[3], line_no);
      continue;
    }
    if (tokens[0] == "e") {
      if (!a) throw ParseError("edge line before problem line", line_no);
      if (tokens.size() != 3) throw ParseError("edge line must be 'e u v'", line_no);
      add_parsed_edge(*a, parse_index(tokens[1], line_no),
                      parse_index(tokens[2], line_no), line_no);
      continue;
    }
    throw ParseError("unrecognized line type '" + tokens[0] + "'", line_no);
  }
  if (!a) throw ParseError("missing 'p edge n m' line", line_no == 0 ? 1 : line_no);
  return *a;
}

inline AdjacencyMatrix parse_matrix_json(std::string_view text) {
  const auto doc = parse_json_text(text);
  if (!doc.is_array()) throw ParseError("matrix must be a JSON array of rows", 1);
  const std::size_t n = doc.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " must have " +
                           std::to_string(n) + " entries",
                       0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = row[j];
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") must be 0 or 1",
                         0);
      }
      rows[i][j] = v.get<int>();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) {
      throw ParseError("self-loop on node " + std::to_string(i + 1), 0);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError("matrix is not symmetric at (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")",
                         0);
      }
    }
  }
  return AdjacencyMatrix::from_rows(rows);
}

}  // namespace detail

inline AdjacencyMatrix parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist: return detail::parse_edgelist(text);
    case GraphFormat::matrix_json: return detail::parse_matrix_json(text);
    case GraphFormat::dimacs: return detail::parse_dimacs(text);
  }
  throw std::invalid_argument("unknown graph format");
}

inline AdjacencyMatrix parse_graph(std::istream& in, GraphFormat format) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

/// A JSON array of n arrays of n numbers.
inline WeightedMatrix parse_weighted_json(std::string_view text) {
  const auto doc = detail::parse_json_text(text);
  if (!doc.is_array()) throw ParseError("weighted matrix must be a JSON array", 1);
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ParseError("weighted matrix rows must be arrays", 0);
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("weighted entries must be numbers", 0);
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  try {
    return WeightedMatrix(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

/// Hex SHA-256 of the canonical form "n\n" followed by the 0/1 rows.
inline std::string graph_digest(const AdjacencyMatrix& a) {
  std::string canonical = std::to_string(a.size()) + "\n";
  for (const auto& row : a.to_strings()) canonical += row + "\n";

  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &len,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return "sha256:" + out;
}

}  // namespace mcq
