// Copyright 2026 The lettergraph Authors
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

#include "lettergraph/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

#include "lettergraph/errors.hpp"

namespace lettergraph {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_number = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_number, "expected two integers, got " +
                                        std::to_string(tokens.size()) + " fields");
    }
    const int a = parse_int(tokens[0], line_number);
    const int b = parse_int(tokens[1], line_number);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_number, "negative count in header");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError(line_number, "more edge lines than the " +
                                        std::to_string(m) + " declared");
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(line_number, "endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw ParseError(line_number, "loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw ParseError(line_number, "duplicate edge " + std::to_string(e.u) + " " +
                                        std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(1, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_number, "header declares " + std::to_string(m) +
                                      " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (const Edge& e : g.edges()) {
    out += "\n" + std::to_string(e.u) + " " + std::to_string(e.v);
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph {";
  for (Vertex v = 1; v <= g.order(); ++v) out += "\n  " + std::to_string(v) + ";";
  for (const Edge& e : g.edges()) {
    out += "\n  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";";
  }
  out += "\n}";
  return out;
}

}  // namespace lettergraph
