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

#ifndef LETTERGRAPH_GRAPH_IO_HPP_
#define LETTERGRAPH_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "lettergraph/graph.hpp"

namespace lettergraph {

// Edge-list text: a header line "n m" followed by m lines "u v" (1-indexed,
// whitespace separated). Blank lines are skipped. Throws ParseError carrying
// the offending line number.
Graph parse_edge_list(std::string_view text);

// Canonical edge-list text, edges in sorted order, no trailing newline.
std::string serialize_edge_list(const Graph& g);

// Undirected DOT description: every vertex declared, then "u -- v;" lines in
// sorted order. No trailing newline.
std::string to_dot(const Graph& g);

}  // namespace lettergraph

#endif  // LETTERGRAPH_GRAPH_IO_HPP_
