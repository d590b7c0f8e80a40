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

#ifndef LETTERGRAPH_GRAPH_HPP_
#define LETTERGRAPH_GRAPH_HPP_

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace lettergraph {

// Vertices are numbered 1..n throughout the library.
using Vertex = int;

// Unordered edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected loopless graph on vertices 1..n.
//
// Edges are normalized to u < v and kept sorted; neighbour lists are sorted
// as well, so equality and serialization are canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws DomainError on loops, duplicate edges or endpoints outside 1..n.
  // Edges may be given in either orientation.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  std::vector<int> degree_sequence() const;  // sorted descending

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Largest order accepted by are_isomorphic().
inline constexpr int kMaxIsomorphismVertices = 12;

Graph path_graph(int n);
Graph matching_graph(int r);

// Vertex sequence v_1..v_n with consecutive vertices adjacent, starting from
// the smaller-labelled endpoint; nullopt when g is not a path. The graph on
// zero vertices is not a path.
std::optional<std::vector<Vertex>> is_path(const Graph& g);

// True iff every vertex has degree exactly one.
bool is_matching(const Graph& g);

// Subgraph induced by `vertices`, relabelled 1..|S| by rank. Duplicates in
// `vertices` are ignored.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Graph with vertex v renamed to perm[v - 1]. `perm` must be a permutation of
// 1..n.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph complement(const Graph& g);

// Exact isomorphism test by degree-compatible backtracking. Both graphs must
// have at most kMaxIsomorphismVertices vertices, otherwise CapabilityError;
// use is_path()/is_matching() for the structured families.
bool are_isomorphic(const Graph& g, const Graph& h);

// An isomorphism g -> h as a map (result[v - 1] is the image of v), if any.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g,
                                                    const Graph& h);

}  // namespace lettergraph

#endif  // LETTERGRAPH_GRAPH_HPP_
