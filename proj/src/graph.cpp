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

#include "lettergraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "lettergraph/errors.hpp"

namespace lettergraph {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw DomainError("graph order must be non-negative");
  for (Edge& e : edges_) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw DomainError("edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} has an endpoint outside 1.." +
                        std::to_string(n));
    }
    if (e.u == e.v) {
      throw DomainError("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw DomainError("duplicate edge {" + std::to_string(dup->u) + "," +
                      std::to_string(dup->v) + "}");
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw DomainError("vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(n_));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v - 1];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees;
  degrees.reserve(adjacency_.size());
  for (const auto& list : adjacency_) {
    degrees.push_back(static_cast<int>(list.size()));
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path_graph: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph matching_graph(int r) {
  if (r < 1) throw DomainError("matching_graph: r must be at least 1");
  std::vector<Edge> edges;
  for (Vertex j = 1; j <= r; ++j) edges.push_back({2 * j - 1, 2 * j});
  return Graph(2 * r, std::move(edges));
}

std::optional<std::vector<Vertex>> is_path(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (g.size() != static_cast<std::size_t>(n - 1)) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{1};

  Vertex start = 0;
  for (Vertex v = 1; v <= n; ++v) {
    const int d = g.degree(v);
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1 && start == 0) start = v;
  }
  if (start == 0) return std::nullopt;

  // n-1 edges and max degree 2: the walk from an endpoint covers everything
  // iff the graph is connected.
  std::vector<Vertex> order{start};
  Vertex previous = 0;
  Vertex current = start;
  while (true) {
    Vertex next = 0;
    for (Vertex w : g.neighbors(current)) {
      if (w != previous) next = w;
    }
    if (next == 0) break;
    order.push_back(next);
    previous = current;
    current = next;
    if (static_cast<int>(order.size()) > n) return std::nullopt;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_matching(const Graph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> kept(vertices.begin(), vertices.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> rank(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Vertex v = kept[i];
    if (v < 1 || v > g.order()) {
      throw DomainError("induced_subgraph: vertex " + std::to_string(v) +
                        " outside 1.." + std::to_string(g.order()));
    }
    rank[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (rank[e.u] != 0 && rank[e.v] != 0) edges.push_back({rank[e.u], rank[e.v]});
  }
  return Graph(static_cast<int>(kept.size()), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw DomainError("relabel: permutation size does not match graph order");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : perm) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("relabel: not a permutation of 1..n");
    }
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(edges));
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u - 1] |= Mask{1} << (e.v - 1);
    masks[e.v - 1] |= Mask{1} << (e.u - 1);
  }
  return masks;
}

// Maps the vertices of `g` (taken in `order_`) onto `h` one at a time. A
// candidate image must have the same degree and agree on adjacency with every
// vertex already mapped.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h)
      : n_(g.order()), g_(neighbor_masks(g)), h_(neighbor_masks(h)) {
    for (Vertex v = 1; v <= n_; ++v) {
      g_degree_.push_back(g.degree(v));
      h_degree_.push_back(h.degree(v));
    }
    // Highest degree first, then neighbours of already ordered vertices, so
    // adjacency constraints bite early.
    std::vector<bool> taken(n_, false);
    Mask frontier = 0;
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (taken[v]) continue;
        const bool in_frontier = (frontier >> v) & 1U;
        if (best < 0) {
          best = v;
          continue;
        }
        const bool best_in_frontier = (frontier >> best) & 1U;
        if (in_frontier != best_in_frontier) {
          if (in_frontier) best = v;
        } else if (g_degree_[v] > g_degree_[best]) {
          best = v;
        }
      }
      taken[best] = true;
      order_.push_back(best);
      frontier |= g_[best];
    }
    image_.assign(n_, -1);
  }

  std::optional<std::vector<Vertex>> run() {
    if (!extend(0, 0)) return std::nullopt;
    std::vector<Vertex> result(n_);
    for (int v = 0; v < n_; ++v) result[v] = image_[v] + 1;
    return result;
  }

 private:
  bool extend(int depth, Mask used) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U) continue;
      if (g_degree_[v] != h_degree_[w]) continue;
      bool consistent = true;
      for (int d = 0; d < depth && consistent; ++d) {
        const int u = order_[d];
        const bool in_g = (g_[v] >> u) & 1U;
        const bool in_h = (h_[w] >> image_[u]) & 1U;
        consistent = in_g == in_h;
      }
      if (!consistent) continue;
      image_[v] = w;
      if (extend(depth + 1, used | (Mask{1} << w))) return true;
      image_[v] = -1;
    }
    return false;
  }

  int n_;
  std::vector<Mask> g_;
  std::vector<Mask> h_;
  std::vector<int> g_degree_;
  std::vector<int> h_degree_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g,
                                                    const Graph& h) {
  if (g.order() > kMaxIsomorphismVertices ||
      h.order() > kMaxIsomorphismVertices) {
    throw CapabilityError(
        "isomorphism test is limited to " +
        std::to_string(kMaxIsomorphismVertices) +
        " vertices; use is_path()/is_matching() for larger paths and matchings");
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace lettergraph
