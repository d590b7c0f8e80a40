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
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "gtest/gtest.h"
#include "lettergraph/errors.hpp"

namespace lettergraph {
namespace {

Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }

TEST(GraphTest, NormalizesAndValidatesEdges) {
  const Graph g(3, {{3, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_THROW(Graph(2, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph(2, {{1, 2}, {2, 1}}), DomainError);
  EXPECT_THROW(Graph(2, {{1, 3}}), DomainError);
  EXPECT_THROW(g.has_edge(0, 1), DomainError);
}

TEST(GraphTest, PathGraph) {
  EXPECT_EQ(path_graph(1), Graph(1));
  EXPECT_EQ(path_graph(2), Graph(2, {{1, 2}}));
  const Graph p7 = path_graph(7);
  EXPECT_EQ(p7.size(), 6U);
  for (int i = 1; i < 7; ++i) EXPECT_TRUE(p7.has_edge(i, i + 1));
  EXPECT_THROW(path_graph(0), DomainError);
}

TEST(GraphTest, MatchingGraph) {
  EXPECT_EQ(matching_graph(1), Graph(2, {{1, 2}}));
  EXPECT_EQ(matching_graph(2), Graph(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(matching_graph(3).order(), 6);
  EXPECT_EQ(matching_graph(3).size(), 3U);
  EXPECT_THROW(matching_graph(0), DomainError);
}

TEST(IsPathTest, Examples) {
  const Graph decoded(7, {{1, 2}, {1, 5}, {3, 4}, {4, 5}, {3, 7}, {6, 7}});
  EXPECT_EQ(is_path(decoded), (std::vector<Vertex>{2, 1, 5, 4, 3, 7, 6}));
  EXPECT_FALSE(is_path(triangle()));
  EXPECT_EQ(is_path(Graph(1)), (std::vector<Vertex>{1}));
  EXPECT_FALSE(is_path(Graph(0)));
  EXPECT_FALSE(is_path(Graph(2)));
  // n-1 edges and max degree 2 but disconnected: triangle plus an isolated pair.
  EXPECT_FALSE(is_path(Graph(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}})));
  // Triangle plus a disjoint path: right edge count, has endpoints, still not a path.
  EXPECT_FALSE(is_path(Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}})));
}

TEST(IsMatchingTest, Examples) {
  EXPECT_TRUE(is_matching(matching_graph(3)));
  EXPECT_FALSE(is_matching(path_graph(3)));
  EXPECT_FALSE(is_matching(Graph(2)));
}

TEST(FamiliesTest, PathsAndMatchingsAreDistinguished) {
  for (int n = 1; n <= 30; ++n) EXPECT_TRUE(is_path(path_graph(n)));
  for (int r = 1; r <= 15; ++r) EXPECT_TRUE(is_matching(matching_graph(r)));
  for (int n = 3; n <= 30; ++n) EXPECT_FALSE(is_matching(path_graph(n)));
  for (int r = 2; r <= 15; ++r) EXPECT_FALSE(is_path(matching_graph(r)));
}

TEST(InducedSubgraphTest, Examples) {
  EXPECT_EQ(induced_subgraph(path_graph(7), std::vector<Vertex>{2, 3, 5, 6}), matching_graph(2));
  const Graph g = triangle();
  EXPECT_EQ(induced_subgraph(g, std::vector<Vertex>{1, 2, 3}), g);
  EXPECT_EQ(induced_subgraph(path_graph(4), std::vector<Vertex>{1, 3}), Graph(2));
  EXPECT_THROW(induced_subgraph(g, std::vector<Vertex>{4}), DomainError);
}

TEST(InducedSubgraphTest, MatchesDirectFilterForAllSubsets) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      oracle::SmallGraph s{n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1)};
      const Graph g = oracle::to_graph(s);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Vertex> S;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1) S.push_back(v + 1);
        }
        const Graph h = induced_subgraph(g, S);
        ASSERT_EQ(h.order(), static_cast<int>(S.size()));
        std::size_t inside = 0;
        for (std::size_t i = 0; i < S.size(); ++i) {
          for (std::size_t j = i + 1; j < S.size(); ++j) {
            const bool e = g.has_edge(S[i], S[j]);
            inside += e ? 1 : 0;
            ASSERT_EQ(h.has_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1), e);
          }
        }
        ASSERT_EQ(h.size(), inside);
      }
    }
  }
}

TEST(IsomorphismTest, Examples) {
  EXPECT_FALSE(are_isomorphic(path_graph(4), matching_graph(2)));
  const Graph p5_decoded(5, {{2, 3}, {1, 4}, {3, 4}, {2, 5}});
  EXPECT_TRUE(are_isomorphic(path_graph(5), p5_decoded));
  EXPECT_TRUE(are_isomorphic(Graph(0), Graph(0)));
  EXPECT_FALSE(are_isomorphic(Graph(3), Graph(4)));
}

TEST(IsomorphismTest, SameDegreesDifferentStructure) {
  // C6 vs two triangles: both 2-regular on six vertices.
  const Graph c6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  const Graph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  EXPECT_FALSE(are_isomorphic(c6, two_triangles));
}

TEST(IsomorphismTest, EnforcesSizeBound) {
  EXPECT_THROW(are_isomorphic(path_graph(13), path_graph(13)), CapabilityError);
  EXPECT_NO_THROW(are_isomorphic(path_graph(12), path_graph(12)));
}

TEST(IsomorphismTest, AgreesWithCanonicalFormsOnAllFiveVertexClasses) {
  const auto classes = oracle::nonisomorphic_graphs(5);
  ASSERT_EQ(classes.size(), 34U);
  std::mt19937 rng(11);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Graph g = oracle::to_graph(classes[i]);
    std::vector<Vertex> perm{1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = relabel(g, perm);
    EXPECT_TRUE(are_isomorphic(g, shuffled));
    const auto map = find_isomorphism(g, shuffled);
    ASSERT_TRUE(map);
    EXPECT_EQ(relabel(g, *map), shuffled);
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i != j) EXPECT_FALSE(are_isomorphic(g, oracle::to_graph(classes[j])));
    }
  }
}

TEST(RelabelTest, RejectsNonPermutations) {
  EXPECT_THROW(relabel(path_graph(3), std::vector<Vertex>{1, 1, 2}), DomainError);
  EXPECT_THROW(relabel(path_graph(3), std::vector<Vertex>{1, 2}), DomainError);
}

TEST(ComplementTest, Basic) {
  EXPECT_EQ(complement(Graph(3)), triangle());
  EXPECT_EQ(complement(path_graph(3)), Graph(3, {{1, 3}}));
}

}  // namespace
}  // namespace lettergraph
