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

#include "lettergraph/constructions.hpp"

#include "brute_force.hpp"
#include "gtest/gtest.h"
#include "lettergraph/errors.hpp"

namespace lettergraph {
namespace {

Graph graph_of(int n, const oracle::EdgeSet& edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

TEST(LettericityFormulaTest, Values) {
  EXPECT_EQ(lettericity_formula(3), 2);
  EXPECT_EQ(lettericity_formula(7), 3);
  EXPECT_EQ(lettericity_formula(10), 4);
  EXPECT_THROW(lettericity_formula(2), DomainError);
  EXPECT_THROW(lettericity_formula(0), DomainError);
}

TEST(PathLetteringTest, SevenVertices) {
  const Lettering l = path_lettering(7);
  EXPECT_EQ(l.word(), (Word{2, 1, 3, 2, 1, 3, 2}));
  EXPECT_EQ(l.decoder(), Decoder(3, {{2, 1}, {3, 2}}));
}

TEST(PathLetteringTest, FourVertices) {
  const Lettering l = path_lettering(4);
  EXPECT_EQ(l.word(), (Word{2, 1, 2, 1}));
  EXPECT_EQ(l.decoder(), Decoder(2, {{2, 1}}));
  const oracle::EdgeSet edges{{1, 2}, {1, 4}, {3, 4}};
  ASSERT_EQ(oracle::decode_edges({2, 1, 2, 1}, {{2, 1}}), edges);
  EXPECT_EQ(decode(l), graph_of(4, edges));
  EXPECT_EQ(is_path(decode(l)), (std::vector<Vertex>{2, 1, 4, 3}));
}

TEST(PathLetteringTest, SixVertices) {
  const Lettering l = path_lettering(6);
  EXPECT_EQ(l.word(), (Word{2, 3, 2, 1, 3, 2}));
  EXPECT_EQ(l.decoder(), Decoder(3, {{2, 1}, {3, 2}}));
  const oracle::EdgeSet edges{{1, 4}, {2, 3}, {2, 6}, {3, 4}, {5, 6}};
  ASSERT_EQ(oracle::decode_edges({2, 3, 2, 1, 3, 2}, {{2, 1}, {3, 2}}), edges);
  EXPECT_EQ(decode(l), graph_of(6, edges));
  EXPECT_EQ(is_path(decode(l)), (std::vector<Vertex>{1, 4, 3, 2, 6, 5}));
}

TEST(PathLetteringTest, FiveVertices) {
  const Lettering l = path_lettering(5);
  EXPECT_EQ(l.word(), (Word{2, 3, 2, 1, 2}));
  const oracle::EdgeSet edges{{2, 3}, {1, 4}, {3, 4}, {2, 5}};
  ASSERT_EQ(oracle::decode_edges({2, 3, 2, 1, 2}, {{2, 1}, {3, 2}}), edges);
  EXPECT_EQ(decode(l), graph_of(5, edges));
  EXPECT_EQ(is_path(decode(l)), (std::vector<Vertex>{1, 4, 3, 2, 5}));
}

TEST(PathLetteringTest, ThreeVertices) {
  const Lettering l = path_lettering(3);
  EXPECT_EQ(l.letter_count(), 2);
  EXPECT_TRUE(is_path(decode(l)));
}

TEST(PathLetteringTest, TenAndThirteenVerticesMatchBlockScheme) {
  // r = 3: 21 | 321 | 432 | 43
  EXPECT_EQ(path_lettering(10).word(), (Word{2, 1, 3, 2, 1, 4, 3, 2, 4, 3}));
  // r = 4: 21 | 321 | 432 | 543 | 54
  EXPECT_EQ(path_lettering(13).word(), (Word{2, 1, 3, 2, 1, 4, 3, 2, 5, 4, 3, 5, 4}));
}

TEST(PathLetteringTest, RejectsShortPaths) {
  EXPECT_THROW(path_lettering(2), DomainError);
  EXPECT_THROW(path_lettering(1), DomainError);
}

TEST(PathLetteringTest, OptimalAndAPathUpToTwoHundred) {
  for (int n = 3; n <= 200; ++n) {
    const Lettering l = path_lettering(n);
    const Graph g = decode(l);
    ASSERT_EQ(g.order(), n);
    ASSERT_TRUE(is_path(g)) << n;
    ASSERT_EQ(l.letter_count(), lettericity_formula(n)) << n;
    ASSERT_EQ(l.decoder().alphabet_size(), lettericity_formula(n)) << n;
  }
}

TEST(PathLetteringTest, DeletionRulesKeepAPathForAllR) {
  for (int r = 1; r <= 60; ++r) {
    for (int n : {3 * r - 1, 3 * r, 3 * r + 1}) {
      if (n < 3) continue;
      ASSERT_TRUE(is_path(decode(path_lettering(n)))) << n;
    }
  }
}

TEST(MatchingLetteringTest, BaseExamples) {
  EXPECT_EQ(matching_base_lettering(1), Lettering(Word{2, 1}, Decoder(2, {{2, 1}})));
  EXPECT_EQ(decode(matching_base_lettering(1)), matching_graph(1));
  EXPECT_EQ(matching_base_lettering(2).word(), (Word{2, 1, 3, 2}));
  EXPECT_EQ(decode(matching_base_lettering(2)), matching_graph(2));
  const Lettering three = matching_base_lettering(3);
  EXPECT_EQ(three.word(), (Word{2, 1, 3, 2, 4, 3}));
  EXPECT_EQ(three.decoder(), Decoder(4, {{2, 1}, {3, 2}, {4, 3}}));
  ASSERT_EQ(oracle::decode_edges({2, 1, 3, 2, 4, 3}, {{2, 1}, {3, 2}, {4, 3}}),
            (oracle::EdgeSet{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(decode(three), matching_graph(3));
  EXPECT_THROW(matching_base_lettering(0), DomainError);
}

TEST(MatchingLetteringTest, CanonicalExamples) {
  EXPECT_EQ(matching_canonical_lettering(1), Lettering(Word{1, 1}, Decoder(1, {{1, 1}})));
  EXPECT_EQ(decode(matching_canonical_lettering(2)), matching_graph(2));
  EXPECT_EQ(matching_canonical_lettering(3).word(), (Word{1, 1, 2, 2, 3, 3}));
  ASSERT_EQ(oracle::decode_edges({1, 1, 2, 2, 3, 3}, {{1, 1}, {2, 2}, {3, 3}}),
            (oracle::EdgeSet{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(decode(matching_canonical_lettering(3)), matching_graph(3));
  EXPECT_THROW(matching_canonical_lettering(0), DomainError);
}

TEST(MatchingLetteringTest, FamiliesUpToFifty) {
  for (int r = 1; r <= 50; ++r) {
    const Lettering base = matching_base_lettering(r);
    const Lettering canonical = matching_canonical_lettering(r);
    ASSERT_TRUE(is_matching(decode(base)));
    ASSERT_TRUE(is_matching(decode(canonical)));
    ASSERT_EQ(decode(base).order(), 2 * r);
    ASSERT_EQ(decode(canonical).order(), 2 * r);
    ASSERT_EQ(base.letter_count(), r + 1);
    ASSERT_EQ(canonical.letter_count(), r);
    const Graph g = decode(canonical);
    for (Letter a = 1; a <= r; ++a) {
      const auto occ = letter_occurrences(canonical, a);
      ASSERT_EQ(occ.size(), 2U);
      ASSERT_TRUE(g.has_edge(occ[0], occ[1]));
    }
  }
}

}  // namespace
}  // namespace lettergraph
