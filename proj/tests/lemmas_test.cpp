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

#include "lettergraph/lemmas.hpp"

#include "brute_force.hpp"
#include "gtest/gtest.h"
#include "lettergraph/errors.hpp"

namespace lettergraph {
namespace {

TEST(BetweennessTest, Examples) {
  EXPECT_TRUE(check_betweenness(Lettering(Word{1, 2, 1}, Decoder(2, {{1, 2}, {2, 1}}))).empty());
  EXPECT_TRUE(
      check_betweenness(Lettering(Word{2, 1, 3, 2, 1, 3, 2}, Decoder(3, {{2, 1}, {3, 2}})))
          .empty());
}

TEST(BetweennessTest, FlagsGraphsNoDecoderCanProduce) {
  // Letter 1 at positions 1 and 2; position 3 is adjacent to 1 only.
  const auto v = check_betweenness(Word{1, 1, 2}, Graph(3, {{1, 3}}));
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0], (BetweennessViolation{1, 3, 2}));
  EXPECT_THROW(check_betweenness(Word{1}, Graph(2)), DomainError);
}

TEST(BetweennessTest, ExhaustiveOverSmallLetterings) {
  // Every word of length 6 over 3 letters with every decoder.
  for (int code = 0; code < 729; ++code) {
    std::vector<Letter> letters;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) letters.push_back(c % 3 + 1);
    for (int bits = 0; bits < 512; ++bits) {
      Decoder d(3);
      for (int p = 0; p < 9; ++p) {
        if ((bits >> p) & 1) d.insert(p / 3 + 1, p % 3 + 1);
      }
      ASSERT_TRUE(check_betweenness(Lettering(Word(letters), d)).empty());
    }
  }
}

TEST(AuditTest, SingleEdge) {
  const MatchingAudit audit = audit_matching_letterings(1, 1);
  EXPECT_EQ(audit.witnesses, 1U);
  EXPECT_EQ(audit.max_letter_occurrences, 2);
  ASSERT_TRUE(audit.paired_fraction);
  EXPECT_EQ(*audit.paired_fraction, 1.0);
  EXPECT_TRUE(audit.holds());
}

TEST(AuditTest, TwoAndThreeEdges) {
  for (int r : {2, 3}) {
    const MatchingAudit audit = audit_matching_letterings(r, r);
    EXPECT_EQ(audit.max_letter_occurrences, 2);
    ASSERT_TRUE(audit.paired_fraction);
    EXPECT_EQ(*audit.paired_fraction, 1.0);
    EXPECT_TRUE(audit.holds());
  }
}

TEST(AuditTest, LargerAlphabets) {
  for (int r = 1; r <= 3; ++r) {
    for (int k = r + 1; k <= 2 * r; ++k) {
      const MatchingAudit audit = audit_matching_letterings(r, k);
      EXPECT_GT(audit.witnesses, 0U);
      EXPECT_LE(audit.max_letter_occurrences, 2);
      EXPECT_FALSE(audit.paired_fraction);
      EXPECT_TRUE(audit.holds());
    }
  }
}

TEST(AuditTest, Bounds) {
  EXPECT_THROW(audit_matching_letterings(4, 4), CapabilityError);
  EXPECT_THROW(audit_matching_letterings(0, 1), DomainError);
  EXPECT_THROW(audit_matching_letterings(2, 1), DomainError);
  EXPECT_THROW(audit_matching_letterings(2, 5), DomainError);
}

TEST(AuditTest, Rendering) {
  const MatchingAudit audit = audit_matching_letterings(2, 2);
  EXPECT_EQ(render_audit(audit),
            "audit r=2 k=2\nwitnesses 3\nmax-letter-occurrences 2; lemma3 1.0\nPASS");
  EXPECT_EQ(render_audit_kv(audit),
            "r=2\nk=2\nwitnesses=3\nmax_letter_occurrences=2\nlemma2=pass\n"
            "lemma3_fraction=1.0\nstatus=pass");
}

TEST(CountMatchingWordsTest, AgreesWithBruteForceAndFormula) {
  const std::uint64_t expected_fixed[] = {1, 6, 90};
  const std::uint64_t expected_canonical[] = {1, 3, 15};
  for (int r = 1; r <= 3; ++r) {
    const auto brute = oracle::brute_force_matching_words(r);
    ASSERT_EQ(brute.fixed_alphabet, expected_fixed[r - 1]);
    ASSERT_EQ(brute.restricted_growth, expected_canonical[r - 1]);
    const MatchingWordCount count = count_matching_words(r);
    EXPECT_EQ(count.fixed_alphabet, expected_fixed[r - 1]);
    EXPECT_EQ(count.canonical, expected_canonical[r - 1]);
    EXPECT_EQ(matching_word_formula(r), expected_fixed[r - 1]);
    EXPECT_EQ(count.fixed_alphabet << r, [r] {
      std::uint64_t f = 1;
      for (int i = 2; i <= 2 * r; ++i) f *= static_cast<std::uint64_t>(i);
      return f;
    }());
  }
  EXPECT_THROW(count_matching_words(4), CapabilityError);
}

}  // namespace
}  // namespace lettergraph
