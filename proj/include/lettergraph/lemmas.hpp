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

#ifndef LETTERGRAPH_LEMMAS_HPP_
#define LETTERGRAPH_LEMMAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lettergraph/lettering.hpp"

namespace lettergraph {

// Largest r for which the matching audits enumerate rK_2.
inline constexpr int kMaxAuditMatchingSize = 3;

// Positions first < last carry the same letter and `between` is adjacent to
// exactly one of them, yet does not lie strictly between them.
struct BetweennessViolation {
  int first = 0;
  int between = 0;
  int last = 0;

  friend auto operator<=>(const BetweennessViolation&, const BetweennessViolation&) = default;
};

// Every distinguisher of two same-letter positions must sit strictly between
// them. This holds for every letter graph, so a non-empty result means the
// decode step is broken. Works on the decoded graph only.
std::vector<BetweennessViolation> check_betweenness(const Lettering& lettering);

// Same check for an arbitrary graph on the word's positions; useful for
// letterings written by hand. Throws DomainError if the orders differ.
std::vector<BetweennessViolation> check_betweenness(const Word& word, const Graph& g);

struct MatchingAudit {
  int r = 0;
  int k = 0;
  std::size_t witnesses = 0;
  // Largest number of occurrences of a single letter over all witnesses.
  int max_letter_occurrences = 0;
  // No letter encodes three or more vertices.
  bool at_most_two_per_letter = true;
  // Only for k == r: share of witnesses in which every letter occurs exactly
  // twice, on two adjacent vertices, with (a, a) in the decoder.
  std::optional<double> paired_fraction;

  bool holds() const {
    return at_most_two_per_letter && (!paired_fraction || *paired_fraction == 1.0);
  }
};

// Audits every k-letter lettering of rK_2 found by enumerate_letterings().
// Requires 1 <= r <= kMaxAuditMatchingSize (CapabilityError above) and
// r <= k <= 2r (DomainError otherwise).
MatchingAudit audit_matching_letterings(int r, int k);

struct MatchingWordCount {
  // Words over the fixed alphabet 1..r, relabellings counted separately.
  std::uint64_t fixed_alphabet = 0;
  // Restricted-growth words, one per relabelling class.
  std::uint64_t canonical = 0;
};

// Number of words admitting an r-lettering of rK_2, under both conventions.
// Requires 1 <= r <= kMaxAuditMatchingSize.
MatchingWordCount count_matching_words(int r);

// (2r)! / 2^r: arrangements of r letters, each used twice.
std::uint64_t matching_word_formula(int r);

std::string render_audit(const MatchingAudit& audit);
std::string render_audit_kv(const MatchingAudit& audit);

}  // namespace lettergraph

#endif  // LETTERGRAPH_LEMMAS_HPP_
