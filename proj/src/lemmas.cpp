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

#include <algorithm>
#include <cstdio>

#include "lettergraph/errors.hpp"
#include "lettergraph/solver.hpp"

namespace lettergraph {

std::vector<BetweennessViolation> check_betweenness(const Lettering& lettering) {
  return check_betweenness(lettering.word(), decode(lettering));
}

std::vector<BetweennessViolation> check_betweenness(const Word& w, const Graph& g) {
  const int n = static_cast<int>(w.size());
  if (n != g.order()) throw DomainError("check_betweenness: word length differs from graph order");
  std::vector<BetweennessViolation> violations;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      if (w[i - 1] != w[k - 1]) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == k) continue;
        if (g.has_edge(j, i) == g.has_edge(j, k)) continue;
        if (!(i < j && j < k)) violations.push_back({i, j, k});
      }
    }
  }
  return violations;
}

namespace {

void check_matching_size(int r) {
  if (r < 1) throw DomainError("matching size r must be at least 1");
  if (r > kMaxAuditMatchingSize) {
    throw CapabilityError("matching audits enumerate rK_2 only up to r=" +
                          std::to_string(kMaxAuditMatchingSize) + " (got r=" +
                          std::to_string(r) + ")");
  }
}

// Every letter occurs twice, on adjacent vertices, and encodes a clique.
bool letters_are_paired(const LetteringWitness& witness, const Graph& target) {
  const Lettering& lettering = witness.lettering;
  for (Letter a = 1; a <= lettering.decoder().alphabet_size(); ++a) {
    const std::vector<int> positions = letter_occurrences(lettering, a);
    if (positions.empty()) continue;
    if (positions.size() != 2) return false;
    const Vertex u = witness.vertex_of_position[positions[0] - 1];
    const Vertex v = witness.vertex_of_position[positions[1] - 1];
    if (!target.has_edge(u, v)) return false;
    if (!lettering.decoder().contains(a, a)) return false;
  }
  return true;
}

}  // namespace

MatchingAudit audit_matching_letterings(int r, int k) {
  check_matching_size(r);
  if (k < r || k > 2 * r) {
    throw DomainError("audit needs r <= k <= 2r (r=" + std::to_string(r) +
                      ", k=" + std::to_string(k) + ")");
  }
  const Graph target = matching_graph(r);
  const Enumeration all = enumerate_letterings(target, k);

  MatchingAudit audit;
  audit.r = r;
  audit.k = k;
  audit.witnesses = all.witnesses.size();
  std::size_t paired = 0;
  for (const LetteringWitness& witness : all.witnesses) {
    const Word& word = witness.lettering.word();
    for (Letter a = 1; a <= k; ++a) {
      const int occurrences =
          static_cast<int>(std::count(word.letters().begin(), word.letters().end(), a));
      audit.max_letter_occurrences = std::max(audit.max_letter_occurrences, occurrences);
    }
    if (k == r && letters_are_paired(witness, target)) ++paired;
  }
  audit.at_most_two_per_letter = audit.max_letter_occurrences <= 2;
  if (k == r) {
    audit.paired_fraction =
        audit.witnesses == 0 ? 0.0
                             : static_cast<double>(paired) / static_cast<double>(audit.witnesses);
  }
  return audit;
}

MatchingWordCount count_matching_words(int r) {
  check_matching_size(r);
  const Graph target = matching_graph(r);
  MatchingWordCount count;
  count.canonical = enumerate_letterings(target, r).witnesses.size();
  EnumerationOptions fixed;
  fixed.convention = WordConvention::kFixedAlphabet;
  count.fixed_alphabet = enumerate_letterings(target, r, fixed).witnesses.size();
  return count;
}

std::uint64_t matching_word_formula(int r) {
  if (r < 0 || r > 10) throw DomainError("matching_word_formula supports 0 <= r <= 10");
  std::uint64_t value = 1;
  for (int i = 2; i <= 2 * r; ++i) value *= static_cast<std::uint64_t>(i);
  return value >> r;
}

namespace {

std::string format_fraction(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", x);
  if (x != 0.0 && x != 1.0) std::snprintf(buffer, sizeof(buffer), "%.6f", x);
  return buffer;
}

}  // namespace

std::string render_audit(const MatchingAudit& audit) {
  std::string out = "audit r=" + std::to_string(audit.r) + " k=" + std::to_string(audit.k) + "\n";
  out += "witnesses " + std::to_string(audit.witnesses) + "\n";
  out += "max-letter-occurrences " + std::to_string(audit.max_letter_occurrences) + "; lemma3 ";
  out += audit.paired_fraction ? format_fraction(*audit.paired_fraction) : std::string("n/a");
  out += "\n";
  out += audit.holds() ? "PASS" : "FAIL";
  return out;
}

std::string render_audit_kv(const MatchingAudit& audit) {
  std::string out;
  out += "r=" + std::to_string(audit.r) + "\n";
  out += "k=" + std::to_string(audit.k) + "\n";
  out += "witnesses=" + std::to_string(audit.witnesses) + "\n";
  out += "max_letter_occurrences=" + std::to_string(audit.max_letter_occurrences) + "\n";
  out += std::string("lemma2=") + (audit.at_most_two_per_letter ? "pass" : "fail") + "\n";
  out += "lemma3_fraction=" +
         (audit.paired_fraction ? format_fraction(*audit.paired_fraction) : std::string("n/a")) +
         "\n";
  out += std::string("status=") + (audit.holds() ? "pass" : "fail");
  return out;
}

}  // namespace lettergraph
