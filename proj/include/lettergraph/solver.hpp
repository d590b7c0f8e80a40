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

#ifndef LETTERGRAPH_SOLVER_HPP_
#define LETTERGRAPH_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lettergraph/graph.hpp"
#include "lettergraph/lettering.hpp"

namespace lettergraph {

// Largest graph accepted by is_k_letterable() and lettericity_exact().
inline constexpr int kMaxSolverVertices = 12;
// Largest graph accepted by enumerate_letterings().
inline constexpr int kMaxEnumerationVertices = 10;

// A lettering of a target graph plus the bijection that certifies it:
// position i + 1 of the word is target vertex vertex_of_position[i].
struct LetteringWitness {
  Lettering lettering;
  std::vector<Vertex> vertex_of_position;

  friend bool operator==(const LetteringWitness&, const LetteringWitness&) = default;
};

// A lettering of `g` over at most k letters, or nullopt if none exists.
//
// The search walks (vertex order, letter) assignments depth first, vertices
// ascending and letters ascending in restricted-growth form (letter t is only
// introduced after 1..t-1). The decoder is never guessed: the first pair of
// positions realizing an ordered letter pair fixes whether that pair is in
// D, and every later realization must agree. The returned witness is the
// first one found; its decoder holds exactly the realized edge pairs, over
// the letters the word uses.
//
// Throws CapabilityError above kMaxSolverVertices and DomainError on an
// empty graph or negative k.
std::optional<LetteringWitness> is_k_letterable(const Graph& g, int k);

struct LettericityResult {
  int lettericity = 0;
  LetteringWitness witness;
};

// Smallest k for which is_k_letterable() succeeds, with its witness.
LettericityResult lettericity_exact(const Graph& g);

enum class WordConvention {
  // One word per letter-relabelling class (restricted-growth form).
  kCanonical,
  // Every relabelling over the fixed alphabet 1..k counted separately.
  kFixedAlphabet,
};

struct EnumerationOptions {
  std::optional<std::size_t> limit;
  WordConvention convention = WordConvention::kCanonical;
};

struct Enumeration {
  // One witness per distinct word, in lexicographic word order.
  std::vector<LetteringWitness> witnesses;
  bool truncated = false;
};

// All letterings of `g` whose word uses exactly k letters, deduplicated by
// word. For each word the witness kept is the one with the lexicographically
// smallest vertex order. With a limit, the search stops as soon as more than
// `limit` words are known and `truncated` is set.
//
// Throws CapabilityError above kMaxEnumerationVertices and DomainError unless
// 1 <= k <= |V(g)|.
Enumeration enumerate_letterings(const Graph& g, int k, EnumerationOptions options = {});

}  // namespace lettergraph

#endif  // LETTERGRAPH_SOLVER_HPP_
