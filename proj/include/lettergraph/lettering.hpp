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

#ifndef LETTERGRAPH_LETTERING_HPP_
#define LETTERGRAPH_LETTERING_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lettergraph/graph.hpp"

namespace lettergraph {

// Letters are the integers 1..k of an alphabet of size k.
using Letter = int;

// Ordered pair (earlier letter, later letter).
struct LetterPair {
  Letter first = 0;
  Letter second = 0;

  friend auto operator<=>(const LetterPair&, const LetterPair&) = default;
};

// A finite sequence of letters. Positions are 0-based through operator[]
// and 1-based everywhere they denote graph vertices.
class Word {
 public:
  Word() = default;
  // Throws DomainError if any letter is < 1.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  // Largest letter id, 0 for the empty word.
  Letter max_letter() const;
  // Number of distinct letters that occur.
  int alphabet_size() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Set of ordered letter pairs over the alphabet 1..k, held as a dense k x k
// table. Not required to be symmetric.
class Decoder {
 public:
  explicit Decoder(int alphabet_size = 0);
  // Repeated pairs collapse. Throws DomainError if a component is outside 1..k.
  Decoder(int alphabet_size, std::span<const LetterPair> pairs);
  Decoder(int alphabet_size, std::initializer_list<LetterPair> pairs);

  int alphabet_size() const { return k_; }
  bool contains(Letter a, Letter b) const;
  void insert(Letter a, Letter b);
  void erase(Letter a, Letter b);
  // Pairs in lexicographic order.
  std::vector<LetterPair> pairs() const;
  std::size_t size() const;

  friend bool operator==(const Decoder&, const Decoder&) = default;

 private:
  std::size_t index(Letter a, Letter b) const;

  int k_ = 0;
  std::vector<std::uint8_t> table_;
};

// A word together with a decoder whose alphabet covers every letter of the
// word.
class Lettering {
 public:
  Lettering() = default;
  // Throws InvalidLettering if the word uses a letter above the decoder's k.
  Lettering(Word word, Decoder decoder);

  const Word& word() const { return word_; }
  const Decoder& decoder() const { return decoder_; }
  // Letters actually used by the word; decoder letters absent from the word
  // do not count.
  int letter_count() const { return word_.alphabet_size(); }

  friend bool operator==(const Lettering&, const Lettering&) = default;

 private:
  Word word_;
  Decoder decoder_;
};

// Letter graph: vertices 1..n are the positions, and i < j are adjacent iff
// (w_i, w_j) is in the decoder.
Graph decode(const Lettering& lettering);

// Subsequence at the given 1-based, strictly increasing positions.
Word subword(const Word& word, std::span<const int> positions);

// 1-based positions carrying letter `a`. They form a clique in the letter
// graph when (a, a) is in the decoder and an anticlique otherwise.
std::vector<int> letter_occurrences(const Lettering& lettering, Letter a);

// All pairs over the same alphabet that are not in `decoder`.
Decoder complement_decoder(const Decoder& decoder);

// With a mapping (mapping[i] is the target vertex of position i + 1), checks
// that decode(lettering) equals `target` under it; a mapping that is not a
// bijection onto 1..n is rejected with DomainError. Without one, checks
// isomorphism, falling back to is_path()/is_matching() when the target is too
// large for are_isomorphic() (CapabilityError if it is neither). Throws
// DomainError when the word length differs from the target order.
bool verify_lettering(const Lettering& lettering, const Graph& target,
                      std::optional<std::span<const Vertex>> mapping = std::nullopt);

}  // namespace lettergraph

#endif  // LETTERGRAPH_LETTERING_HPP_
