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

#include "lettergraph/lettering.hpp"

#include <algorithm>
#include <string>

#include "lettergraph/errors.hpp"

namespace lettergraph {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a < 1) {
      throw DomainError("letter ids start at 1, got " + std::to_string(a));
    }
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

int Word::alphabet_size() const {
  std::vector<bool> seen(static_cast<std::size_t>(max_letter()) + 1, false);
  int distinct = 0;
  for (Letter a : letters_) {
    if (!seen[a]) {
      seen[a] = true;
      ++distinct;
    }
  }
  return distinct;
}

Decoder::Decoder(int alphabet_size) : k_(alphabet_size) {
  if (alphabet_size < 0) throw DomainError("decoder alphabet size must be non-negative");
  table_.assign(static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_), 0);
}

Decoder::Decoder(int alphabet_size, std::span<const LetterPair> pairs)
    : Decoder(alphabet_size) {
  for (const LetterPair& p : pairs) insert(p.first, p.second);
}

Decoder::Decoder(int alphabet_size, std::initializer_list<LetterPair> pairs)
    : Decoder(alphabet_size, std::span<const LetterPair>(pairs.begin(), pairs.size())) {}

std::size_t Decoder::index(Letter a, Letter b) const {
  if (a < 1 || a > k_ || b < 1 || b > k_) {
    throw DomainError("decoder pair " + std::to_string(a) + ":" + std::to_string(b) +
                      " outside alphabet 1.." + std::to_string(k_));
  }
  return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(k_) +
         static_cast<std::size_t>(b - 1);
}

bool Decoder::contains(Letter a, Letter b) const { return table_[index(a, b)] != 0; }

void Decoder::insert(Letter a, Letter b) { table_[index(a, b)] = 1; }

void Decoder::erase(Letter a, Letter b) { table_[index(a, b)] = 0; }

std::vector<LetterPair> Decoder::pairs() const {
  std::vector<LetterPair> out;
  for (Letter a = 1; a <= k_; ++a) {
    for (Letter b = 1; b <= k_; ++b) {
      if (contains(a, b)) out.push_back({a, b});
    }
  }
  return out;
}

std::size_t Decoder::size() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
}

Lettering::Lettering(Word word, Decoder decoder)
    : word_(std::move(word)), decoder_(std::move(decoder)) {
  if (word_.max_letter() > decoder_.alphabet_size()) {
    throw InvalidLettering("word uses letter " + std::to_string(word_.max_letter()) +
                           " but the decoder alphabet is 1.." +
                           std::to_string(decoder_.alphabet_size()));
  }
}

Graph decode(const Lettering& lettering) {
  const Word& w = lettering.word();
  const Decoder& d = lettering.decoder();
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d.contains(w[i], w[j])) edges.push_back({i + 1, j + 1});
    }
  }
  return Graph(n, std::move(edges));
}

Word subword(const Word& word, std::span<const int> positions) {
  std::vector<Letter> letters;
  letters.reserve(positions.size());
  int previous = 0;
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(word.size())) {
      throw DomainError("subword: position " + std::to_string(p) + " outside 1.." +
                        std::to_string(word.size()));
    }
    if (p <= previous) throw DomainError("subword: positions must be strictly increasing");
    previous = p;
    letters.push_back(word[static_cast<std::size_t>(p - 1)]);
  }
  return Word(std::move(letters));
}

std::vector<int> letter_occurrences(const Lettering& lettering, Letter a) {
  if (a < 1 || a > lettering.decoder().alphabet_size()) {
    throw DomainError("letter " + std::to_string(a) + " outside the decoder alphabet");
  }
  std::vector<int> positions;
  const Word& w = lettering.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == a) positions.push_back(static_cast<int>(i) + 1);
  }
  return positions;
}

Decoder complement_decoder(const Decoder& decoder) {
  const int k = decoder.alphabet_size();
  Decoder out(k);
  for (Letter a = 1; a <= k; ++a) {
    for (Letter b = 1; b <= k; ++b) {
      if (!decoder.contains(a, b)) out.insert(a, b);
    }
  }
  return out;
}

bool verify_lettering(const Lettering& lettering, const Graph& target,
                      std::optional<std::span<const Vertex>> mapping) {
  const int n = static_cast<int>(lettering.word().size());
  if (n != target.order()) {
    throw DomainError("word length " + std::to_string(n) +
                      " differs from target order " + std::to_string(target.order()));
  }
  const Graph decoded = decode(lettering);

  if (mapping) {
    if (static_cast<int>(mapping->size()) != n) {
      throw DomainError("mapping size differs from word length");
    }
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v : *mapping) {
      if (v < 1 || v > n || hit[v]) {
        throw DomainError("mapping is not a bijection onto the target vertices");
      }
      hit[v] = true;
    }
    return relabel(decoded, *mapping) == target;
  }

  if (n <= kMaxIsomorphismVertices) return are_isomorphic(decoded, target);
  if (is_path(target)) return is_path(decoded).has_value();
  if (is_matching(target)) return is_matching(decoded);
  throw CapabilityError("cannot verify a " + std::to_string(n) +
                        "-vertex target without a mapping: isomorphism is limited to " +
                        std::to_string(kMaxIsomorphismVertices) +
                        " vertices and the target is neither a path nor a matching");
}

}  // namespace lettergraph
