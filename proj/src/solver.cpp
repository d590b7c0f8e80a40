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

#include "lettergraph/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "lettergraph/errors.hpp"

namespace lettergraph {

namespace {

using Mask = std::uint32_t;
static_assert(kMaxSolverVertices <= 32, "vertex sets are 32-bit masks");

constexpr std::int8_t kUnknown = -1;

Mask bit(int v) { return Mask{1} << v; }

// Depth-first search over partial words. Position p holds vertex order_[p]
// with letter letter_[p] (0-based letters). For every ordered letter pair
// (a, b) pair_state_ records whether an earlier a followed by a later b is an
// edge (1), a non-edge (0), or not yet realized (-1).
//
// Two facts about letter graphs prune the search:
//  * all vertices sharing a letter look alike to every vertex placed outside
//    their span, so an unplaced vertex must never distinguish two vertices
//    of the same letter;
//  * once every letter is in use, each unplaced vertex needs some letter
//    compatible with the pair states already fixed.
class LetteringSearch {
 public:
  using Visitor = std::function<bool(const LetteringSearch&)>;

  LetteringSearch(const Graph& g, int k) : n_(g.order()), k_(k) {
    for (const Edge& e : g.edges()) {
      neighbors_[e.u - 1] |= bit(e.v - 1);
      neighbors_[e.v - 1] |= bit(e.u - 1);
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        distinguishers_[u][v] = (neighbors_[u] ^ neighbors_[v]) & ~(bit(u) | bit(v));
      }
    }
    pair_state_.assign(static_cast<std::size_t>(k_) * k_, kUnknown);
  }

  // Calls `visit` at every complete assignment (using exactly k letters when
  // `exact` is set) until it returns false.
  void run(bool exact, const Visitor& visit) {
    exact_ = exact;
    visit_ = &visit;
    stopped_ = false;
    search(0, 0);
  }

  LetteringWitness witness() const {
    std::vector<Letter> letters(letter_.begin(), letter_.begin() + n_);
    for (Letter& a : letters) a += 1;
    Decoder decoder(used_);
    for (int a = 0; a < used_; ++a) {
      for (int b = 0; b < used_; ++b) {
        if (state(a, b) == 1) decoder.insert(a + 1, b + 1);
      }
    }
    std::vector<Vertex> vertices(order_.begin(), order_.begin() + n_);
    for (Vertex& v : vertices) v += 1;
    return {Lettering(Word(std::move(letters)), std::move(decoder)), std::move(vertices)};
  }

  std::vector<Letter> word() const {
    std::vector<Letter> letters(letter_.begin(), letter_.begin() + n_);
    for (Letter& a : letters) a += 1;
    return letters;
  }

 private:
  std::int8_t& state(int a, int b) { return pair_state_[static_cast<std::size_t>(a) * k_ + b]; }
  std::int8_t state(int a, int b) const {
    return pair_state_[static_cast<std::size_t>(a) * k_ + b];
  }

  void search(int depth, Mask placed) {
    if (depth == n_) {
      if (exact_ && used_ != k_) return;
      if (!(*visit_)(*this)) stopped_ = true;
      return;
    }
    if (exact_ && n_ - depth < k_ - used_) return;

    for (int x = 0; x < n_ && !stopped_; ++x) {
      if (placed & bit(x)) continue;
      const int letters = std::min(used_ + 1, k_);
      for (int c = 0; c < letters && !stopped_; ++c) {
        const std::size_t mark = trail_.size();
        const int used_before = used_;
        if (place(x, c, placed)) {
          order_[depth] = x;
          letter_[depth] = c;
          search(depth + 1, placed | bit(x));
        }
        unplace(x, c, mark, used_before);
      }
    }
  }

  bool place(int x, int c, Mask placed) {
    for (int a = 0; a < used_; ++a) {
      const Mask members = classes_[a];
      const Mask seen = neighbors_[x] & members;
      if (seen != 0 && seen != members) return false;
      const std::int8_t need = seen != 0 ? 1 : 0;
      std::int8_t& s = state(a, c);
      if (s == kUnknown) {
        s = need;
        trail_.push_back(static_cast<std::size_t>(a) * k_ + c);
      } else if (s != need) {
        return false;
      }
    }

    const Mask unplaced = ~(placed | bit(x)) & full();
    if (classes_[c] != 0) {
      const int rep = std::countr_zero(classes_[c]);
      if (distinguishers_[x][rep] & unplaced) return false;
    }
    classes_[c] |= bit(x);
    if (c == used_) ++used_;

    if (used_ == k_) {
      for (Mask rest = unplaced; rest != 0; rest &= rest - 1) {
        if (!has_letter(std::countr_zero(rest))) return false;
      }
    }
    return true;
  }

  // Only pair states can be checked here: other unplaced vertices may still
  // land between y and the members of its letter.
  bool has_letter(int y) const {
    for (int c = 0; c < k_; ++c) {
      bool ok = true;
      for (int a = 0; a < used_ && ok; ++a) {
        const std::int8_t s = state(a, c);
        if (s == kUnknown) continue;
        ok = s == ((neighbors_[y] & classes_[a]) != 0 ? 1 : 0);
      }
      if (ok) return true;
    }
    return false;
  }

  void unplace(int x, int c, std::size_t mark, int used_before) {
    while (trail_.size() > mark) {
      pair_state_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
    classes_[c] &= ~bit(x);
    used_ = used_before;
  }

  Mask full() const { return n_ == 32 ? ~Mask{0} : bit(n_) - 1; }

  int n_;
  int k_;
  std::array<Mask, kMaxSolverVertices> neighbors_{};
  std::array<std::array<Mask, kMaxSolverVertices>, kMaxSolverVertices> distinguishers_{};

  std::array<int, kMaxSolverVertices> order_{};
  std::array<int, kMaxSolverVertices> letter_{};
  std::array<Mask, kMaxSolverVertices> classes_{};
  std::vector<std::int8_t> pair_state_;
  std::vector<std::size_t> trail_;
  int used_ = 0;

  bool exact_ = false;
  bool stopped_ = false;
  const Visitor* visit_ = nullptr;
};

void check_solver_input(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw CapabilityError("exact lettering search is limited to " + std::to_string(bound) +
                          " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  if (g.order() == 0) throw DomainError("exact lettering search needs at least one vertex");
}

// Every relabelling of `w` by a permutation of 1..k.
std::vector<LetteringWitness> relabelings(const LetteringWitness& w, int k) {
  std::vector<Letter> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<LetteringWitness> out;
  do {
    std::vector<Letter> letters;
    for (Letter a : w.lettering.word().letters()) letters.push_back(perm[a - 1]);
    Decoder decoder(k);
    for (const LetterPair& p : w.lettering.decoder().pairs()) {
      decoder.insert(perm[p.first - 1], perm[p.second - 1]);
    }
    out.push_back({Lettering(Word(std::move(letters)), std::move(decoder)),
                   w.vertex_of_position});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

std::optional<LetteringWitness> is_k_letterable(const Graph& g, int k) {
  check_solver_input(g, kMaxSolverVertices);
  if (k < 0) throw DomainError("k must be non-negative");
  if (k == 0) return std::nullopt;
  k = std::min(k, g.order());

  std::optional<LetteringWitness> found;
  LetteringSearch search(g, k);
  search.run(false, [&](const LetteringSearch& s) {
    found = s.witness();
    return false;
  });
  return found;
}

LettericityResult lettericity_exact(const Graph& g) {
  check_solver_input(g, kMaxSolverVertices);
  for (int k = 1; k <= g.order(); ++k) {
    if (auto witness = is_k_letterable(g, k)) return {k, std::move(*witness)};
  }
  // Distinct letters with D = E always works at k = n.
  throw Error("lettericity_exact: no lettering found with n letters");
}

Enumeration enumerate_letterings(const Graph& g, int k, EnumerationOptions options) {
  check_solver_input(g, kMaxEnumerationVertices);
  if (k < 1 || k > g.order()) {
    throw DomainError("enumerate_letterings requires 1 <= k <= |V(g)| (k=" +
                      std::to_string(k) + ")");
  }
  const std::size_t per_word =
      options.convention == WordConvention::kFixedAlphabet ? factorial(k) : 1;

  std::map<std::vector<Letter>, LetteringWitness> canonical;
  bool truncated = false;
  LetteringSearch search(g, k);
  search.run(true, [&](const LetteringSearch& s) {
    std::vector<Letter> word = s.word();
    if (canonical.contains(word)) return true;
    if (options.limit && canonical.size() * per_word >= *options.limit) {
      truncated = true;
      return false;
    }
    canonical.emplace(std::move(word), s.witness());
    return true;
  });

  Enumeration result;
  result.truncated = truncated;
  for (auto& [word, witness] : canonical) {
    if (options.convention == WordConvention::kFixedAlphabet) {
      for (auto& w : relabelings(witness, k)) result.witnesses.push_back(std::move(w));
    } else {
      result.witnesses.push_back(std::move(witness));
    }
  }
  if (options.convention == WordConvention::kFixedAlphabet) {
    std::sort(result.witnesses.begin(), result.witnesses.end(),
              [](const LetteringWitness& a, const LetteringWitness& b) {
                return a.lettering.word() < b.lettering.word();
              });
  }
  if (options.limit && result.witnesses.size() > *options.limit) {
    result.witnesses.resize(*options.limit);
    result.truncated = true;
  }
  return result;
}

}  // namespace lettergraph
