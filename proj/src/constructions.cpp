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

#include <algorithm>
#include <string>
#include <vector>

#include "lettergraph/errors.hpp"

namespace lettergraph {

namespace {

// {(j+1, j) : 1 <= j <= r} over letters 1..r+1.
Decoder chain_decoder(int r) {
  Decoder d(r + 1);
  for (Letter j = 1; j <= r; ++j) d.insert(j + 1, j);
  return d;
}

}  // namespace

int lettericity_formula(int n) {
  if (n < 3) {
    throw DomainError("lettericity_formula holds for n >= 3 only (got n=" +
                      std::to_string(n) + "); P_1 and P_2 have lettericity 1");
  }
  return (n + 4) / 3;
}

Lettering path_lettering(int n) {
  if (n < 3) {
    throw DomainError("path_lettering requires n >= 3 (got n=" + std::to_string(n) +
                      "); P_1 is word 1 with D={}, P_2 is word 1,1 with D={1:1}");
  }
  const int r = (n - 1 + 2) / 3;

  std::vector<Letter> letters{2, 1};
  for (Letter j = 2; j <= r; ++j) {
    letters.insert(letters.end(), {j + 1, j, j - 1});
  }
  letters.insert(letters.end(), {r + 1, r});

  if (n <= 3 * r) {
    letters.erase(std::find(letters.begin(), letters.end(), 1));
  }
  if (n <= 3 * r - 1) {
    auto last = std::find(letters.rbegin(), letters.rend(), r + 1);
    letters.erase(std::next(last).base());
  }

  Lettering lettering(Word(std::move(letters)), chain_decoder(r));
  const Graph decoded = decode(lettering);
  if (decoded.order() != n || !is_path(decoded) ||
      lettering.letter_count() != lettericity_formula(n)) {
    throw Error("path_lettering(" + std::to_string(n) +
                ") produced a word that does not decode to an optimal path lettering");
  }
  return lettering;
}

Lettering matching_base_lettering(int r) {
  if (r < 1) throw DomainError("matching_base_lettering requires r >= 1");
  std::vector<Letter> letters;
  letters.reserve(2 * static_cast<std::size_t>(r));
  for (Letter j = 1; j <= r; ++j) letters.insert(letters.end(), {j + 1, j});
  return Lettering(Word(std::move(letters)), chain_decoder(r));
}

Lettering matching_canonical_lettering(int r) {
  if (r < 1) throw DomainError("matching_canonical_lettering requires r >= 1");
  std::vector<Letter> letters;
  letters.reserve(2 * static_cast<std::size_t>(r));
  Decoder d(r);
  for (Letter a = 1; a <= r; ++a) {
    letters.insert(letters.end(), {a, a});
    d.insert(a, a);
  }
  return Lettering(Word(std::move(letters)), d);
}

}  // namespace lettergraph
