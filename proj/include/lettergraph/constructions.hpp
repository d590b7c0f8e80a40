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

#ifndef LETTERGRAPH_CONSTRUCTIONS_HPP_
#define LETTERGRAPH_CONSTRUCTIONS_HPP_

#include "lettergraph/lettering.hpp"

namespace lettergraph {

// floor((n + 4) / 3), the lettericity of the path on n >= 3 vertices.
// Throws DomainError for n < 3: P_1 and P_2 both have lettericity 1, which
// the formula gets wrong at n = 2.
int lettericity_formula(int n);

// Optimal lettering of P_n for n >= 3, over exactly lettericity_formula(n)
// letters.
//
// With r = ceil((n - 1) / 3) the base word on 3r + 1 positions is
//
//   2 1 | 3 2 1 | 4 3 2 | ... | (r+1) r (r-1) | (r+1) r
//
// under the decoder {(j+1, j) : 1 <= j <= r}, and decodes to P_{3r+1}. For
// n = 3r the first 1 is dropped; for n = 3r - 1 the last r+1 is dropped too.
// The result is decoded and checked with is_path() before it is returned.
Lettering path_lettering(int n);

// Word (2,1)(3,2)...(r+1,r) with decoder {(j+1, j)}: rK_2 over r + 1 letters,
// pair j at positions 2j-1 and 2j.
Lettering matching_base_lettering(int r);

// Word 1,1,2,2,...,r,r with decoder {(a, a)}: rK_2 over r letters, each
// letter encoding one edge.
Lettering matching_canonical_lettering(int r);

}  // namespace lettergraph

#endif  // LETTERGRAPH_CONSTRUCTIONS_HPP_
