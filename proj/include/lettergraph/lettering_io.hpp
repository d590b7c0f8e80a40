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

#ifndef LETTERGRAPH_LETTERING_IO_HPP_
#define LETTERGRAPH_LETTERING_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lettergraph/lettering.hpp"

namespace lettergraph {

// Text form of a lettering, three lines:
//
//   k 3
//   w 2,1,3,2,1,3,2
//   D 2:1,3:2
//
// Decoder pairs are written in lexicographic order. An empty word or decoder
// leaves its line as the bare tag ("w" / "D"). No trailing newline.
std::string serialize_lettering(const Lettering& lettering);

// Inverse of serialize_lettering(). Also accepts the compact digit form of
// the word ("w 2132132") when k <= 9, a trailing space after a bare tag, and
// a trailing newline.
Lettering parse_lettering(std::string_view text);

// Letters of a word given as "2,1,3,2" or, when `max_alphabet` permits
// single-digit letters (<= 9, or unknown), as compact digits "2132".
std::vector<Letter> parse_word_spec(std::string_view text,
                                    std::optional<int> max_alphabet = std::nullopt);

// Decoder pairs given as "a:b,c:d"; the empty string is the empty decoder.
std::vector<LetterPair> parse_decoder_spec(std::string_view text);

std::string format_word(const Word& word);
std::string format_decoder(const Decoder& decoder);

}  // namespace lettergraph

#endif  // LETTERGRAPH_LETTERING_IO_HPP_
