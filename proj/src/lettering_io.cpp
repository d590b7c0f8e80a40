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

#include "lettergraph/lettering_io.hpp"

#include <charconv>

#include "lettergraph/errors.hpp"

namespace lettergraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
}

int parse_positive(std::string_view token, int line, const char* what) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  if (value < 1) {
    throw ParseError(line, std::string(what) + " must be at least 1, got " +
                               std::to_string(value));
  }
  return value;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::vector<Letter> parse_word_line(std::string_view text, std::optional<int> max_alphabet,
                                    int line) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.empty()) return letters;
  const bool compact = text.find(',') == std::string_view::npos && text.size() > 1 &&
                       all_digits(text) && (!max_alphabet || *max_alphabet <= 9);
  if (compact) {
    for (char c : text) {
      if (c == '0') throw ParseError(line, "letter ids start at 1, got 0");
      letters.push_back(c - '0');
    }
    return letters;
  }
  for (std::string_view token : split(text, ',')) {
    letters.push_back(parse_positive(token, line, "letter"));
  }
  return letters;
}

std::vector<LetterPair> parse_decoder_line(std::string_view text, int line) {
  text = trim(text);
  std::vector<LetterPair> pairs;
  if (text.empty()) return pairs;
  for (std::string_view token : split(text, ',')) {
    const auto parts = split(token, ':');
    if (parts.size() != 2) {
      throw ParseError(line, "decoder pair '" + std::string(trim(token)) +
                                 "' is not of the form a:b");
    }
    pairs.push_back({parse_positive(parts[0], line, "letter"),
                     parse_positive(parts[1], line, "letter")});
  }
  return pairs;
}

// Splits "tag rest" and checks the tag.
std::string_view expect_tag(std::string_view line, char tag, int line_number) {
  line = trim(line);
  if (line.empty() || line.front() != tag ||
      (line.size() > 1 && line[1] != ' ' && line[1] != '\t')) {
    throw ParseError(line_number, std::string("expected a line starting with '") + tag + "'");
  }
  return line.substr(1);
}

}  // namespace

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_decoder(const Decoder& decoder) {
  std::string out;
  for (const LetterPair& p : decoder.pairs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p.first) + ":" + std::to_string(p.second);
  }
  return out;
}

std::string serialize_lettering(const Lettering& lettering) {
  const std::string word = format_word(lettering.word());
  const std::string decoder = format_decoder(lettering.decoder());
  std::string out = "k " + std::to_string(lettering.decoder().alphabet_size());
  out += word.empty() ? "\nw" : "\nw " + word;
  out += decoder.empty() ? "\nD" : "\nD " + decoder;
  return out;
}

Lettering parse_lettering(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.size() != 3) {
    throw ParseError(0, "a lettering has exactly three lines (k, w, D), got " +
                            std::to_string(lines.size()));
  }
  const std::string_view k_text = trim(expect_tag(lines[0], 'k', 1));
  int k = 0;
  auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
  if (k_text.empty() || ec != std::errc() || ptr != k_text.data() + k_text.size() || k < 0) {
    throw ParseError(1, "malformed alphabet size '" + std::string(k_text) + "'");
  }
  std::vector<Letter> letters = parse_word_line(expect_tag(lines[1], 'w', 2), k, 2);
  std::vector<LetterPair> pairs = parse_decoder_line(expect_tag(lines[2], 'D', 3), 3);
  for (const LetterPair& p : pairs) {
    if (p.first > k || p.second > k) {
      throw ParseError(3, "decoder pair " + std::to_string(p.first) + ":" +
                              std::to_string(p.second) + " exceeds k=" + std::to_string(k));
    }
  }
  for (Letter a : letters) {
    if (a > k) {
      throw ParseError(2, "letter " + std::to_string(a) + " exceeds k=" + std::to_string(k));
    }
  }
  return Lettering(Word(std::move(letters)), Decoder(k, pairs));
}

std::vector<Letter> parse_word_spec(std::string_view text, std::optional<int> max_alphabet) {
  return parse_word_line(text, max_alphabet, 0);
}

std::vector<LetterPair> parse_decoder_spec(std::string_view text) {
  return parse_decoder_line(text, 0);
}

}  // namespace lettergraph
