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

#ifndef LETTERGRAPH_ERRORS_HPP_
#define LETTERGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lettergraph {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (out of range, wrong size...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A word uses a letter that the decoder's alphabet does not contain.
class InvalidLettering : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed text input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what
                             : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// The request is well-formed but exceeds a desk-scale bound of an exact
// algorithm (isomorphism, exhaustive search, enumeration).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lettergraph

#endif  // LETTERGRAPH_ERRORS_HPP_
