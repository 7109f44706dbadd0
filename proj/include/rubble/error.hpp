// Copyright 2026 The rubble Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rubble {

// Bad input: out-of-range parameters, illegal moves, invalid partitions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A (family, quantity) pair with no known closed form.
class NoFormula : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant (generator table bug, smoothing cap exceeded,
// witness failing re-validation).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rubble
