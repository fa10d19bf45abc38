// Copyright 2026 The catseg Authors.
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

#ifndef CATSEG_ERROR_H_
#define CATSEG_ERROR_H_

#include <stdexcept>
#include <string>

namespace catseg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed input text. line() is 1-based, or 0 when the error is not tied
// to a particular line.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Two inputs that should describe the same token sequence do not.
class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string &what) : Error(what) {}
};

// Lexicon, rule or map content that is well formed but cannot be used,
// e.g. an unknown guard identifier.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &what) : Error(what) {}
};

// A value violates a data-model invariant or an operation's precondition.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &what) : Error(what) {}
};

}  // namespace catseg

#endif  // CATSEG_ERROR_H_
