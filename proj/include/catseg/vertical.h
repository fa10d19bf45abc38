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

#ifndef CATSEG_VERTICAL_H_
#define CATSEG_VERTICAL_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catseg/document.h"

namespace catseg {

// Tagged text in the vertical format:
//
//   # key = value            metadata line ("# " prefix)
//   FORM<TAB>LEMMA<TAB>TAG    one token per line
//                             blank line ends a sentence
struct VerticalDocument {
  // Metadata comments in file order. A comment without " = " has an empty
  // value and the whole comment text as key.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<Sentence> sentences;

  bool operator==(const VerticalDocument &other) const = default;
};

// Throws ParseError (with 1-based line number) on a token line that does
// not have exactly three non-empty tab-separated fields, and on input that
// holds no tokens.
VerticalDocument ParseVertical(std::string_view text);

// Inverse of ParseVertical. Chunks are not serialized.
std::string SerializeVertical(const VerticalDocument &doc);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string ReadFile(const std::string &path);

}  // namespace catseg

#endif  // CATSEG_VERTICAL_H_
