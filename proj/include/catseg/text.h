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

#ifndef CATSEG_TEXT_H_
#define CATSEG_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace catseg {

// Lowercases ASCII and the Latin-1 / Latin Extended-A letters used by
// Catalan and Spanish (À..Þ, Ŀ, Ç, Ñ, ...). Other code points pass through.
std::string ToLower(std::string_view text);

// Splits on runs of ASCII whitespace; never returns empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on every occurrence of `sep`; keeps empty pieces.
std::vector<std::string> Split(std::string_view text, char sep);

std::string_view Trim(std::string_view text);

std::string Join(const std::vector<std::string> &pieces, std::string_view sep);

// Splits text into lines on '\n', dropping one trailing '\r' per line. A
// final newline does not produce an extra empty line.
std::vector<std::string> SplitLines(std::string_view text);

}  // namespace catseg

#endif  // CATSEG_TEXT_H_
