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

#ifndef CATSEG_GOLD_H_
#define CATSEG_GOLD_H_

#include <string>
#include <string_view>
#include <vector>

#include "catseg/document.h"
#include "catseg/vertical.h"

namespace catseg {

// A flat bracketed segmentation, one sentence per line:
//
//   [Té un cost baix ,] [és massiva i de fàcil aplicació .]
//
// resolved against the tokens of a tagged document.
struct GoldAnnotation {
  // Per sentence, the text inside each bracket pair.
  std::vector<std::vector<std::string>> segments;
  // Per sentence, the token forms the brackets were aligned to.
  std::vector<std::vector<std::string>> forms;
  BoundarySet boundaries;
};

// Throws ParseError for unbalanced, nested or empty brackets and for text
// outside brackets; AlignmentError when the bracket tokens (whitespace
// split) differ from the sentence forms or the sentence counts differ.
GoldAnnotation ParseGold(std::string_view text,
                         const std::vector<Sentence> &sentences);
GoldAnnotation ParseGold(std::string_view text, const VerticalDocument &doc);

// Pairs a gold annotation with the sentences it was parsed against.
SegmentedDocument ToSegmentedDocument(const VerticalDocument &doc,
                                      const GoldAnnotation &gold);

// Gold view of an already segmented document.
GoldAnnotation ToGoldAnnotation(const SegmentedDocument &doc);

enum class SegmentFormat { kBrackets, kStandoff };

// kBrackets: the gold format above. kStandoff: one line per sentence,
// "SENT_INDEX<TAB>g1,g2,..." with an empty list for unsplit sentences.
// Throws ValidationError in bracket format when a form contains a bracket
// or whitespace, since it could not be read back.
std::string SerializeSegments(const SegmentedDocument &doc,
                              SegmentFormat format);

}  // namespace catseg

#endif  // CATSEG_GOLD_H_
