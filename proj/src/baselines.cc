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

#include "catseg/baselines.h"

namespace catseg {

SegmentedDocument CoordinationBaseline(const VerticalDocument &doc) {
  BoundarySet boundaries(SentenceLengths(doc.sentences));
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    for (int i = 1; i < sentence.size(); ++i) {
      if (IsCoordinatingConjunctionTag(sentence.tokens[i].tag)) {
        boundaries.Insert(s, i);
      }
    }
  }
  return SegmentedDocument(doc.sentences, std::move(boundaries));
}

SegmentedDocument SentenceBaseline(const VerticalDocument &doc) {
  return SegmentedDocument(doc.sentences,
                           BoundarySet(SentenceLengths(doc.sentences)));
}

}  // namespace catseg
