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

#ifndef CATSEG_SEGMENTER_H_
#define CATSEG_SEGMENTER_H_

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "catseg/document.h"
#include "catseg/lexicon.h"
#include "catseg/rules.h"
#include "catseg/vertical.h"

namespace catseg {

// Stage 1. Runs marker matching and disambiguation and covers every
// confirmed marker with a disc-mk (non-ambiguous) or disc-mk-amb chunk.
// Existing chunks overlapping a marker are replaced; tokens are untouched.
Sentence Recategorize(const Sentence &sentence, const Lexicon &lexicon);
VerticalDocument Recategorize(const VerticalDocument &doc,
                              const Lexicon &lexicon);

// Trigger occurrences of `trigger` in a sentence. Lemma and bracket
// triggers skip tokens covered by a marker chunk.
std::vector<Span> FindTriggers(const Trigger &trigger,
                               const SentenceFacts &facts);

// One rule that put a boundary at a gap.
struct Firing {
  int sentence = 0;
  int gap = 0;
  std::string rule;
  int priority = 0;
  Span trigger;
  int pass = 0;

  bool operator==(const Firing &other) const = default;
};

// Running state of boundary detection across passes.
struct DetectionState {
  BoundarySet boundaries;
  std::vector<Firing> trace;
  // (sentence, rule index, trigger start) of triggers that already fired.
  std::set<std::tuple<int, int, int>> consumed;
  int passes = 0;
};

DetectionState StartDetection(const std::vector<Sentence> &sentences);

// Stage 2, one pass. Every segment of the current boundary set is scanned
// as its own extent: guards only see tokens inside it and a gap on its edge
// is not a new boundary. Rules fire in priority order, ties broken by
// trigger position and then by file order; a gap is credited to the first
// rule that reaches it, and a trigger fires at most once across passes.
// Returns the number of boundaries added.
int RunBoundaryPass(const std::vector<Sentence> &sentences,
                    const RuleSet &rules, DetectionState *state);

// Stage 2: two passes, the second finding sub-EDU boundaries inside the
// segments found by the first. Sentences must already be recategorized.
DetectionState DetectBoundariesTraced(const std::vector<Sentence> &sentences,
                                      const RuleSet &rules);
BoundarySet DetectBoundaries(const VerticalDocument &doc, const RuleSet &rules);

// Removes gaps until every segment holds a verb: a verbless segment joins
// its left neighbour, or its right one when it starts the sentence. A
// sentence without verbs ends up as one segment.
std::set<int> MergeVerblessSegments(const Sentence &sentence,
                                    std::set<int> gaps);

// Stage 3.
SegmentedDocument FormEdus(const std::vector<Sentence> &sentences,
                           const BoundarySet &boundaries);
SegmentedDocument FormEdus(const VerticalDocument &doc,
                           const BoundarySet &boundaries);

struct SegmentationResult {
  SegmentedDocument document;
  // Firings from stage 2, including boundaries later dropped by stage 3.
  std::vector<Firing> trace;
};

// The whole pipeline.
SegmentationResult SegmentTraced(const VerticalDocument &doc,
                                 const Lexicon &lexicon, const RuleSet &rules);
SegmentedDocument Segment(const VerticalDocument &doc, const Lexicon &lexicon,
                          const RuleSet &rules);

}  // namespace catseg

#endif  // CATSEG_SEGMENTER_H_
