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

#ifndef CATSEG_DOCUMENT_H_
#define CATSEG_DOCUMENT_H_

#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace catseg {

// Half-open token range [begin, end) within one sentence.
struct Span {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool Contains(int index) const { return index >= begin && index < end; }
  bool operator==(const Span &other) const = default;
  auto operator<=>(const Span &other) const = default;
};

// One token of tagged text. `tag` is a positional EAGLES-style tag: char 0
// is the category (V verb, C conjunction, S adposition, F punctuation, ...)
// and, for verbs, char 2 is the mood (I/S/M finite, N/G/P non-finite).
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string tag;

  bool operator==(const Token &other) const = default;
};

// Chunk labels produced by marker recategorization.
inline constexpr std::string_view kDiscourseMarker = "disc-mk";
inline constexpr std::string_view kAmbiguousDiscourseMarker = "disc-mk-amb";

bool IsMarkerLabel(std::string_view label);

// A labeled span of the flat chunk layer.
struct ChunkNode {
  std::string label;
  Span span;

  bool operator==(const ChunkNode &other) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<ChunkNode> chunks;

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence &other) const = default;
};

// Throws ValidationError if token indices are not 0..n-1, a token field is
// empty, or chunks are out of bounds, empty, overlapping or unordered.
void ValidateSentence(const Sentence &sentence);

// Builds a sentence from parallel (form, lemma, tag) triples. Indices are
// assigned in order; lemmas are lowercased.
Sentence MakeSentence(
    const std::vector<std::tuple<std::string, std::string, std::string>>
        &triples);

// Tag predicates.
bool IsVerbTag(std::string_view tag);
bool IsFiniteVerbTag(std::string_view tag);
bool IsNonFiniteVerbTag(std::string_view tag);
bool IsCoordinatingConjunctionTag(std::string_view tag);
bool IsPunctuationTag(std::string_view tag);

// Intra-sentence boundaries for a sequence of sentences. A gap g in sentence
// s means a boundary between tokens g-1 and g, so valid gaps are
// 1..length-1; sentence edges are implicit boundaries and never stored.
class BoundarySet {
 public:
  BoundarySet() = default;
  explicit BoundarySet(std::vector<int> sentence_lengths);

  // Throws ValidationError when the gap is out of range. Returns false if
  // the gap was already present.
  bool Insert(int sentence, int gap);
  bool Erase(int sentence, int gap);
  bool Contains(int sentence, int gap) const;

  const std::set<int> &gaps(int sentence) const;
  int num_sentences() const { return static_cast<int>(gaps_.size()); }
  int sentence_length(int sentence) const;
  const std::vector<int> &sentence_lengths() const { return lengths_; }
  // Total number of intra-sentence boundaries.
  int size() const;

  bool operator==(const BoundarySet &other) const = default;

 private:
  void CheckSentence(int sentence) const;

  std::vector<int> lengths_;
  std::vector<std::set<int>> gaps_;
};

// Maximal spans of [0, length) between consecutive gaps.
std::vector<Span> SpansBetween(const std::set<int> &gaps, int length);

// Sentences plus their segmentation. Segments are flat and tile each
// sentence.
class SegmentedDocument {
 public:
  SegmentedDocument() = default;
  // Throws ValidationError if `boundaries` does not describe `sentences`.
  SegmentedDocument(std::vector<Sentence> sentences, BoundarySet boundaries);

  const std::vector<Sentence> &sentences() const { return sentences_; }
  const BoundarySet &boundaries() const { return boundaries_; }
  int num_sentences() const { return static_cast<int>(sentences_.size()); }

  std::vector<Span> Segments(int sentence) const;
  int num_segments() const;

 private:
  std::vector<Sentence> sentences_;
  BoundarySet boundaries_;
};

// Lengths of each sentence, for sizing a BoundarySet.
std::vector<int> SentenceLengths(const std::vector<Sentence> &sentences);

// One row of the corpus statistics table.
struct CountStats {
  int total = 0;
  int max_per_text = 0;
  int min_per_text = 0;
  double average = 0.0;  // total / number of texts
};

struct CorpusStats {
  int num_texts = 0;
  // Words are non-punctuation tokens.
  CountStats words;
  CountStats tokens;
  CountStats sentences;
  CountStats segments;
};

// Throws ValidationError("empty corpus") for an empty corpus.
CorpusStats ComputeCorpusStats(const std::vector<SegmentedDocument> &corpus);

}  // namespace catseg

#endif  // CATSEG_DOCUMENT_H_
