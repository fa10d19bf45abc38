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

#include "catseg/document.h"

#include <algorithm>
#include <limits>
#include <tuple>

#include "catseg/error.h"
#include "catseg/text.h"

namespace catseg {

bool IsMarkerLabel(std::string_view label) {
  return label == kDiscourseMarker || label == kAmbiguousDiscourseMarker;
}

void ValidateSentence(const Sentence &sentence) {
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token &token = sentence.tokens[i];
    if (token.index != static_cast<int>(i)) {
      throw ValidationError("token index " + std::to_string(token.index) +
                            " at position " + std::to_string(i));
    }
    if (token.form.empty() || token.lemma.empty() || token.tag.empty()) {
      throw ValidationError("token " + std::to_string(i) +
                            " has an empty field");
    }
  }
  int previous_end = 0;
  for (const ChunkNode &chunk : sentence.chunks) {
    if (chunk.span.begin >= chunk.span.end || chunk.span.begin < 0 ||
        chunk.span.end > sentence.size()) {
      throw ValidationError("chunk '" + chunk.label + "' has invalid span");
    }
    if (chunk.span.begin < previous_end) {
      throw ValidationError("chunk '" + chunk.label +
                            "' overlaps or precedes the previous chunk");
    }
    previous_end = chunk.span.end;
  }
}

Sentence MakeSentence(
    const std::vector<std::tuple<std::string, std::string, std::string>>
        &triples) {
  Sentence sentence;
  for (const auto &[form, lemma, tag] : triples) {
    sentence.tokens.push_back(
        Token{sentence.size(), form, ToLower(lemma), tag});
  }
  return sentence;
}

bool IsVerbTag(std::string_view tag) { return !tag.empty() && tag[0] == 'V'; }

bool IsFiniteVerbTag(std::string_view tag) {
  return IsVerbTag(tag) && tag.size() > 2 &&
         (tag[2] == 'I' || tag[2] == 'S' || tag[2] == 'M');
}

bool IsNonFiniteVerbTag(std::string_view tag) {
  return IsVerbTag(tag) && tag.size() > 2 &&
         (tag[2] == 'N' || tag[2] == 'G' || tag[2] == 'P');
}

bool IsCoordinatingConjunctionTag(std::string_view tag) {
  return tag.size() >= 2 && tag[0] == 'C' && tag[1] == 'C';
}

bool IsPunctuationTag(std::string_view tag) {
  return !tag.empty() && tag[0] == 'F';
}

BoundarySet::BoundarySet(std::vector<int> sentence_lengths)
    : lengths_(std::move(sentence_lengths)), gaps_(lengths_.size()) {}

void BoundarySet::CheckSentence(int sentence) const {
  if (sentence < 0 || sentence >= num_sentences()) {
    throw ValidationError("sentence index " + std::to_string(sentence) +
                          " out of range");
  }
}

bool BoundarySet::Insert(int sentence, int gap) {
  CheckSentence(sentence);
  if (gap < 1 || gap >= lengths_[sentence]) {
    throw ValidationError("gap " + std::to_string(gap) +
                          " out of range for sentence " +
                          std::to_string(sentence) + " of length " +
                          std::to_string(lengths_[sentence]));
  }
  return gaps_[sentence].insert(gap).second;
}

bool BoundarySet::Erase(int sentence, int gap) {
  CheckSentence(sentence);
  return gaps_[sentence].erase(gap) > 0;
}

bool BoundarySet::Contains(int sentence, int gap) const {
  CheckSentence(sentence);
  return gaps_[sentence].count(gap) > 0;
}

const std::set<int> &BoundarySet::gaps(int sentence) const {
  CheckSentence(sentence);
  return gaps_[sentence];
}

int BoundarySet::sentence_length(int sentence) const {
  CheckSentence(sentence);
  return lengths_[sentence];
}

int BoundarySet::size() const {
  int total = 0;
  for (const auto &g : gaps_) total += static_cast<int>(g.size());
  return total;
}

std::vector<Span> SpansBetween(const std::set<int> &gaps, int length) {
  std::vector<Span> spans;
  if (length == 0) return spans;
  int begin = 0;
  for (int gap : gaps) {
    spans.push_back({begin, gap});
    begin = gap;
  }
  spans.push_back({begin, length});
  return spans;
}

std::vector<int> SentenceLengths(const std::vector<Sentence> &sentences) {
  std::vector<int> lengths;
  lengths.reserve(sentences.size());
  for (const Sentence &s : sentences) lengths.push_back(s.size());
  return lengths;
}

SegmentedDocument::SegmentedDocument(std::vector<Sentence> sentences,
                                     BoundarySet boundaries)
    : sentences_(std::move(sentences)), boundaries_(std::move(boundaries)) {
  if (boundaries_.sentence_lengths() != SentenceLengths(sentences_)) {
    throw ValidationError(
        "boundary set does not match the document's sentence lengths");
  }
  for (const Sentence &s : sentences_) {
    if (s.tokens.empty()) throw ValidationError("empty sentence");
    ValidateSentence(s);
  }
}

std::vector<Span> SegmentedDocument::Segments(int sentence) const {
  return SpansBetween(boundaries_.gaps(sentence),
                      boundaries_.sentence_length(sentence));
}

int SegmentedDocument::num_segments() const {
  return num_sentences() + boundaries_.size();
}

namespace {

CountStats Summarize(const std::vector<int> &per_text) {
  CountStats stats;
  stats.max_per_text = std::numeric_limits<int>::min();
  stats.min_per_text = std::numeric_limits<int>::max();
  for (int n : per_text) {
    stats.total += n;
    stats.max_per_text = std::max(stats.max_per_text, n);
    stats.min_per_text = std::min(stats.min_per_text, n);
  }
  stats.average = static_cast<double>(stats.total) / per_text.size();
  return stats;
}

}  // namespace

CorpusStats ComputeCorpusStats(const std::vector<SegmentedDocument> &corpus) {
  if (corpus.empty()) throw ValidationError("empty corpus");
  std::vector<int> words, tokens, sentences, segments;
  for (const SegmentedDocument &doc : corpus) {
    int w = 0;
    int t = 0;
    for (const Sentence &s : doc.sentences()) {
      for (const Token &token : s.tokens) {
        ++t;
        if (!IsPunctuationTag(token.tag)) ++w;
      }
    }
    words.push_back(w);
    tokens.push_back(t);
    sentences.push_back(doc.num_sentences());
    segments.push_back(doc.num_segments());
  }
  CorpusStats stats;
  stats.num_texts = static_cast<int>(corpus.size());
  stats.words = Summarize(words);
  stats.tokens = Summarize(tokens);
  stats.sentences = Summarize(sentences);
  stats.segments = Summarize(segments);
  return stats;
}

}  // namespace catseg
