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

#ifndef CATSEG_LEXICON_H_
#define CATSEG_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catseg/document.h"

namespace catseg {

enum class Language { kCatalan, kSpanish };

std::string_view LanguageCode(Language language);
// "ca" or "es"; throws ConfigError otherwise.
Language ParseLanguage(std::string_view code);

enum class AmbiguityClass { kNonAmbiguous, kAmbiguous };

// A (possibly multiword) discourse marker.
struct MarkerEntry {
  // Lowercased surface forms.
  std::vector<std::string> pattern;
  AmbiguityClass ambiguity = AmbiguityClass::kNonAmbiguous;
  // Name of the guard that confirms an ambiguous marker; unset for
  // non-ambiguous ones.
  std::optional<std::string> context_rule;
  Language language = Language::kCatalan;

  std::string_view category_label() const {
    return ambiguity == AmbiguityClass::kAmbiguous ? kAmbiguousDiscourseMarker
                                                   : kDiscourseMarker;
  }
  std::string PatternText() const;

  bool operator==(const MarkerEntry &other) const = default;
};

// Throws ValidationError if the entry breaks its own invariants.
void ValidateEntry(const MarkerEntry &entry);

// Immutable, validated set of markers with no duplicate (pattern, language)
// pairs.
class Lexicon {
 public:
  Lexicon() = default;
  // Throws ValidationError on an invalid entry or a duplicate.
  explicit Lexicon(std::vector<MarkerEntry> entries);

  const std::vector<MarkerEntry> &entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int num_ambiguous() const { return num_ambiguous_; }
  int num_non_ambiguous() const { return size() - num_ambiguous_; }
  int max_pattern_length() const { return max_pattern_length_; }

  // Index of the first entry with exactly this pattern (space-joined,
  // lowercase), optionally restricted to a language; -1 if absent.
  int Find(const std::string &pattern_text,
           std::optional<Language> language = std::nullopt) const;

  bool operator==(const Lexicon &other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<MarkerEntry> entries_;
  std::unordered_map<std::string, std::vector<int>> by_pattern_;
  int num_ambiguous_ = 0;
  int max_pattern_length_ = 0;
};

// Lexicon TSV: PATTERN<TAB>CLASS<TAB>CONTEXT_RULE<TAB>LANG, CLASS in
// {mk, mk-amb}, CONTEXT_RULE an identifier or "-", LANG in {ca, es}; lines
// starting with '#' and blank lines are ignored. Throws ParseError for
// malformed lines and ValidationError (naming the line) for duplicates and
// class/context mismatches.
Lexicon ParseLexicon(std::string_view text);
Lexicon LoadLexicon(const std::string &path);
std::string SerializeLexicon(const Lexicon &lexicon);

struct MarkerMatch {
  int sentence = 0;
  Span span;
  MarkerEntry entry;
  // True when the match is known to act as a discourse marker. Always true
  // for non-ambiguous entries; set by Disambiguate for ambiguous ones.
  bool resolved = false;

  bool operator==(const MarkerMatch &other) const = default;
};

// Leftmost-longest, non-overlapping, case-insensitive matching on forms.
std::vector<MarkerMatch> MatchMarkers(
    const Sentence &sentence, const Lexicon &lexicon, int sentence_index = 0,
    std::optional<Language> language = std::nullopt);

// Evaluates the entry's context guard over the whole sentence and returns
// the match with `resolved` set accordingly. Throws ValidationError for a
// non-ambiguous entry and ConfigError for an unknown guard name.
MarkerMatch Disambiguate(const MarkerMatch &match, const Sentence &sentence);

}  // namespace catseg

#endif  // CATSEG_LEXICON_H_
