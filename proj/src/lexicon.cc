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

#include "catseg/lexicon.h"

#include <algorithm>
#include <set>
#include <utility>

#include "catseg/error.h"
#include "catseg/guard.h"
#include "catseg/text.h"
#include "catseg/vertical.h"

namespace catseg {

std::string_view LanguageCode(Language language) {
  return language == Language::kSpanish ? "es" : "ca";
}

Language ParseLanguage(std::string_view code) {
  if (code == "ca") return Language::kCatalan;
  if (code == "es") return Language::kSpanish;
  throw ConfigError("unknown language '" + std::string(code) + "'");
}

std::string MarkerEntry::PatternText() const { return Join(pattern, " "); }

void ValidateEntry(const MarkerEntry &entry) {
  if (entry.pattern.empty()) throw ValidationError("empty marker pattern");
  for (const std::string &form : entry.pattern) {
    if (form.empty() || form != ToLower(form) ||
        form.find_first_of(" \t") != std::string::npos) {
      throw ValidationError("marker '" + entry.PatternText() +
                            "' has a malformed form '" + form + "'");
    }
  }
  if (entry.ambiguity == AmbiguityClass::kAmbiguous && !entry.context_rule) {
    throw ValidationError("ambiguous marker '" + entry.PatternText() +
                          "' has no context rule");
  }
  if (entry.ambiguity == AmbiguityClass::kNonAmbiguous && entry.context_rule) {
    throw ValidationError("non-ambiguous marker '" + entry.PatternText() +
                          "' has a context rule");
  }
}

Lexicon::Lexicon(std::vector<MarkerEntry> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    const MarkerEntry &entry = entries_[i];
    ValidateEntry(entry);
    std::vector<int> &bucket = by_pattern_[entry.PatternText()];
    for (int other : bucket) {
      if (entries_[other].language == entry.language) {
        throw ValidationError("duplicate marker '" + entry.PatternText() +
                              "' (" + std::string(LanguageCode(entry.language)) +
                              ")");
      }
    }
    bucket.push_back(static_cast<int>(i));
    if (entry.ambiguity == AmbiguityClass::kAmbiguous) ++num_ambiguous_;
    max_pattern_length_ =
        std::max(max_pattern_length_, static_cast<int>(entry.pattern.size()));
  }
}

int Lexicon::Find(const std::string &pattern_text,
                  std::optional<Language> language) const {
  auto it = by_pattern_.find(pattern_text);
  if (it == by_pattern_.end()) return -1;
  for (int index : it->second) {
    if (!language || entries_[index].language == *language) return index;
  }
  return -1;
}

Lexicon ParseLexicon(std::string_view text) {
  std::vector<MarkerEntry> entries;
  std::set<std::pair<std::string, Language>> seen;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i) + 1;
    const std::string &line = lines[i];
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError("expected 4 tab-separated fields, found " +
                           std::to_string(fields.size()),
                       line_number);
    }
    MarkerEntry entry;
    entry.pattern = SplitWhitespace(ToLower(fields[0]));
    if (fields[1] == "mk") {
      entry.ambiguity = AmbiguityClass::kNonAmbiguous;
    } else if (fields[1] == "mk-amb") {
      entry.ambiguity = AmbiguityClass::kAmbiguous;
    } else {
      throw ParseError("unknown class '" + fields[1] + "'", line_number);
    }
    if (fields[2].empty()) throw ParseError("empty context rule", line_number);
    if (fields[2] != "-") entry.context_rule = fields[2];
    try {
      entry.language = ParseLanguage(fields[3]);
    } catch (const ConfigError &e) {
      throw ParseError(e.what(), line_number);
    }
    try {
      ValidateEntry(entry);
    } catch (const ValidationError &e) {
      throw ValidationError("line " + std::to_string(line_number) + ": " +
                            e.what());
    }
    if (!seen.emplace(entry.PatternText(), entry.language).second) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": duplicate marker '" + entry.PatternText() + "'");
    }
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

Lexicon LoadLexicon(const std::string &path) {
  return ParseLexicon(ReadFile(path));
}

std::string SerializeLexicon(const Lexicon &lexicon) {
  std::string out;
  for (const MarkerEntry &entry : lexicon.entries()) {
    out += entry.PatternText();
    out += entry.ambiguity == AmbiguityClass::kAmbiguous ? "\tmk-amb\t"
                                                         : "\tmk\t";
    out += entry.context_rule ? *entry.context_rule : "-";
    out += '\t';
    out += LanguageCode(entry.language);
    out += '\n';
  }
  return out;
}

std::vector<MarkerMatch> MatchMarkers(const Sentence &sentence,
                                      const Lexicon &lexicon,
                                      int sentence_index,
                                      std::optional<Language> language) {
  std::vector<MarkerMatch> matches;
  const int n = sentence.size();
  std::vector<std::string> forms;
  forms.reserve(n);
  for (const Token &token : sentence.tokens) forms.push_back(ToLower(token.form));

  int i = 0;
  while (i < n) {
    int matched = -1;
    int length = std::min(lexicon.max_pattern_length(), n - i);
    for (; length >= 1; --length) {
      std::vector<std::string> window(forms.begin() + i,
                                      forms.begin() + i + length);
      matched = lexicon.Find(Join(window, " "), language);
      if (matched >= 0) break;
    }
    if (matched < 0) {
      ++i;
      continue;
    }
    const MarkerEntry &entry = lexicon.entries()[matched];
    matches.push_back(MarkerMatch{sentence_index, Span{i, i + length}, entry,
                                  entry.ambiguity ==
                                      AmbiguityClass::kNonAmbiguous});
    i += length;
  }
  return matches;
}

MarkerMatch Disambiguate(const MarkerMatch &match, const Sentence &sentence) {
  if (match.entry.ambiguity != AmbiguityClass::kAmbiguous) {
    throw ValidationError("marker '" + match.entry.PatternText() +
                          "' is not ambiguous");
  }
  const Guard guard = ParseGuard(*match.entry.context_rule);
  MarkerMatch out = match;
  SentenceFacts facts(sentence);
  out.resolved = EvaluateGuard(guard, facts, match.span, Span{0, sentence.size()});
  return out;
}

}  // namespace catseg
