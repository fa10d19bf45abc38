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

#include "catseg/gold.h"

#include "catseg/error.h"
#include "catseg/text.h"

namespace catseg {
namespace {

std::vector<std::string> ParseBracketLine(const std::string &line,
                                          int line_number) {
  std::vector<std::string> segments;
  bool inside = false;
  std::string current;
  for (char c : line) {
    if (c == '[') {
      if (inside) throw ParseError("nested '['", line_number);
      inside = true;
      current.clear();
    } else if (c == ']') {
      if (!inside) throw ParseError("unbalanced ']'", line_number);
      if (Trim(current).empty()) throw ParseError("empty segment", line_number);
      segments.push_back(std::string(Trim(current)));
      inside = false;
    } else if (inside) {
      current.push_back(c);
    } else if (c != ' ' && c != '\t') {
      throw ParseError("text outside brackets", line_number);
    }
  }
  if (inside) throw ParseError("unbalanced '['", line_number);
  if (segments.empty()) throw ParseError("no segments", line_number);
  return segments;
}

std::vector<std::string> Forms(const Sentence &sentence) {
  std::vector<std::string> forms;
  forms.reserve(sentence.tokens.size());
  for (const Token &t : sentence.tokens) forms.push_back(t.form);
  return forms;
}

}  // namespace

GoldAnnotation ParseGold(std::string_view text,
                         const std::vector<Sentence> &sentences) {
  GoldAnnotation gold;
  gold.boundaries = BoundarySet(SentenceLengths(sentences));

  const std::vector<std::string> lines = SplitLines(text);
  size_t sentence_index = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const int line_number = static_cast<int>(i) + 1;
    std::vector<std::string> segments = ParseBracketLine(lines[i], line_number);
    if (sentence_index >= sentences.size()) {
      throw AlignmentError("line " + std::to_string(line_number) +
                           ": more segmented lines than sentences (" +
                           std::to_string(sentences.size()) + ")");
    }
    const Sentence &sentence = sentences[sentence_index];
    std::vector<std::string> forms = Forms(sentence);
    size_t position = 0;
    for (size_t k = 0; k < segments.size(); ++k) {
      if (k > 0 && position > 0 && position < forms.size()) {
        gold.boundaries.Insert(static_cast<int>(sentence_index),
                               static_cast<int>(position));
      }
      for (const std::string &piece : SplitWhitespace(segments[k])) {
        if (position >= forms.size() || forms[position] != piece) {
          throw AlignmentError(
              "line " + std::to_string(line_number) + ": token '" + piece +
              "' does not match sentence " + std::to_string(sentence_index) +
              " at position " + std::to_string(position) +
              (position < forms.size() ? " (expected '" + forms[position] + "')"
                                       : " (past sentence end)"));
        }
        ++position;
      }
    }
    if (position != forms.size()) {
      throw AlignmentError("line " + std::to_string(line_number) +
                           ": sentence " + std::to_string(sentence_index) +
                           " has " + std::to_string(forms.size()) +
                           " tokens, brackets cover " +
                           std::to_string(position));
    }
    gold.segments.push_back(std::move(segments));
    gold.forms.push_back(std::move(forms));
    ++sentence_index;
  }
  if (sentence_index != sentences.size()) {
    throw AlignmentError("segmented text has " +
                         std::to_string(sentence_index) +
                         " sentences, tagged text has " +
                         std::to_string(sentences.size()));
  }
  return gold;
}

GoldAnnotation ParseGold(std::string_view text, const VerticalDocument &doc) {
  return ParseGold(text, doc.sentences);
}

SegmentedDocument ToSegmentedDocument(const VerticalDocument &doc,
                                      const GoldAnnotation &gold) {
  return SegmentedDocument(doc.sentences, gold.boundaries);
}

GoldAnnotation ToGoldAnnotation(const SegmentedDocument &doc) {
  GoldAnnotation gold;
  gold.boundaries = doc.boundaries();
  for (int s = 0; s < doc.num_sentences(); ++s) {
    const Sentence &sentence = doc.sentences()[s];
    std::vector<std::string> forms = Forms(sentence);
    std::vector<std::string> segments;
    for (const Span &span : doc.Segments(s)) {
      std::vector<std::string> piece(forms.begin() + span.begin,
                                     forms.begin() + span.end);
      segments.push_back(Join(piece, " "));
    }
    gold.segments.push_back(std::move(segments));
    gold.forms.push_back(std::move(forms));
  }
  return gold;
}

std::string SerializeSegments(const SegmentedDocument &doc,
                              SegmentFormat format) {
  std::string out;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    if (format == SegmentFormat::kStandoff) {
      std::vector<std::string> gaps;
      for (int g : doc.boundaries().gaps(s)) gaps.push_back(std::to_string(g));
      out += std::to_string(s) + '\t' + Join(gaps, ",") + '\n';
      continue;
    }
    const Sentence &sentence = doc.sentences()[s];
    std::vector<std::string> segments;
    for (const Span &span : doc.Segments(s)) {
      std::vector<std::string> forms;
      for (int i = span.begin; i < span.end; ++i) {
        const std::string &form = sentence.tokens[i].form;
        if (form.find_first_of("[] \t") != std::string::npos) {
          throw ValidationError("form '" + form +
                                "' cannot be written in bracket format");
        }
        forms.push_back(form);
      }
      segments.push_back("[" + Join(forms, " ") + "]");
    }
    out += Join(segments, " ") + '\n';
  }
  return out;
}

}  // namespace catseg
