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

#ifndef CATSEG_ES2CAT_H_
#define CATSEG_ES2CAT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catseg/lexicon.h"
#include "catseg/rules.h"

namespace catseg {

// One target of a marker mapping. A context names the guard that selects
// this target; it also makes the ported entry ambiguous.
struct MarkerMapping {
  std::vector<std::string> target;
  std::optional<std::string> context;

  std::string TargetText() const;
  bool operator==(const MarkerMapping &other) const = default;
};

// Source-language markers, lemmas and chunk labels mapped to the target
// language.
//
// Map file, tab separated, '#' comments:
//   SRC_PATTERN  TGT_PATTERN  CONTEXT_RULE|-    one row per target
//   tag:SRC      tag:TGT|UNMAPPED
class TranslationMap {
 public:
  // Throws ValidationError on a repeated (source, target) or tag row.
  void AddMarker(const std::string &source, MarkerMapping mapping);
  void AddTag(const std::string &source, std::optional<std::string> target);

  // Targets in file order, or nullptr.
  const std::vector<MarkerMapping> *FindMarker(const std::string &source) const;
  // nullopt: no row. A row with an unset target: UNMAPPED.
  std::optional<std::optional<std::string>> FindTag(
      const std::string &source) const;

  // A one-to-many mapping needs review unless at most one target lacks a
  // context; a MANUAL_REVIEW context always needs review.
  bool NeedsReview(const std::string &source) const;

  const std::vector<std::pair<std::string, std::vector<MarkerMapping>>> &
  markers() const {
    return markers_;
  }
  const std::vector<std::pair<std::string, std::optional<std::string>>> &tags()
      const {
    return tags_;
  }

 private:
  std::vector<std::pair<std::string, std::vector<MarkerMapping>>> markers_;
  std::map<std::string, size_t> marker_index_;
  std::vector<std::pair<std::string, std::optional<std::string>>> tags_;
  std::map<std::string, size_t> tag_index_;
};

TranslationMap ParseTranslationMap(std::string_view text);
TranslationMap LoadTranslationMap(const std::string &path);

struct PortItem {
  std::string item;
  std::string detail;

  bool operator==(const PortItem &other) const = default;
};

// What a port did and what it could not do.
struct PortReport {
  int source_count = 0;
  // Source items with at least one usable target.
  int translated = 0;
  int one_to_many = 0;
  // item: source, detail: targets joined with '|'.
  std::vector<PortItem> fan_out;
  // item: source entry or rule, detail: reason.
  std::vector<PortItem> unmapped;
  // item: tag, detail: rule that was disabled.
  std::vector<PortItem> unmapped_tags;
  // item: source, detail: targets.
  std::vector<PortItem> review;

  bool empty() const {
    return fan_out.empty() && unmapped.empty() && unmapped_tags.empty() &&
           review.empty();
  }
};

// Line-delimited records: "source N", "translated N", "one-to-many SRC
// TGTS", "unmapped ITEM REASON", "unmapped-tag TAG RULE", "review SRC TGTS"
// (tab separated).
std::string FormatPortReport(const PortReport &report);

struct PortDirection {
  Language source = Language::kSpanish;
  Language target = Language::kCatalan;
};

// Expands each source entry into one entry per mapping target, in source
// order with targets in map order. A target already produced by an earlier
// source is skipped and reported. Throws ValidationError if an entry is not
// in the source language.
std::pair<Lexicon, PortReport> TranslateLexicon(const Lexicon &source,
                                                const TranslationMap &map,
                                                PortDirection direction = {});

// Rewrites lemma and chunk-label triggers. One-to-many lemmas fan out into
// one rule per target (NAME_TARGET) guarded by the target's context.
// Rules whose triggers cannot be resolved are kept, disabled, and reported.
// Throws ValidationError if the rule set is not in the source language.
std::pair<RuleSet, PortReport> TranslateRuleSet(const RuleSet &source,
                                                const TranslationMap &map,
                                                PortDirection direction = {});

}  // namespace catseg

#endif  // CATSEG_ES2CAT_H_
