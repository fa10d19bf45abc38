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

#ifndef CATSEG_RULES_H_
#define CATSEG_RULES_H_

#include <string>
#include <string_view>
#include <vector>

#include "catseg/guard.h"
#include "catseg/lexicon.h"

namespace catseg {

enum class TriggerKind {
  kCategory,      // cat:LABEL, a chunk with this label
  kLemma,         // conj:LEMMA, a token with this lemma
  kOpenBracket,   // punct:open
  kCloseBracket,  // punct:close
};

struct Trigger {
  TriggerKind kind = TriggerKind::kLemma;
  // Chunk label or lemma; empty for bracket triggers.
  std::string value;

  bool IsMarker() const {
    return kind == TriggerKind::kCategory && IsMarkerLabel(value);
  }
  std::string ToString() const;

  bool operator==(const Trigger &other) const = default;
};

// Throws ConfigError for an unknown trigger.
Trigger ParseTrigger(std::string_view text);

enum class Action { kBefore, kAfter };

struct Rule {
  std::string name;
  // Lower fires first.
  int priority = 0;
  Trigger trigger;
  Action action = Action::kBefore;
  // All must hold.
  std::vector<Guard> guards;
  // Disabled rules are kept (e.g. after porting) but never fire.
  bool enabled = true;

  bool operator==(const Rule &other) const = default;
};

class RuleSet {
 public:
  RuleSet() = default;
  // Throws ValidationError for duplicate names, negative priorities,
  // VERB_ENCLOSED on a non-bracket trigger, or a marker rule whose priority
  // is not strictly below every non-marker rule's.
  RuleSet(std::vector<Rule> rules, Language language);

  const std::vector<Rule> &rules() const { return rules_; }
  Language language() const { return language_; }

  bool operator==(const RuleSet &other) const = default;

 private:
  std::vector<Rule> rules_;
  Language language_ = Language::kCatalan;
};

// Line format:
//
//   language ca
//   rule NAME priority INT trigger TRIGGER action before|after
//        [guard GUARD]... [disabled]
//
// with TRIGGER one of cat:LABEL, conj:LEMMA, punct:open, punct:close. The
// optional language line defaults to ca. '#' starts a comment line.
RuleSet ParseRules(std::string_view text);
RuleSet LoadRules(const std::string &path);
std::string SerializeRules(const RuleSet &rules);

}  // namespace catseg

#endif  // CATSEG_RULES_H_
