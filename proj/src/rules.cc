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

#include "catseg/rules.h"

#include <algorithm>
#include <limits>
#include <set>

#include "catseg/error.h"
#include "catseg/text.h"
#include "catseg/vertical.h"

namespace catseg {

std::string Trigger::ToString() const {
  switch (kind) {
    case TriggerKind::kCategory:
      return "cat:" + value;
    case TriggerKind::kLemma:
      return "conj:" + value;
    case TriggerKind::kOpenBracket:
      return "punct:open";
    case TriggerKind::kCloseBracket:
      return "punct:close";
  }
  return "";
}

Trigger ParseTrigger(std::string_view text) {
  if (text == "punct:open") return {TriggerKind::kOpenBracket, ""};
  if (text == "punct:close") return {TriggerKind::kCloseBracket, ""};
  if (text.size() > 4 && text.substr(0, 4) == "cat:") {
    return {TriggerKind::kCategory, std::string(text.substr(4))};
  }
  if (text.size() > 5 && text.substr(0, 5) == "conj:") {
    return {TriggerKind::kLemma, ToLower(text.substr(5))};
  }
  throw ConfigError("unknown trigger '" + std::string(text) + "'");
}

RuleSet::RuleSet(std::vector<Rule> rules, Language language)
    : rules_(std::move(rules)), language_(language) {
  std::set<std::string> names;
  int max_marker = std::numeric_limits<int>::min();
  int min_other = std::numeric_limits<int>::max();
  for (const Rule &rule : rules_) {
    if (rule.name.empty()) throw ValidationError("rule without a name");
    if (!names.insert(rule.name).second) {
      throw ValidationError("duplicate rule name '" + rule.name + "'");
    }
    if (rule.priority < 0) {
      throw ValidationError("rule '" + rule.name + "' has negative priority");
    }
    const bool bracket = rule.trigger.kind == TriggerKind::kOpenBracket ||
                         rule.trigger.kind == TriggerKind::kCloseBracket;
    if (!bracket && std::find(rule.guards.begin(), rule.guards.end(),
                              Guard::kVerbEnclosed) != rule.guards.end()) {
      throw ValidationError("rule '" + rule.name +
                            "' uses VERB_ENCLOSED on a non-bracket trigger");
    }
    if (rule.trigger.IsMarker()) {
      max_marker = std::max(max_marker, rule.priority);
    } else {
      min_other = std::min(min_other, rule.priority);
    }
  }
  if (max_marker != std::numeric_limits<int>::min() &&
      min_other != std::numeric_limits<int>::max() &&
      max_marker >= min_other) {
    throw ValidationError(
        "marker rules must have strictly lower priority numbers than every "
        "other rule (marker max " +
        std::to_string(max_marker) + ", other min " +
        std::to_string(min_other) + ")");
  }
}

RuleSet ParseRules(std::string_view text) {
  std::vector<Rule> rules;
  Language language = Language::kCatalan;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i) + 1;
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> words = SplitWhitespace(line);
    if (words[0] == "language") {
      if (words.size() != 2) throw ParseError("expected 'language LANG'", line_number);
      try {
        language = ParseLanguage(words[1]);
      } catch (const ConfigError &e) {
        throw ParseError(e.what(), line_number);
      }
      continue;
    }
    if (words[0] != "rule" || words.size() < 2) {
      throw ParseError("expected 'rule NAME ...'", line_number);
    }
    Rule rule;
    rule.name = words[1];
    bool has_priority = false, has_trigger = false, has_action = false;
    try {
      for (size_t k = 2; k < words.size(); ++k) {
        const std::string &key = words[k];
        if (key == "disabled") {
          rule.enabled = false;
          continue;
        }
        if (k + 1 >= words.size()) {
          throw ParseError("'" + key + "' needs a value", line_number);
        }
        const std::string &value = words[++k];
        if (key == "priority") {
          size_t consumed = 0;
          int priority = 0;
          try {
            priority = std::stoi(value, &consumed);
          } catch (const std::exception &) {
            consumed = 0;
          }
          if (consumed != value.size()) {
            throw ParseError("bad priority '" + value + "'", line_number);
          }
          rule.priority = priority;
          has_priority = true;
        } else if (key == "trigger") {
          rule.trigger = ParseTrigger(value);
          has_trigger = true;
        } else if (key == "action") {
          if (value == "before") {
            rule.action = Action::kBefore;
          } else if (value == "after") {
            rule.action = Action::kAfter;
          } else {
            throw ParseError("bad action '" + value + "'", line_number);
          }
          has_action = true;
        } else if (key == "guard") {
          rule.guards.push_back(ParseGuard(value));
        } else {
          throw ParseError("unknown keyword '" + key + "'", line_number);
        }
      }
    } catch (const ConfigError &e) {
      throw ConfigError("line " + std::to_string(line_number) + ": " +
                        e.what());
    }
    if (!has_priority || !has_trigger || !has_action) {
      throw ParseError("rule '" + rule.name +
                           "' needs priority, trigger and action",
                       line_number);
    }
    rules.push_back(std::move(rule));
  }
  return RuleSet(std::move(rules), language);
}

RuleSet LoadRules(const std::string &path) { return ParseRules(ReadFile(path)); }

std::string SerializeRules(const RuleSet &rules) {
  std::string out = "language ";
  out += LanguageCode(rules.language());
  out += '\n';
  for (const Rule &rule : rules.rules()) {
    out += "rule " + rule.name + " priority " + std::to_string(rule.priority) +
           " trigger " + rule.trigger.ToString() + " action " +
           (rule.action == Action::kBefore ? "before" : "after");
    for (Guard guard : rule.guards) {
      out += " guard ";
      out += GuardName(guard);
    }
    if (!rule.enabled) out += " disabled";
    out += '\n';
  }
  return out;
}

}  // namespace catseg
