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

#include "catseg/guard.h"

#include <string>

#include "catseg/error.h"
#include "catseg/text.h"

namespace catseg {
namespace {

constexpr std::string_view kGuardNames[] = {
    "FINITE_VERB_RIGHT",  "VERB_RIGHT",    "VERB_LEFT",
    "NONFINITE_AFTER_DE", "VERB_ENCLOSED", "MANUAL_REVIEW",
};

bool IsDe(const Token &token) {
  if (token.lemma == "de") return true;
  const std::string form = ToLower(token.form);
  return form == "de" || form == "del" || form == "dels" || form == "d'" ||
         form == "d’";
}

bool IsDash(const Token &token) {
  return token.tag == "Fg" || token.form == "-" || token.form == "–" ||
         token.form == "—";
}

BracketClass FixedBracketClass(const Token &token) {
  if (token.form == "(" || token.form == "[" || token.form == "{" ||
      token.tag == "Fpa" || token.tag == "Fca" || token.tag == "Fla") {
    return BracketClass::kOpen;
  }
  if (token.form == ")" || token.form == "]" || token.form == "}" ||
      token.tag == "Fpt" || token.tag == "Fct" || token.tag == "Flt") {
    return BracketClass::kClose;
  }
  return BracketClass::kNone;
}

bool AnyVerb(const SentenceFacts &facts, int begin, int end) {
  for (int i = begin; i < end; ++i) {
    if (facts.verb(i)) return true;
  }
  return false;
}

// Index of the bracket closing the one opened at `open`, or extent.end.
int MatchingClose(const SentenceFacts &facts, int open, Span extent) {
  int depth = 0;
  for (int i = open + 1; i < extent.end; ++i) {
    if (facts.bracket(i) == BracketClass::kOpen) {
      ++depth;
    } else if (facts.bracket(i) == BracketClass::kClose) {
      if (depth == 0) return i;
      --depth;
    }
  }
  return extent.end;
}

// Index of the bracket opening the one closed at `close`, or
// extent.begin - 1.
int MatchingOpen(const SentenceFacts &facts, int close, Span extent) {
  int depth = 0;
  for (int i = close - 1; i >= extent.begin; --i) {
    if (facts.bracket(i) == BracketClass::kClose) {
      ++depth;
    } else if (facts.bracket(i) == BracketClass::kOpen) {
      if (depth == 0) return i;
      --depth;
    }
  }
  return extent.begin - 1;
}

}  // namespace

std::string_view GuardName(Guard guard) {
  return kGuardNames[static_cast<int>(guard)];
}

std::optional<Guard> FindGuard(std::string_view name) {
  for (Guard guard : kAllGuards) {
    if (GuardName(guard) == name) return guard;
  }
  return std::nullopt;
}

Guard ParseGuard(std::string_view name) {
  if (auto guard = FindGuard(name)) return *guard;
  throw ConfigError("unknown guard '" + std::string(name) + "'");
}

SentenceFacts::SentenceFacts(const Sentence &sentence)
    : sentence_(&sentence) {
  const int n = sentence.size();
  verb_.resize(n);
  finite_.resize(n);
  nonfinite_.resize(n);
  de_.resize(n);
  bracket_.resize(n);
  bool dash_open = false;
  for (int i = 0; i < n; ++i) {
    const Token &token = sentence.tokens[i];
    verb_[i] = IsVerbTag(token.tag);
    finite_[i] = IsFiniteVerbTag(token.tag);
    nonfinite_[i] = IsNonFiniteVerbTag(token.tag);
    de_[i] = IsDe(token);
    if (IsDash(token)) {
      bracket_[i] = dash_open ? BracketClass::kClose : BracketClass::kOpen;
      dash_open = !dash_open;
    } else {
      bracket_[i] = FixedBracketClass(token);
    }
  }
}

bool EvaluateGuard(Guard guard, const SentenceFacts &facts, Span trigger,
                   Span extent) {
  switch (guard) {
    case Guard::kFiniteVerbRight:
      for (int i = trigger.end; i < extent.end; ++i) {
        if (facts.finite(i)) return true;
      }
      return false;
    case Guard::kVerbRight:
      return AnyVerb(facts, trigger.end, extent.end);
    case Guard::kVerbLeft:
      return AnyVerb(facts, extent.begin, trigger.begin);
    case Guard::kNonFiniteAfterDe:
      if (trigger.end >= extent.end || !facts.de(trigger.end)) return false;
      for (int i = trigger.end + 1; i < extent.end; ++i) {
        if (facts.finite(i)) return false;
        if (facts.nonfinite(i)) return true;
      }
      return false;
    case Guard::kVerbEnclosed:
      if (trigger.size() != 1) return false;
      switch (facts.bracket(trigger.begin)) {
        case BracketClass::kOpen:
          return AnyVerb(facts, trigger.end,
                         MatchingClose(facts, trigger.begin, extent));
        case BracketClass::kClose:
          return AnyVerb(facts, MatchingOpen(facts, trigger.begin, extent) + 1,
                         trigger.begin);
        case BracketClass::kNone:
          return false;
      }
      return false;
    case Guard::kManualReview:
      return false;
  }
  return false;
}

}  // namespace catseg
