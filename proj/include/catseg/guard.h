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

#ifndef CATSEG_GUARD_H_
#define CATSEG_GUARD_H_

#include <optional>
#include <string_view>
#include <vector>

#include "catseg/document.h"

namespace catseg {

// Context predicates that rules and ambiguous markers refer to by name.
// Each is evaluated for a trigger span inside an extent (the sentence, or
// the segment being re-scanned); nothing outside the extent is visible.
enum class Guard {
  // A finite verb occurs between the trigger end and the extent end.
  kFiniteVerbRight,
  // Any verb occurs between the trigger end and the extent end.
  kVerbRight,
  // Any verb occurs between the extent start and the trigger start.
  kVerbLeft,
  // The trigger is followed by "de" (or del/dels/d') and a non-finite verb
  // occurs after it before the next finite verb or the extent end.
  kNonFiniteAfterDe,
  // The trigger is an opening or closing bracket and the bracketed span
  // (up to its partner, or the extent edge if unpaired) contains a verb.
  kVerbEnclosed,
  // Placeholder for contexts nobody has written yet. Never holds.
  kManualReview,
};

inline constexpr Guard kAllGuards[] = {
    Guard::kFiniteVerbRight,  Guard::kVerbRight,    Guard::kVerbLeft,
    Guard::kNonFiniteAfterDe, Guard::kVerbEnclosed, Guard::kManualReview,
};

std::string_view GuardName(Guard guard);
std::optional<Guard> FindGuard(std::string_view name);
// Throws ConfigError for unknown names.
Guard ParseGuard(std::string_view name);

enum class BracketClass { kNone, kOpen, kClose };

// Per-token facts the guards and triggers look at, computed once per
// sentence. Dashes pair up left to right: odd occurrences open, even ones
// close.
class SentenceFacts {
 public:
  explicit SentenceFacts(const Sentence &sentence);

  const Sentence &sentence() const { return *sentence_; }
  int size() const { return sentence_->size(); }
  bool verb(int i) const { return verb_[i]; }
  bool finite(int i) const { return finite_[i]; }
  bool nonfinite(int i) const { return nonfinite_[i]; }
  bool de(int i) const { return de_[i]; }
  BracketClass bracket(int i) const { return bracket_[i]; }

 private:
  const Sentence *sentence_;
  std::vector<bool> verb_, finite_, nonfinite_, de_;
  std::vector<BracketClass> bracket_;
};

bool EvaluateGuard(Guard guard, const SentenceFacts &facts, Span trigger,
                   Span extent);

}  // namespace catseg

#endif  // CATSEG_GUARD_H_
