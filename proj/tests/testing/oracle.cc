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

#include "testing/oracle.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>

namespace catseg {
namespace testing {
namespace {

struct Occurrence {
  int begin;
  int end;
};

bool Verb(const Token &t) { return !t.tag.empty() && t.tag[0] == 'V'; }

bool Finite(const Token &t) {
  return Verb(t) && t.tag.size() > 2 &&
         std::string("ISM").find(t.tag[2]) != std::string::npos;
}

bool NonFinite(const Token &t) {
  return Verb(t) && t.tag.size() > 2 &&
         std::string("NGP").find(t.tag[2]) != std::string::npos;
}

bool De(const Token &t) {
  std::string form = t.form;
  for (char &c : form) c = static_cast<char>(std::tolower(c));
  return t.lemma == "de" || form == "de" || form == "del" || form == "dels" ||
         form == "d'" || form == "d’";
}

// +1 opening, -1 closing, 0 neither.
std::vector<int> BracketDirections(const Sentence &sentence) {
  std::vector<int> dir(sentence.size(), 0);
  int dashes = 0;
  for (int i = 0; i < sentence.size(); ++i) {
    const Token &t = sentence.tokens[i];
    if (t.tag == "Fg" || t.form == "-" || t.form == "–" || t.form == "—") {
      dir[i] = (dashes++ % 2 == 0) ? 1 : -1;
    } else if (t.form == "(" || t.form == "[" || t.form == "{" ||
               t.tag == "Fpa" || t.tag == "Fca" || t.tag == "Fla") {
      dir[i] = 1;
    } else if (t.form == ")" || t.form == "]" || t.form == "}" ||
               t.tag == "Fpt" || t.tag == "Fct" || t.tag == "Flt") {
      dir[i] = -1;
    }
  }
  return dir;
}

// Partner of every bracket inside [begin, end), by stack pairing; -1 when
// unmatched.
std::vector<int> PairBrackets(const std::vector<int> &dir, int begin, int end) {
  std::vector<int> partner(dir.size(), -1);
  std::vector<int> stack;
  for (int i = begin; i < end; ++i) {
    if (dir[i] > 0) {
      stack.push_back(i);
    } else if (dir[i] < 0 && !stack.empty()) {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  return partner;
}

bool VerbIn(const Sentence &s, int begin, int end) {
  for (int i = std::max(begin, 0); i < end; ++i) {
    if (Verb(s.tokens[i])) return true;
  }
  return false;
}

bool GuardHolds(Guard guard, const Sentence &s, Occurrence t, int begin,
                int end) {
  switch (guard) {
    case Guard::kFiniteVerbRight:
      for (int i = t.end; i < end; ++i) {
        if (Finite(s.tokens[i])) return true;
      }
      return false;
    case Guard::kVerbRight:
      return VerbIn(s, t.end, end);
    case Guard::kVerbLeft:
      return VerbIn(s, begin, t.begin);
    case Guard::kNonFiniteAfterDe: {
      if (t.end >= end || !De(s.tokens[t.end])) return false;
      for (int i = t.end + 1; i < end; ++i) {
        if (Finite(s.tokens[i])) return false;
        if (NonFinite(s.tokens[i])) return true;
      }
      return false;
    }
    case Guard::kVerbEnclosed: {
      if (t.end - t.begin != 1) return false;
      const std::vector<int> dir = BracketDirections(s);
      const std::vector<int> partner = PairBrackets(dir, begin, end);
      if (dir[t.begin] > 0) {
        const int close = partner[t.begin] < 0 ? end : partner[t.begin];
        return VerbIn(s, t.begin + 1, close);
      }
      if (dir[t.begin] < 0) {
        const int open = partner[t.begin] < 0 ? begin - 1 : partner[t.begin];
        return VerbIn(s, open + 1, t.begin);
      }
      return false;
    }
    case Guard::kManualReview:
      return false;
  }
  return false;
}

std::vector<Occurrence> Occurrences(const Trigger &trigger,
                                    const Sentence &s) {
  std::vector<Occurrence> out;
  if (trigger.kind == TriggerKind::kCategory) {
    for (const ChunkNode &c : s.chunks) {
      if (c.label == trigger.value) out.push_back({c.span.begin, c.span.end});
    }
    return out;
  }
  const std::vector<int> dir = BracketDirections(s);
  for (int i = 0; i < s.size(); ++i) {
    bool covered = false;
    for (const ChunkNode &c : s.chunks) {
      if ((c.label == "disc-mk" || c.label == "disc-mk-amb") &&
          c.span.begin <= i && i < c.span.end) {
        covered = true;
      }
    }
    if (covered) continue;
    if ((trigger.kind == TriggerKind::kLemma &&
         s.tokens[i].lemma == trigger.value) ||
        (trigger.kind == TriggerKind::kOpenBracket && dir[i] > 0) ||
        (trigger.kind == TriggerKind::kCloseBracket && dir[i] < 0)) {
      out.push_back({i, i + 1});
    }
  }
  return out;
}

using Fired = std::tuple<int, int>;  // rule index, trigger begin

// Boundaries proposed inside [begin, end); records the firing triggers.
std::set<int> OnePass(const Sentence &s, const std::vector<Rule> &rules,
                      int begin, int end, const std::set<Fired> &skip,
                      std::set<Fired> *fired) {
  std::set<int> gaps;
  for (int gap = begin + 1; gap < end; ++gap) {
    for (size_t r = 0; r < rules.size(); ++r) {
      const Rule &rule = rules[r];
      if (!rule.enabled) continue;
      for (Occurrence t : Occurrences(rule.trigger, s)) {
        if (t.begin < begin || t.end > end) continue;
        const int at = rule.action == Action::kBefore ? t.begin : t.end;
        if (at != gap) continue;
        if (skip.count({static_cast<int>(r), t.begin})) continue;
        bool ok = true;
        for (Guard g : rule.guards) ok = ok && GuardHolds(g, s, t, begin, end);
        if (!ok) continue;
        gaps.insert(gap);
        fired->insert({static_cast<int>(r), t.begin});
      }
    }
  }
  return gaps;
}

}  // namespace

std::vector<std::set<int>> BruteForceBoundaries(
    const std::vector<Sentence> &sentences, const RuleSet &rules) {
  std::vector<std::set<int>> out;
  for (const Sentence &s : sentences) {
    std::set<Fired> fired;
    std::set<int> first = OnePass(s, rules.rules(), 0, s.size(), {}, &fired);
    std::set<int> all = first;
    std::vector<int> cuts = {0};
    cuts.insert(cuts.end(), first.begin(), first.end());
    cuts.push_back(s.size());
    std::set<Fired> unused;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      std::set<int> more =
          OnePass(s, rules.rules(), cuts[k], cuts[k + 1], fired, &unused);
      all.insert(more.begin(), more.end());
    }
    out.push_back(all);
  }
  return out;
}

bool EverySegmentHasVerb(const SegmentedDocument &doc) {
  for (int s = 0; s < doc.num_sentences(); ++s) {
    const std::vector<Span> segments = doc.Segments(s);
    if (segments.size() <= 1) continue;
    for (const Span &span : segments) {
      if (!VerbIn(doc.sentences()[s], span.begin, span.end)) return false;
    }
  }
  return true;
}

}  // namespace testing
}  // namespace catseg
