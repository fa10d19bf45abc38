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

#include "catseg/segmenter.h"

#include <algorithm>

#include "catseg/guard.h"

namespace catseg {

Sentence Recategorize(const Sentence &sentence, const Lexicon &lexicon) {
  Sentence out = sentence;
  std::vector<ChunkNode> markers;
  for (MarkerMatch match : MatchMarkers(sentence, lexicon)) {
    if (!match.resolved) match = Disambiguate(match, sentence);
    if (!match.resolved) continue;
    markers.push_back(
        ChunkNode{std::string(match.entry.category_label()), match.span});
  }
  if (markers.empty()) return out;

  auto overlaps_marker = [&](const ChunkNode &chunk) {
    for (const ChunkNode &m : markers) {
      if (chunk.span.begin < m.span.end && m.span.begin < chunk.span.end) {
        return true;
      }
    }
    return false;
  };
  std::erase_if(out.chunks, overlaps_marker);
  out.chunks.insert(out.chunks.end(), markers.begin(), markers.end());
  std::sort(out.chunks.begin(), out.chunks.end(),
            [](const ChunkNode &a, const ChunkNode &b) {
              return a.span < b.span;
            });
  return out;
}

VerticalDocument Recategorize(const VerticalDocument &doc,
                              const Lexicon &lexicon) {
  VerticalDocument out;
  out.metadata = doc.metadata;
  out.sentences.reserve(doc.sentences.size());
  for (const Sentence &sentence : doc.sentences) {
    out.sentences.push_back(Recategorize(sentence, lexicon));
  }
  return out;
}

std::vector<Span> FindTriggers(const Trigger &trigger,
                               const SentenceFacts &facts) {
  const Sentence &sentence = facts.sentence();
  std::vector<Span> spans;
  if (trigger.kind == TriggerKind::kCategory) {
    for (const ChunkNode &chunk : sentence.chunks) {
      if (chunk.label == trigger.value) spans.push_back(chunk.span);
    }
    return spans;
  }
  std::vector<bool> in_marker(sentence.size(), false);
  for (const ChunkNode &chunk : sentence.chunks) {
    if (!IsMarkerLabel(chunk.label)) continue;
    for (int i = chunk.span.begin; i < chunk.span.end; ++i) in_marker[i] = true;
  }
  for (int i = 0; i < sentence.size(); ++i) {
    if (in_marker[i]) continue;
    bool hit = false;
    switch (trigger.kind) {
      case TriggerKind::kLemma:
        hit = sentence.tokens[i].lemma == trigger.value;
        break;
      case TriggerKind::kOpenBracket:
        hit = facts.bracket(i) == BracketClass::kOpen;
        break;
      case TriggerKind::kCloseBracket:
        hit = facts.bracket(i) == BracketClass::kClose;
        break;
      case TriggerKind::kCategory:
        break;
    }
    if (hit) spans.push_back(Span{i, i + 1});
  }
  return spans;
}

DetectionState StartDetection(const std::vector<Sentence> &sentences) {
  DetectionState state;
  state.boundaries = BoundarySet(SentenceLengths(sentences));
  return state;
}

namespace {

struct Candidate {
  int priority;
  int trigger_begin;
  int rule_index;
  Span trigger;
  int gap;
};

}  // namespace

int RunBoundaryPass(const std::vector<Sentence> &sentences,
                    const RuleSet &rules, DetectionState *state) {
  const int pass = ++state->passes;
  int added = 0;
  const std::vector<Rule> &rule_list = rules.rules();
  for (int s = 0; s < static_cast<int>(sentences.size()); ++s) {
    const Sentence &sentence = sentences[s];
    if (sentence.tokens.empty()) continue;
    const SentenceFacts facts(sentence);

    std::vector<std::vector<Span>> triggers(rule_list.size());
    for (size_t r = 0; r < rule_list.size(); ++r) {
      if (rule_list[r].enabled) {
        triggers[r] = FindTriggers(rule_list[r].trigger, facts);
      }
    }

    // Extents are fixed for the whole pass.
    const std::vector<Span> extents =
        SpansBetween(state->boundaries.gaps(s), sentence.size());
    for (const Span &extent : extents) {
      std::vector<Candidate> candidates;
      for (size_t r = 0; r < rule_list.size(); ++r) {
        const Rule &rule = rule_list[r];
        for (const Span &trigger : triggers[r]) {
          if (trigger.begin < extent.begin || trigger.end > extent.end) {
            continue;
          }
          if (state->consumed.count({s, static_cast<int>(r), trigger.begin})) {
            continue;
          }
          const bool holds =
              std::all_of(rule.guards.begin(), rule.guards.end(),
                          [&](Guard guard) {
                            return EvaluateGuard(guard, facts, trigger, extent);
                          });
          if (!holds) continue;
          const int gap =
              rule.action == Action::kBefore ? trigger.begin : trigger.end;
          candidates.push_back(Candidate{rule.priority, trigger.begin,
                                         static_cast<int>(r), trigger, gap});
        }
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const Candidate &a, const Candidate &b) {
                  return std::tie(a.priority, a.trigger_begin, a.rule_index) <
                         std::tie(b.priority, b.trigger_begin, b.rule_index);
                });
      for (const Candidate &c : candidates) {
        if (c.gap <= extent.begin || c.gap >= extent.end) continue;
        state->consumed.insert({s, c.rule_index, c.trigger_begin});
        if (state->boundaries.Insert(s, c.gap)) {
          ++added;
          state->trace.push_back(Firing{s, c.gap, rule_list[c.rule_index].name,
                                        c.priority, c.trigger, pass});
        }
      }
    }
  }
  return added;
}

DetectionState DetectBoundariesTraced(const std::vector<Sentence> &sentences,
                                      const RuleSet &rules) {
  DetectionState state = StartDetection(sentences);
  RunBoundaryPass(sentences, rules, &state);
  RunBoundaryPass(sentences, rules, &state);
  return state;
}

BoundarySet DetectBoundaries(const VerticalDocument &doc,
                             const RuleSet &rules) {
  return DetectBoundariesTraced(doc.sentences, rules).boundaries;
}

std::set<int> MergeVerblessSegments(const Sentence &sentence,
                                    std::set<int> gaps) {
  auto has_verb = [&](const Span &span) {
    for (int i = span.begin; i < span.end; ++i) {
      if (IsVerbTag(sentence.tokens[i].tag)) return true;
    }
    return false;
  };
  for (;;) {
    const std::vector<Span> spans = SpansBetween(gaps, sentence.size());
    if (spans.size() <= 1) return gaps;
    auto verbless = std::find_if_not(spans.begin(), spans.end(), has_verb);
    if (verbless == spans.end()) return gaps;
    if (verbless == spans.begin()) {
      gaps.erase(verbless->end);
    } else {
      gaps.erase(verbless->begin);
    }
  }
}

SegmentedDocument FormEdus(const std::vector<Sentence> &sentences,
                           const BoundarySet &boundaries) {
  BoundarySet merged(SentenceLengths(sentences));
  for (int s = 0; s < static_cast<int>(sentences.size()); ++s) {
    for (int gap : MergeVerblessSegments(sentences[s], boundaries.gaps(s))) {
      merged.Insert(s, gap);
    }
  }
  return SegmentedDocument(sentences, std::move(merged));
}

SegmentedDocument FormEdus(const VerticalDocument &doc,
                           const BoundarySet &boundaries) {
  return FormEdus(doc.sentences, boundaries);
}

SegmentationResult SegmentTraced(const VerticalDocument &doc,
                                 const Lexicon &lexicon, const RuleSet &rules) {
  const VerticalDocument tagged = Recategorize(doc, lexicon);
  DetectionState state = DetectBoundariesTraced(tagged.sentences, rules);
  return SegmentationResult{FormEdus(tagged.sentences, state.boundaries),
                            std::move(state.trace)};
}

SegmentedDocument Segment(const VerticalDocument &doc, const Lexicon &lexicon,
                          const RuleSet &rules) {
  return SegmentTraced(doc, lexicon, rules).document;
}

}  // namespace catseg
