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

#include "catseg/es2cat.h"

#include <algorithm>
#include <set>

#include "catseg/error.h"
#include "catseg/guard.h"
#include "catseg/text.h"
#include "catseg/vertical.h"

namespace catseg {
namespace {

constexpr std::string_view kTagPrefix = "tag:";
constexpr std::string_view kUnmapped = "UNMAPPED";

std::string TargetsText(const std::vector<MarkerMapping> &mappings) {
  std::vector<std::string> targets;
  for (const MarkerMapping &m : mappings) targets.push_back(m.TargetText());
  return Join(targets, "|");
}

void NoteFanOut(const std::string &source, const TranslationMap &map,
                const std::vector<MarkerMapping> &mappings,
                PortReport *report) {
  if (mappings.size() > 1) {
    ++report->one_to_many;
    report->fan_out.push_back({source, TargetsText(mappings)});
  }
  if (map.NeedsReview(source)) {
    report->review.push_back({source, TargetsText(mappings)});
  }
}

}  // namespace

std::string MarkerMapping::TargetText() const { return Join(target, " "); }

void TranslationMap::AddMarker(const std::string &source,
                               MarkerMapping mapping) {
  auto it = marker_index_.find(source);
  if (it == marker_index_.end()) {
    marker_index_[source] = markers_.size();
    markers_.push_back({source, {std::move(mapping)}});
    return;
  }
  std::vector<MarkerMapping> &targets = markers_[it->second].second;
  for (const MarkerMapping &existing : targets) {
    if (existing.target == mapping.target) {
      throw ValidationError("mapping '" + source + "' -> '" +
                            mapping.TargetText() + "' repeated");
    }
  }
  targets.push_back(std::move(mapping));
}

void TranslationMap::AddTag(const std::string &source,
                            std::optional<std::string> target) {
  if (tag_index_.count(source)) {
    throw ValidationError("tag '" + source + "' mapped twice");
  }
  tag_index_[source] = tags_.size();
  tags_.emplace_back(source, std::move(target));
}

const std::vector<MarkerMapping> *TranslationMap::FindMarker(
    const std::string &source) const {
  auto it = marker_index_.find(source);
  return it == marker_index_.end() ? nullptr : &markers_[it->second].second;
}

std::optional<std::optional<std::string>> TranslationMap::FindTag(
    const std::string &source) const {
  auto it = tag_index_.find(source);
  if (it == tag_index_.end()) return std::nullopt;
  return tags_[it->second].second;
}

bool TranslationMap::NeedsReview(const std::string &source) const {
  const std::vector<MarkerMapping> *targets = FindMarker(source);
  if (targets == nullptr) return false;
  int without_context = 0;
  for (const MarkerMapping &m : *targets) {
    if (!m.context) ++without_context;
    if (m.context && *m.context == GuardName(Guard::kManualReview)) return true;
  }
  return targets->size() > 1 && without_context > 1;
}

TranslationMap ParseTranslationMap(std::string_view text) {
  TranslationMap map;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i) + 1;
    const std::string &line = lines[i];
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    try {
      if (fields[0].rfind(kTagPrefix, 0) == 0) {
        if (fields.size() != 2) {
          throw ParseError("tag rows have 2 fields", line_number);
        }
        std::string source = fields[0].substr(kTagPrefix.size());
        if (source.empty()) throw ParseError("empty source tag", line_number);
        if (fields[1] == kUnmapped) {
          map.AddTag(source, std::nullopt);
        } else if (fields[1].rfind(kTagPrefix, 0) == 0 &&
                   fields[1].size() > kTagPrefix.size()) {
          map.AddTag(source, fields[1].substr(kTagPrefix.size()));
        } else {
          throw ParseError("expected tag:TARGET or UNMAPPED", line_number);
        }
        continue;
      }
      if (fields.size() != 3) {
        throw ParseError("marker rows have 3 fields", line_number);
      }
      std::vector<std::string> source = SplitWhitespace(ToLower(fields[0]));
      MarkerMapping mapping;
      mapping.target = SplitWhitespace(ToLower(fields[1]));
      if (source.empty() || mapping.target.empty()) {
        throw ParseError("empty pattern", line_number);
      }
      if (fields[2].empty()) throw ParseError("empty context", line_number);
      if (fields[2] != "-") mapping.context = fields[2];
      map.AddMarker(Join(source, " "), std::move(mapping));
    } catch (const ValidationError &e) {
      throw ValidationError("line " + std::to_string(line_number) + ": " +
                            e.what());
    }
  }
  return map;
}

TranslationMap LoadTranslationMap(const std::string &path) {
  return ParseTranslationMap(ReadFile(path));
}

std::string FormatPortReport(const PortReport &report) {
  std::string out;
  out += "source\t" + std::to_string(report.source_count) + '\n';
  out += "translated\t" + std::to_string(report.translated) + '\n';
  out += "one-to-many-count\t" + std::to_string(report.one_to_many) + '\n';
  for (const PortItem &p : report.fan_out) {
    out += "one-to-many\t" + p.item + '\t' + p.detail + '\n';
  }
  for (const PortItem &p : report.review) {
    out += "review\t" + p.item + '\t' + p.detail + '\n';
  }
  for (const PortItem &p : report.unmapped) {
    out += "unmapped\t" + p.item + '\t' + p.detail + '\n';
  }
  for (const PortItem &p : report.unmapped_tags) {
    out += "unmapped-tag\t" + p.item + '\t' + p.detail + '\n';
  }
  return out;
}

std::pair<Lexicon, PortReport> TranslateLexicon(const Lexicon &source,
                                                const TranslationMap &map,
                                                PortDirection direction) {
  PortReport report;
  std::vector<MarkerEntry> entries;
  std::set<std::string> produced;
  for (const MarkerEntry &entry : source.entries()) {
    if (entry.language != direction.source) {
      throw ValidationError("marker '" + entry.PatternText() + "' is " +
                            std::string(LanguageCode(entry.language)) +
                            ", expected " +
                            std::string(LanguageCode(direction.source)));
    }
    ++report.source_count;
    const std::string pattern = entry.PatternText();
    const std::vector<MarkerMapping> *mappings = map.FindMarker(pattern);
    if (mappings == nullptr) {
      report.unmapped.push_back({pattern, "no mapping"});
      continue;
    }
    std::vector<std::string> skipped;
    for (const MarkerMapping &mapping : *mappings) {
      MarkerEntry target = entry;
      target.pattern = mapping.target;
      target.language = direction.target;
      if (mapping.context) {
        target.ambiguity = AmbiguityClass::kAmbiguous;
        target.context_rule = mapping.context;
      }
      if (!produced.insert(target.PatternText()).second) {
        skipped.push_back(target.PatternText());
        continue;
      }
      entries.push_back(std::move(target));
    }
    if (skipped.size() == mappings->size()) {
      report.unmapped.push_back(
          {pattern, "duplicate target '" + Join(skipped, "|") + "'"});
      continue;
    }
    if (!skipped.empty()) {
      report.review.push_back(
          {pattern, "skipped duplicate target '" + Join(skipped, "|") + "'"});
    }
    ++report.translated;
    NoteFanOut(pattern, map, *mappings, &report);
  }
  return {Lexicon(std::move(entries)), std::move(report)};
}

std::pair<RuleSet, PortReport> TranslateRuleSet(const RuleSet &source,
                                                const TranslationMap &map,
                                                PortDirection direction) {
  if (source.language() != direction.source) {
    throw ValidationError("rule set is " +
                          std::string(LanguageCode(source.language())) +
                          ", expected " +
                          std::string(LanguageCode(direction.source)));
  }
  PortReport report;
  std::vector<Rule> rules;
  auto disable = [&](Rule rule, const std::string &reason) {
    rule.enabled = false;
    report.unmapped.push_back({rule.name, reason});
    rules.push_back(std::move(rule));
  };

  for (const Rule &rule : source.rules()) {
    ++report.source_count;
    switch (rule.trigger.kind) {
      case TriggerKind::kOpenBracket:
      case TriggerKind::kCloseBracket:
        rules.push_back(rule);
        ++report.translated;
        break;
      case TriggerKind::kCategory: {
        if (rule.trigger.IsMarker()) {
          rules.push_back(rule);
          ++report.translated;
          break;
        }
        const auto tag = map.FindTag(rule.trigger.value);
        if (!tag) {
          disable(rule, "no mapping for tag '" + rule.trigger.value + "'");
        } else if (!*tag) {
          report.unmapped_tags.push_back({rule.trigger.value, rule.name});
          disable(rule, "unmapped tag '" + rule.trigger.value + "'");
        } else {
          Rule out = rule;
          out.trigger.value = **tag;
          rules.push_back(std::move(out));
          ++report.translated;
        }
        break;
      }
      case TriggerKind::kLemma: {
        const std::vector<MarkerMapping> *mappings =
            map.FindMarker(rule.trigger.value);
        if (mappings == nullptr) {
          disable(rule, "no mapping for '" + rule.trigger.value + "'");
          break;
        }
        std::vector<Rule> out;
        std::string problem;
        for (const MarkerMapping &mapping : *mappings) {
          if (mapping.target.size() != 1) {
            problem = "multiword target '" + mapping.TargetText() + "'";
            break;
          }
          Rule target = rule;
          target.trigger.value = mapping.target[0];
          if (mappings->size() > 1) target.name += "_" + mapping.target[0];
          if (mapping.context) {
            const std::optional<Guard> guard = FindGuard(*mapping.context);
            if (!guard) {
              problem = "unknown guard '" + *mapping.context + "'";
              break;
            }
            if (std::find(target.guards.begin(), target.guards.end(), *guard) ==
                target.guards.end()) {
              target.guards.push_back(*guard);
            }
          }
          out.push_back(std::move(target));
        }
        if (!problem.empty()) {
          disable(rule, problem);
          break;
        }
        rules.insert(rules.end(), out.begin(), out.end());
        ++report.translated;
        NoteFanOut(rule.trigger.value, map, *mappings, &report);
        break;
      }
    }
  }
  return {RuleSet(std::move(rules), direction.target), std::move(report)};
}

}  // namespace catseg
