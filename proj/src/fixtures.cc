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

#include "catseg/fixtures.h"

#include <algorithm>
#include <filesystem>
#include <functional>

#include "catseg/error.h"
#include "catseg/es2cat.h"
#include "catseg/gold.h"
#include "catseg/guard.h"
#include "catseg/lexicon.h"
#include "catseg/rules.h"
#include "catseg/segmenter.h"
#include "catseg/vertical.h"

namespace catseg {

namespace fs = std::filesystem;

FixturePaths::FixturePaths(std::string root_dir)
    : root(std::move(root_dir)),
      ca_lexicon(root + "/lexicon/ca.seed.tsv"),
      es_lexicon(root + "/lexicon/es.seed.tsv"),
      ca_ported_lexicon(root + "/lexicon/ca.ported.tsv"),
      ca_rules(root + "/rules/ca.rules"),
      es_rules(root + "/rules/es.rules"),
      ca_ported_rules(root + "/rules/ca.ported.rules"),
      es2ca_map(root + "/maps/es2ca.tsv"),
      corpus_dir(root + "/corpus") {}

std::vector<std::string> FixturePaths::CorpusNames() const {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto &entry : fs::directory_iterator(corpus_dir, ec)) {
    if (entry.path().extension() == ".vrt") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string FixturePaths::Vertical(const std::string &name) const {
  return corpus_dir + "/" + name + ".vrt";
}
std::string FixturePaths::Gold(const std::string &name) const {
  return corpus_dir + "/" + name + ".gold.seg";
}
std::string FixturePaths::System(const std::string &name) const {
  return corpus_dir + "/" + name + ".system.seg";
}

bool FixtureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FixtureCheck &c) { return c.ok; });
}

std::string FixtureReport::Format() const {
  std::string out;
  for (const FixtureCheck &c : checks) {
    out += c.ok ? "ok    " : "FAIL  ";
    out += c.name;
    if (!c.message.empty()) out += ": " + c.message;
    out += '\n';
  }
  return out;
}

namespace {

void Check(FixtureReport *report, const std::string &name,
           const std::function<std::string()> &body) {
  FixtureCheck check{name, false, ""};
  try {
    check.message = body();
    check.ok = true;
  } catch (const std::exception &e) {
    check.message = e.what();
  }
  report->checks.push_back(std::move(check));
}

std::string Counts(const Lexicon &lexicon) {
  return std::to_string(lexicon.size()) + " markers (" +
         std::to_string(lexicon.num_non_ambiguous()) + " non-ambiguous, " +
         std::to_string(lexicon.num_ambiguous()) + " ambiguous)";
}

void CheckGuardsKnown(const Lexicon &lexicon) {
  for (const MarkerEntry &entry : lexicon.entries()) {
    if (entry.context_rule) ParseGuard(*entry.context_rule);
  }
}

}  // namespace

FixtureReport ValidateFixtures(const std::string &root) {
  const FixturePaths paths(root);
  FixtureReport report;

  Check(&report, "lexicon/ca.seed.tsv", [&] {
    Lexicon lexicon = LoadLexicon(paths.ca_lexicon);
    CheckGuardsKnown(lexicon);
    return Counts(lexicon);
  });
  Check(&report, "lexicon/es.seed.tsv", [&] {
    Lexicon lexicon = LoadLexicon(paths.es_lexicon);
    CheckGuardsKnown(lexicon);
    return Counts(lexicon);
  });
  Check(&report, "rules/ca.rules", [&] {
    return std::to_string(LoadRules(paths.ca_rules).rules().size()) + " rules";
  });
  Check(&report, "rules/es.rules", [&] {
    return std::to_string(LoadRules(paths.es_rules).rules().size()) + " rules";
  });
  Check(&report, "maps/es2ca.tsv", [&] {
    TranslationMap map = LoadTranslationMap(paths.es2ca_map);
    return std::to_string(map.markers().size()) + " marker sources, " +
           std::to_string(map.tags().size()) + " tags";
  });
  Check(&report, "lexicon/ca.ported.tsv", [&] {
    auto [ported, port_report] = TranslateLexicon(
        LoadLexicon(paths.es_lexicon), LoadTranslationMap(paths.es2ca_map));
    if (SerializeLexicon(ported) != ReadFile(paths.ca_ported_lexicon)) {
      throw ValidationError("differs from a fresh port of es.seed.tsv");
    }
    return Counts(ported);
  });
  Check(&report, "rules/ca.ported.rules", [&] {
    auto [ported, port_report] = TranslateRuleSet(
        LoadRules(paths.es_rules), LoadTranslationMap(paths.es2ca_map));
    if (SerializeRules(ported) != ReadFile(paths.ca_ported_rules)) {
      throw ValidationError("differs from a fresh port of es.rules");
    }
    return std::to_string(port_report.unmapped.size()) + " disabled rules";
  });

  const std::vector<std::string> names = paths.CorpusNames();
  Check(&report, "corpus", [&] {
    if (names.empty()) throw ValidationError("no .vrt files");
    return std::to_string(names.size()) + " passages";
  });
  for (const std::string &name : names) {
    Check(&report, "corpus/" + name, [&] {
      const VerticalDocument doc = ParseVertical(ReadFile(paths.Vertical(name)));
      ParseGold(ReadFile(paths.Gold(name)), doc);
      ParseGold(ReadFile(paths.System(name)), doc);
      const SegmentedDocument segmented =
          Segment(doc, LoadLexicon(paths.ca_lexicon), LoadRules(paths.ca_rules));
      if (SerializeSegments(segmented, SegmentFormat::kBrackets) !=
          ReadFile(paths.System(name))) {
        throw ValidationError("segmenter output differs from " + name +
                              ".system.seg");
      }
      return std::to_string(doc.sentences.size()) + " sentences";
    });
  }
  return report;
}

}  // namespace catseg
