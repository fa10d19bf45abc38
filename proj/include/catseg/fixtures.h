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

#ifndef CATSEG_FIXTURES_H_
#define CATSEG_FIXTURES_H_

#include <string>
#include <vector>

namespace catseg {

// Layout of the shipped data directory.
//
//   lexicon/ca.seed.tsv     Catalan seed lexicon
//   lexicon/es.seed.tsv     Spanish seed lexicon
//   lexicon/ca.ported.tsv   es.seed.tsv ported through maps/es2ca.tsv
//   rules/ca.rules          Catalan rule set
//   rules/es.rules          Spanish rule set
//   rules/ca.ported.rules   es.rules ported through maps/es2ca.tsv
//   maps/es2ca.tsv          Spanish to Catalan translation map
//   corpus/NAME.vrt         tagged passage
//   corpus/NAME.gold.seg    its correct segmentation
//   corpus/NAME.system.seg  what the segmenter produces for it
struct FixturePaths {
  explicit FixturePaths(std::string root);

  std::string root;
  std::string ca_lexicon;
  std::string es_lexicon;
  std::string ca_ported_lexicon;
  std::string ca_rules;
  std::string es_rules;
  std::string ca_ported_rules;
  std::string es2ca_map;
  std::string corpus_dir;

  // Sorted stems NAME of every corpus/NAME.vrt.
  std::vector<std::string> CorpusNames() const;
  std::string Vertical(const std::string &name) const;
  std::string Gold(const std::string &name) const;
  std::string System(const std::string &name) const;
};

struct FixtureCheck {
  std::string name;
  bool ok = false;
  std::string message;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;

  bool ok() const;
  std::string Format() const;
};

// Parses and cross-checks every fixture: lexicons, rules and map load; every
// .seg aligns with its .vrt; the ported files equal a fresh port; and
// segmenting each passage reproduces its .system.seg byte for byte. Never
// throws for fixture problems; they become failed checks.
FixtureReport ValidateFixtures(const std::string &root);

}  // namespace catseg

#endif  // CATSEG_FIXTURES_H_
