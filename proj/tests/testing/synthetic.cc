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

#include "testing/synthetic.h"

#include <array>
#include <tuple>

#include "catseg/fixtures.h"

namespace catseg {
namespace testing {
namespace {

struct Word {
  const char *form;
  const char *lemma;
  const char *tag;
};

constexpr std::array<Word, 34> kVocabulary = {{
    {"el", "el", "DA0MS0"},
    {"un", "un", "DI0MS0"},
    {"test", "test", "NCMS000"},
    {"valors", "valor", "NCMP000"},
    {"sistema", "sistema", "NCMS000"},
    {"és", "ésser", "VSIP3S0"},
    {"mostren", "mostrar", "VMIP3P0"},
    {"augmentaren", "augmentar", "VMIS3P0"},
    {"tingui", "tenir", "VMSP3S0"},
    {"mira", "mirar", "VMM02S0"},
    {"realitzar", "realitzar", "VMN0000"},
    {"fent", "fer", "VMG0000"},
    {"fet", "fer", "VMP00SM"},
    {"i", "i", "CC"},
    {"o", "o", "CC"},
    {"però", "però", "CC"},
    {"que", "que", "CS"},
    {"de", "de", "SPS00"},
    {"del", "del", "SPCMS"},
    {"en", "en", "SPS00"},
    {"després", "després", "RG"},
    {"aleshores", "aleshores", "RG"},
    {"tot", "tot", "RG"},
    {"seguit", "seguit", "RG"},
    {"com", "com", "CS"},
    {"a", "a", "SPS00"},
    {"mostra", "mostra", "NCFS000"},
    {",", ",", "Fc"},
    {".", ".", "Fp"},
    {"(", "(", "Fpa"},
    {")", ")", "Fpt"},
    {"-", "-", "Fg"},
    {"doncs", "doncs", "CS"},
    {"així", "així", "RG"},
}};

// Multiword lexicon patterns, spliced in now and then so they actually
// occur.
const std::vector<std::vector<Word>> kPhrases = {
    {{"tot", "tot", "RG"}, {"i", "i", "CC"}, {"que", "que", "CS"}},
    {{"com", "com", "CS"}, {"a", "a", "SPS00"}, {"mostra", "mostra", "NCFS000"}},
    {{"després", "després", "RG"}, {"de", "de", "SPS00"},
     {"realitzar", "realitzar", "VMN0000"}},
    {{"així", "així", "RG"}, {"doncs", "doncs", "CS"}},
};

std::string Capitalize(const std::string &form) {
  if (form == "després") return "Després";
  if (!form.empty() && form[0] >= 'a' && form[0] <= 'z') {
    std::string out = form;
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
  }
  return form;
}

}  // namespace

std::string DataPath(const std::string &relative) {
  return std::string(CATSEG_DATA_DIR) + "/" + relative;
}

Lexicon SeedLexicon() { return LoadLexicon(FixturePaths(CATSEG_DATA_DIR).ca_lexicon); }

RuleSet CatalanRules() { return LoadRules(FixturePaths(CATSEG_DATA_DIR).ca_rules); }

RuleSet RichRules() {
  return ParseRules(R"(language ca
rule marker priority 0 trigger cat:disc-mk action before
rule marker_amb priority 1 trigger cat:disc-mk-amb action before
rule marker_after priority 2 trigger cat:disc-mk action after guard VERB_LEFT
rule coord_i priority 10 trigger conj:i action before guard FINITE_VERB_RIGHT
rule coord_o priority 10 trigger conj:o action before guard FINITE_VERB_RIGHT
rule coord_pero priority 10 trigger conj:però action before guard FINITE_VERB_RIGHT
rule paren_open priority 10 trigger punct:open action before guard VERB_ENCLOSED
rule paren_close priority 10 trigger punct:close action after guard VERB_ENCLOSED
rule que_clause priority 12 trigger conj:que action before guard VERB_RIGHT guard VERB_LEFT
rule despres_word priority 15 trigger conj:després action before guard NONFINITE_AFTER_DE
rule en_review priority 20 trigger conj:en action before guard MANUAL_REVIEW
rule el_off priority 20 trigger conj:el action before disabled
rule comma_after priority 30 trigger conj:, action after guard FINITE_VERB_RIGHT guard VERB_LEFT
)");
}

std::vector<std::string> PassageNames() {
  return FixturePaths(CATSEG_DATA_DIR).CorpusNames();
}

VerticalDocument LoadPassage(const std::string &name) {
  return ParseVertical(ReadFile(FixturePaths(CATSEG_DATA_DIR).Vertical(name)));
}

Sentence RandomSentence(std::mt19937 &rng, int max_length) {
  std::uniform_int_distribution<int> length_dist(1, max_length);
  std::uniform_int_distribution<size_t> word_dist(0, kVocabulary.size() - 1);
  std::uniform_int_distribution<size_t> phrase_dist(0, kPhrases.size() - 1);
  std::uniform_int_distribution<int> percent(0, 99);

  const int length = length_dist(rng);
  std::vector<std::tuple<std::string, std::string, std::string>> triples;
  while (static_cast<int>(triples.size()) < length) {
    const int room = length - static_cast<int>(triples.size());
    if (percent(rng) < 12) {
      const std::vector<Word> &phrase = kPhrases[phrase_dist(rng)];
      if (static_cast<int>(phrase.size()) <= room) {
        for (const Word &w : phrase) triples.emplace_back(w.form, w.lemma, w.tag);
        continue;
      }
    }
    const Word &w = kVocabulary[word_dist(rng)];
    triples.emplace_back(w.form, w.lemma, w.tag);
  }
  for (auto &triple : triples) {
    if (percent(rng) < 8) std::get<0>(triple) = Capitalize(std::get<0>(triple));
  }
  return MakeSentence(triples);
}

VerticalDocument RandomDocument(std::mt19937 &rng, int max_sentences,
                                int max_length) {
  std::uniform_int_distribution<int> count(1, max_sentences);
  VerticalDocument doc;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) doc.sentences.push_back(RandomSentence(rng, max_length));
  return doc;
}

BoundarySet RandomBoundaries(std::mt19937 &rng,
                             const std::vector<Sentence> &sentences) {
  BoundarySet boundaries(SentenceLengths(sentences));
  std::bernoulli_distribution coin(0.3);
  for (int s = 0; s < static_cast<int>(sentences.size()); ++s) {
    for (int g = 1; g < sentences[s].size(); ++g) {
      if (coin(rng)) boundaries.Insert(s, g);
    }
  }
  return boundaries;
}

}  // namespace testing
}  // namespace catseg
