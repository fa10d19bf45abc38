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

#ifndef CATSEG_TESTS_TESTING_SYNTHETIC_H_
#define CATSEG_TESTS_TESTING_SYNTHETIC_H_

#include <random>
#include <string>
#include <vector>

#include "catseg/document.h"
#include "catseg/lexicon.h"
#include "catseg/rules.h"
#include "catseg/vertical.h"

namespace catseg {
namespace testing {

std::string DataPath(const std::string &relative);

Lexicon SeedLexicon();
RuleSet CatalanRules();

// Rules touching every trigger kind, action and guard, for oracle checks.
RuleSet RichRules();

std::vector<std::string> PassageNames();
VerticalDocument LoadPassage(const std::string &name);

// A tagged sentence of 1..max_length tokens over a small closed vocabulary
// that includes lexicon markers, conjunctions, brackets and verbs of every
// mood. Forms are sometimes capitalized.
Sentence RandomSentence(std::mt19937 &rng, int max_length = 12);
VerticalDocument RandomDocument(std::mt19937 &rng, int max_sentences = 5,
                                int max_length = 12);
// Random boundary set over the document's sentences.
BoundarySet RandomBoundaries(std::mt19937 &rng,
                             const std::vector<Sentence> &sentences);

}  // namespace testing
}  // namespace catseg

#endif  // CATSEG_TESTS_TESTING_SYNTHETIC_H_
