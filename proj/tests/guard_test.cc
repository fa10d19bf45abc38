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

#include <gtest/gtest.h>

#include "catseg/error.h"

namespace catseg {
namespace {

Sentence Tags(const std::vector<std::pair<std::string, std::string>> &words) {
  std::vector<std::tuple<std::string, std::string, std::string>> triples;
  for (const auto &[form, tag] : words) triples.emplace_back(form, form, tag);
  return MakeSentence(triples);
}

TEST(GuardNameTest, NamesRoundTrip) {
  for (Guard guard : kAllGuards) {
    EXPECT_EQ(ParseGuard(GuardName(guard)), guard);
  }
  EXPECT_FALSE(FindGuard("NO_SUCH_GUARD").has_value());
  EXPECT_THROW(ParseGuard("NO_SUCH_GUARD"), ConfigError);
}

TEST(GuardTest, FiniteVerbRightIgnoresInfinitives) {
  Sentence s = Tags({{"a", "NC"}, {"i", "CC"}, {"fer", "VMN0000"},
                     {"és", "VSIP3S0"}});
  SentenceFacts facts(s);
  EXPECT_TRUE(EvaluateGuard(Guard::kFiniteVerbRight, facts, {1, 2}, {0, 4}));
  EXPECT_FALSE(EvaluateGuard(Guard::kFiniteVerbRight, facts, {1, 2}, {0, 3}));
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbRight, facts, {1, 2}, {0, 3}));
  EXPECT_FALSE(EvaluateGuard(Guard::kVerbLeft, facts, {1, 2}, {0, 4}));
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbLeft, facts, {3, 4}, {0, 4}));
  EXPECT_FALSE(EvaluateGuard(Guard::kVerbLeft, facts, {3, 4}, {3, 4}));
}

TEST(GuardTest, NonFiniteAfterDe) {
  Sentence marker = Tags({{"després", "RG"}, {"de", "SPS00"},
                          {"realitzar", "VMN0000"}, {"un", "DI0MS0"}});
  SentenceFacts marker_facts(marker);
  EXPECT_TRUE(EvaluateGuard(Guard::kNonFiniteAfterDe, marker_facts, {0, 1},
                            {0, 4}));
  EXPECT_FALSE(EvaluateGuard(Guard::kNonFiniteAfterDe, marker_facts, {0, 1},
                             {0, 2}));

  Sentence adverb = Tags({{"després", "RG"}, {"del", "SPCMS"},
                          {"test", "NCMS000"}, {"augmentaren", "VMIS3P0"},
                          {"fer", "VMN0000"}});
  SentenceFacts adverb_facts(adverb);
  EXPECT_FALSE(EvaluateGuard(Guard::kNonFiniteAfterDe, adverb_facts, {0, 1},
                             {0, 5}));

  Sentence no_de = Tags({{"després", "RG"}, {"realitzar", "VMN0000"}});
  EXPECT_FALSE(EvaluateGuard(Guard::kNonFiniteAfterDe, SentenceFacts(no_de),
                             {0, 1}, {0, 2}));
}

TEST(GuardTest, ElidedDeCounts) {
  Sentence s = Tags({{"després", "RG"}, {"d'", "SPS00"}, {"anar", "VMN0000"}});
  EXPECT_TRUE(EvaluateGuard(Guard::kNonFiniteAfterDe, SentenceFacts(s), {0, 1},
                            {0, 3}));
}

TEST(GuardTest, VerbEnclosedLooksInsideTheBrackets) {
  Sentence s = Tags({{"a", "NC"}, {"(", "Fpa"}, {"CER", "NP00000"},
                     {")", "Fpt"}, {"(", "Fpa"}, {"és", "VSIP3S0"},
                     {")", "Fpt"}, {"b", "NC"}});
  SentenceFacts facts(s);
  EXPECT_FALSE(EvaluateGuard(Guard::kVerbEnclosed, facts, {1, 2}, {0, 8}));
  EXPECT_FALSE(EvaluateGuard(Guard::kVerbEnclosed, facts, {3, 4}, {0, 8}));
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbEnclosed, facts, {4, 5}, {0, 8}));
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbEnclosed, facts, {6, 7}, {0, 8}));
  EXPECT_FALSE(EvaluateGuard(Guard::kVerbEnclosed, facts, {0, 1}, {0, 8}));
}

TEST(GuardTest, DashesAlternateOpenAndClose) {
  Sentence s = Tags({{"a", "NC"}, {"-", "Fg"}, {"diu", "VMIP3S0"},
                     {"-", "Fg"}, {"b", "NC"}});
  SentenceFacts facts(s);
  EXPECT_EQ(facts.bracket(1), BracketClass::kOpen);
  EXPECT_EQ(facts.bracket(3), BracketClass::kClose);
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbEnclosed, facts, {1, 2}, {0, 5}));
  EXPECT_TRUE(EvaluateGuard(Guard::kVerbEnclosed, facts, {3, 4}, {0, 5}));
}

TEST(GuardTest, ManualReviewNeverHolds) {
  Sentence s = Tags({{"per", "SPS00"}, {"fer", "VMN0000"}});
  EXPECT_FALSE(
      EvaluateGuard(Guard::kManualReview, SentenceFacts(s), {0, 1}, {0, 2}));
}

}  // namespace
}  // namespace catseg
