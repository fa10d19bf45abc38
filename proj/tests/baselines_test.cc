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

#include "catseg/baselines.h"

#include <gtest/gtest.h>

#include <random>

#include "catseg/eval.h"
#include "catseg/gold.h"
#include "testing/synthetic.h"

namespace catseg {
namespace {

TEST(CoordinationBaselineTest, CostSentenceSplitsBeforeI) {
  const SegmentedDocument d = CoordinationBaseline(testing::LoadPassage("cost"));
  EXPECT_EQ(d.boundaries().gaps(0), (std::set<int>{7}));
  EXPECT_EQ(d.Segments(0).size(), 2u);
}

TEST(CoordinationBaselineTest, CoordinationPassageSplitsLikeTheSegmenter) {
  const SegmentedDocument d =
      CoordinationBaseline(testing::LoadPassage("coordination"));
  EXPECT_EQ(d.boundaries().gaps(0), (std::set<int>{8}));
}

TEST(CoordinationBaselineTest, NoConjunctionIsOneSegment) {
  const SegmentedDocument d = CoordinationBaseline(testing::LoadPassage("despres"));
  EXPECT_EQ(d.num_segments(), 2);
}

TEST(CoordinationBaselineTest, SentenceInitialConjunctionIsNotABoundary) {
  VerticalDocument doc{{}, {MakeSentence({{"I", "i", "CC"},
                                          {"ve", "venir", "VMIP3S0"}})}};
  EXPECT_EQ(CoordinationBaseline(doc).num_segments(), 1);
}

TEST(SentenceBaselineTest, OneSegmentPerSentence) {
  std::mt19937 rng(1);
  VerticalDocument three;
  for (int i = 0; i < 3; ++i) three.sentences.push_back(testing::RandomSentence(rng));
  EXPECT_EQ(SentenceBaseline(three).num_segments(), 3);
  EXPECT_EQ(SentenceBaseline(VerticalDocument{}).num_segments(), 0);
  int sentences = 0, segments = 0;
  for (const std::string &name : testing::PassageNames()) {
    const VerticalDocument doc = testing::LoadPassage(name);
    sentences += static_cast<int>(doc.sentences.size());
    segments += SentenceBaseline(doc).num_segments();
  }
  EXPECT_EQ(segments, sentences);
}

TEST(SentenceBaselineTest, SegmentsEqualSentencesProperty) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const VerticalDocument doc = testing::RandomDocument(rng, 8);
    const SegmentedDocument d = SentenceBaseline(doc);
    EXPECT_EQ(d.num_segments(), static_cast<int>(doc.sentences.size()));
  }
}

// Precision 1.0 under whole-sentence credit, and only with that flag.
TEST(SentenceBaselineTest, PerfectPrecisionOnlyWithSentenceCredit) {
  std::mt19937 rng(3);
  int below_one = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const VerticalDocument doc = testing::RandomDocument(rng, 8);
    const GoldAnnotation gold = ToGoldAnnotation(
        SegmentedDocument(doc.sentences, testing::RandomBoundaries(rng, doc.sentences)));
    const SegmentedDocument system = SentenceBaseline(doc);
    EXPECT_DOUBLE_EQ(BoundaryPrf(system, gold, EvalMode::kSegmentExact,
                                 {.sentences_count_as_correct = true})
                         .precision,
                     1.0);
    if (BoundaryPrf(system, gold, EvalMode::kSegmentExact).precision < 1.0) {
      ++below_one;
    }
  }
  EXPECT_GT(below_one, 0);
}

}  // namespace
}  // namespace catseg
