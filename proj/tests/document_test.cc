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

#include "catseg/document.h"

#include <gtest/gtest.h>

#include <random>

#include "catseg/error.h"
#include "catseg/gold.h"
#include "catseg/fixtures.h"
#include "catseg/vertical.h"
#include "testing/synthetic.h"

namespace catseg {
namespace {

Sentence Words(int n) {
  std::vector<std::tuple<std::string, std::string, std::string>> triples;
  for (int i = 0; i < n; ++i) triples.emplace_back("w", "w", "NCMS000");
  return MakeSentence(triples);
}

TEST(TagTest, FiniteVerbReadsMoodPosition) {
  EXPECT_TRUE(IsFiniteVerbTag("VMIP3P0"));
  EXPECT_TRUE(IsFiniteVerbTag("VSSP3S0"));
  EXPECT_TRUE(IsFiniteVerbTag("VMM02S0"));
  EXPECT_FALSE(IsFiniteVerbTag("VMN0000"));
  EXPECT_FALSE(IsFiniteVerbTag("NCMS000"));
  EXPECT_TRUE(IsNonFiniteVerbTag("VMN0000"));
  EXPECT_TRUE(IsNonFiniteVerbTag("VMG0000"));
  EXPECT_TRUE(IsNonFiniteVerbTag("VMP00SM"));
  EXPECT_FALSE(IsNonFiniteVerbTag("VMIP3P0"));
  EXPECT_TRUE(IsVerbTag("V"));
  EXPECT_FALSE(IsFiniteVerbTag("V"));
  EXPECT_TRUE(IsCoordinatingConjunctionTag("CC"));
  EXPECT_FALSE(IsCoordinatingConjunctionTag("CS"));
  EXPECT_TRUE(IsPunctuationTag("Fc"));
}

TEST(SentenceTest, MakeSentenceNumbersTokensAndLowersLemmas) {
  Sentence s = MakeSentence({{"Té", "Tenir", "VMIP3S0"}, {".", ".", "Fp"}});
  ASSERT_EQ(s.size(), 2);
  EXPECT_EQ(s.tokens[1].index, 1);
  EXPECT_EQ(s.tokens[0].lemma, "tenir");
}

TEST(SentenceTest, ValidateRejectsBadChunks) {
  Sentence s = Words(3);
  s.chunks.push_back({"disc-mk", {2, 4}});
  EXPECT_THROW(ValidateSentence(s), ValidationError);
  s.chunks = {{"disc-mk", {1, 1}}};
  EXPECT_THROW(ValidateSentence(s), ValidationError);
}

TEST(BoundarySetTest, RejectsSentenceEdges) {
  BoundarySet b({4});
  EXPECT_THROW(b.Insert(0, 0), ValidationError);
  EXPECT_THROW(b.Insert(0, 4), ValidationError);
  EXPECT_THROW(b.Insert(1, 2), ValidationError);
  EXPECT_TRUE(b.Insert(0, 2));
  EXPECT_FALSE(b.Insert(0, 2));
  EXPECT_EQ(b.size(), 1);
  EXPECT_TRUE(b.Erase(0, 2));
  EXPECT_EQ(b.size(), 0);
}

TEST(SpansTest, SpansBetweenTilesTheSentence) {
  EXPECT_EQ(SpansBetween({}, 3), (std::vector<Span>{{0, 3}}));
  EXPECT_EQ(SpansBetween({1, 3}, 5),
            (std::vector<Span>{{0, 1}, {1, 3}, {3, 5}}));
  EXPECT_TRUE(SpansBetween({}, 0).empty());
}

TEST(SegmentedDocumentTest, RejectsMismatchedBoundaries) {
  EXPECT_THROW(SegmentedDocument({Words(3)}, BoundarySet({4})),
               ValidationError);
  EXPECT_THROW(SegmentedDocument({Words(0)}, BoundarySet({0})),
               ValidationError);
}

// Segments tile each sentence and number one more than its boundaries.
TEST(SegmentedDocumentTest, SegmentsTileSentencesProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    VerticalDocument v = testing::RandomDocument(rng);
    BoundarySet b = testing::RandomBoundaries(rng, v.sentences);
    SegmentedDocument d(v.sentences, b);
    for (int s = 0; s < d.num_sentences(); ++s) {
      const std::vector<Span> segments = d.Segments(s);
      ASSERT_EQ(static_cast<int>(segments.size()),
                static_cast<int>(b.gaps(s).size()) + 1);
      std::vector<Token> rebuilt;
      for (const Span &span : segments) {
        ASSERT_LT(span.begin, span.end);
        for (int i = span.begin; i < span.end; ++i) {
          rebuilt.push_back(d.sentences()[s].tokens[i]);
        }
      }
      EXPECT_EQ(rebuilt, d.sentences()[s].tokens);
    }
  }
}

TEST(CorpusStatsTest, EmptyCorpusIsAnError) {
  try {
    ComputeCorpusStats({});
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_STREQ(e.what(), "empty corpus");
  }
}

// Totals hand-counted from the three passages before implementation.
TEST(CorpusStatsTest, MicroCorpusHandCount) {
  std::vector<SegmentedDocument> gold;
  const FixturePaths paths(CATSEG_DATA_DIR);
  for (const std::string &name : testing::PassageNames()) {
    VerticalDocument v = testing::LoadPassage(name);
    gold.push_back(ToSegmentedDocument(
        v, ParseGold(ReadFile(paths.Gold(name)), v)));
  }
  const CorpusStats stats = ComputeCorpusStats(gold);
  EXPECT_EQ(stats.num_texts, 3);
  EXPECT_EQ(stats.words.total, 76);
  EXPECT_EQ(stats.tokens.total, 84);
  EXPECT_EQ(stats.sentences.total, 4);
  EXPECT_EQ(stats.segments.total, 6);
  EXPECT_EQ(stats.words.max_per_text, 34);
  EXPECT_EQ(stats.words.min_per_text, 10);
  EXPECT_EQ(stats.sentences.max_per_text, 2);
  EXPECT_EQ(stats.sentences.min_per_text, 1);
  EXPECT_NEAR(stats.segments.average, 2.0, 1e-12);
}

// Twenty documents with fixed word, sentence and segment totals.
TEST(CorpusStatsTest, TableShapedCorpus) {
  auto doc = [](int words, int sentences, int segments) {
    std::vector<Sentence> ss;
    BoundarySet placeholder;
    std::vector<int> lengths;
    for (int s = 0; s < sentences; ++s) {
      const int n = words / sentences + (s < words % sentences ? 1 : 0);
      ss.push_back(Words(n));
      lengths.push_back(n);
    }
    BoundarySet b(lengths);
    int extra = segments - sentences;
    for (int s = 0; s < sentences && extra > 0; ++s) {
      for (int g = 1; g < lengths[s] && extra > 0; ++g, --extra) b.Insert(s, g);
    }
    return SegmentedDocument(ss, b);
  };
  std::vector<SegmentedDocument> corpus;
  corpus.push_back(doc(317, 17, 24));
  corpus.push_back(doc(91, 4, 8));
  for (int i = 0; i < 18; ++i) {
    corpus.push_back(doc(i < 16 ? 237 : 238, 9, i < 14 ? 14 : 13));
  }
  const CorpusStats stats = ComputeCorpusStats(corpus);
  EXPECT_EQ(stats.num_texts, 20);
  EXPECT_EQ(stats.words.total, 4676);
  EXPECT_EQ(stats.sentences.total, 183);
  EXPECT_EQ(stats.segments.total, 280);
  EXPECT_NEAR(stats.words.average, 233.80, 0.005);
  EXPECT_NEAR(stats.sentences.average, 9.15, 0.005);
  EXPECT_NEAR(stats.segments.average, 14.00, 0.005);
  EXPECT_EQ(stats.words.max_per_text, 317);
  EXPECT_EQ(stats.words.min_per_text, 91);
}

// Totals equal an independent per-document recount.
TEST(CorpusStatsTest, TotalsMatchIndependentCountProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SegmentedDocument> corpus;
    int words = 0, tokens = 0, sentences = 0, segments = 0;
    std::uniform_int_distribution<int> docs(1, 6);
    const int n = docs(rng);
    for (int d = 0; d < n; ++d) {
      VerticalDocument v = testing::RandomDocument(rng);
      BoundarySet b = testing::RandomBoundaries(rng, v.sentences);
      for (const Sentence &s : v.sentences) {
        for (const Token &t : s.tokens) {
          ++tokens;
          if (t.tag[0] != 'F') ++words;
        }
      }
      sentences += static_cast<int>(v.sentences.size());
      segments += static_cast<int>(v.sentences.size()) + b.size();
      corpus.emplace_back(v.sentences, b);
    }
    const CorpusStats stats = ComputeCorpusStats(corpus);
    EXPECT_EQ(stats.words.total, words);
    EXPECT_EQ(stats.tokens.total, tokens);
    EXPECT_EQ(stats.sentences.total, sentences);
    EXPECT_EQ(stats.segments.total, segments);
    EXPECT_GE(stats.segments.total, stats.sentences.total);
    EXPECT_DOUBLE_EQ(stats.segments.average,
                     static_cast<double>(segments) / n);
  }
}

}  // namespace
}  // namespace catseg
