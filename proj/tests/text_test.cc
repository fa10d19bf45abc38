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

#include "catseg/text.h"

#include <gtest/gtest.h>

namespace catseg {
namespace {

TEST(TextTest, ToLowerFoldsAccentedCapitals) {
  EXPECT_EQ(ToLower("Després"), "després");
  EXPECT_EQ(ToLower("ÀÉÈÍÏÒÓÚÜÇ"), "àéèíïòóúüç");
  EXPECT_EQ(ToLower("ĽÑ"), "ľñ");
  EXPECT_EQ(ToLower("l·L"), "l·l");
}

TEST(TextTest, SplitWhitespaceDropsEmptyPieces) {
  EXPECT_EQ(SplitWhitespace("  a \tb\n c  "),
            (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(SplitWhitespace(" \t ").empty());
}

TEST(TextTest, SplitKeepsEmptyFields) {
  EXPECT_EQ(Split("a\t\tb", '\t'), (std::vector<std::string>{"a", "", "b"}));
}

TEST(TextTest, SplitLinesStripsCarriageReturns) {
  EXPECT_EQ(SplitLines("a\r\nb\n"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(SplitLines("a\n\nb"), (std::vector<std::string>{"a", "", "b"}));
}

TEST(TextTest, TrimAndJoin) {
  EXPECT_EQ(Trim("  x y \t"), "x y");
  EXPECT_EQ(Join({"a", "b", "c"}, ", "), "a, b, c");
  EXPECT_EQ(Join({}, ","), "");
}

}  // namespace
}  // namespace catseg
