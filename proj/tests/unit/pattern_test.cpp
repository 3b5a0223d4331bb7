// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "isi/pattern.hpp"

#include <gtest/gtest.h>

#include <set>

namespace isi {
namespace {

TEST(IndexPattern, EqualPairs) {
  const IndexPattern p{{1, 2, 1, 1}};
  EXPECT_EQ(p.k(), 4u);
  EXPECT_EQ(p.max_component(), 2u);
  const auto pairs = p.equal_pairs();
  const std::vector<std::pair<unsigned, unsigned>> expected = {{0, 2}, {0, 3}, {2, 3}};
  EXPECT_EQ(pairs, expected);
  EXPECT_THROW((IndexPattern{{1, 0}}).validate(), std::invalid_argument);
  EXPECT_THROW(IndexPattern{}.validate(), std::invalid_argument);
}

TEST(EqualityPattern, ParseForms) {
  EXPECT_EQ(EqualityPattern::parse("distinct:3"), EqualityPattern::distinct(3));
  EXPECT_EQ(EqualityPattern::parse("equal:2"), EqualityPattern::all_equal(2));
  EXPECT_EQ(EqualityPattern::parse("5,7,5"), EqualityPattern::parse("1,2,1"));
  EXPECT_EQ(EqualityPattern::parse("1,2,1").label(), "1,2,1");
  EXPECT_THROW(EqualityPattern::parse("distinct:x"), std::invalid_argument);
  EXPECT_THROW(EqualityPattern::parse(""), std::invalid_argument);
}

TEST(EqualityPattern, SymmetriesPreserveGroups) {
  const EqualityPattern p = EqualityPattern::parse("1,2,1,1");
  const auto sym = p.symmetries();
  ASSERT_EQ(sym.size(), 6u);  // 3! on the group {0, 2, 3}
  EXPECT_EQ(sym.front(), (std::vector<unsigned>{0, 1, 2, 3}));
  std::set<std::vector<unsigned>> unique(sym.begin(), sym.end());
  EXPECT_EQ(unique.size(), sym.size());
  for (const auto& s : sym) {
    for (unsigned r = 0; r < 4; ++r) EXPECT_EQ(p.group[s[r]], p.group[r]);
  }
  EXPECT_EQ(EqualityPattern::distinct(4).symmetries().size(), 1u);
  EXPECT_EQ(EqualityPattern::all_equal(4).symmetries().size(), 24u);
}

}  // namespace
}  // namespace isi
