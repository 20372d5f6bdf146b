// Copyright 2026 The Ofansiv Authors
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

// Integrity of the shipped lexicon files.

#include <gtest/gtest.h>

#include "ofansiv/normalize.hpp"
#include "ofansiv/unicode.hpp"
#include "random_tweets.hpp"

using namespace ofansiv;
using testkit::shipped_lexicons;

TEST(ShippedLexicons, AllPresent) {
  const auto set = shipped_lexicons();
  EXPECT_TRUE(set->emoji && set->emoticon && set->dialect && set->animal && set->stopword);
}

TEST(ShippedLexicons, MinimumCounts) {
  const auto set = shipped_lexicons();
  EXPECT_GE(set->emoji->size(), 1374u);
  EXPECT_GE(set->emoticon->size(), 140u);
  EXPECT_GE(set->animal->size(), 335u);
}

TEST(ShippedLexicons, KeysAreCanonical) {
  const auto set = shipped_lexicons();
  for (const auto* lex : {&set->emoji, &set->emoticon, &set->dialect, &set->animal, &set->stopword}) {
    for (const auto& [key, entry] : (*lex)->entries()) {
      EXPECT_TRUE(unicode::is_nfc(key)) << key;
      EXPECT_EQ(unicode::collapse_whitespace(key), key) << key;
    }
  }
}

TEST(ShippedLexicons, PaddingIsFlaggedAndNotTheWholeTable) {
  const auto set = shipped_lexicons();
  EXPECT_GT(set->emoji->padding_count(), 0u);
  EXPECT_LT(set->emoji->padding_count(), set->emoji->size());
  EXPECT_TRUE(set->emoji->contains("😂"));
  EXPECT_FALSE(set->emoji->entries().at("😂").padding);
}

TEST(ShippedLexicons, AnimalsMapToCategoryWord) {
  for (const auto& [key, entry] : shipped_lexicons()->animal->entries()) {
    EXPECT_EQ(entry.replacement, kAnimalWord) << key;
  }
}

TEST(ShippedLexicons, DialectAndAnimalKeysAreArabicWords) {
  const auto set = shipped_lexicons();
  for (const auto* lex : {&set->dialect, &set->animal}) {
    for (const auto& [key, entry] : (*lex)->entries()) {
      EXPECT_TRUE(unicode::contains_arabic(key)) << key;
      EXPECT_EQ(key.find(' '), std::string::npos) << key;
    }
  }
}

TEST(ShippedLexicons, FullPipelineAcceptsThem) {
  EXPECT_NO_THROW(Pipeline({StageSet::all(), shipped_lexicons()}));
}
