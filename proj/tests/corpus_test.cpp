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

#include "ofansiv/corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "ofansiv/error.hpp"
#include "ofansiv/normalize.hpp"
#include "oracles/text_oracles.hpp"
#include "random_tweets.hpp"

using namespace ofansiv;

namespace {

Dataset parse(const std::string& text, Schema schema) {
  std::istringstream in(text);
  return parse_tsv(in, schema, "mem");
}

std::pair<ErrorKind, std::size_t> parse_error(const std::string& text, Schema schema) {
  try {
    parse(text, schema);
  } catch (const LocatedError& e) {
    return {e.kind(), e.line()};
  }
  ADD_FAILURE() << "no error for: " << text;
  return {ErrorKind::kIo, 0};
}

Dataset with_counts(std::size_t neg, std::size_t pos) {
  Dataset d;
  d.split_name = "dev";
  for (std::size_t i = 0; i < neg; ++i) {
    d.records.push_back({"neg " + std::to_string(i), std::string(kNotOff), std::nullopt});
  }
  for (std::size_t i = 0; i < pos; ++i) {
    d.records.push_back({"pos " + std::to_string(i), std::string(kOff), std::nullopt});
  }
  return d;
}

std::map<std::string, std::size_t> multiset(const Dataset& d) {
  std::map<std::string, std::size_t> m;
  for (const auto& r : d.records) ++m[r.text + "\t" + r.label_a.value_or("")];
  return m;
}

std::map<std::string, std::size_t> label_counts(const Dataset& d, Task task) {
  std::map<std::string, std::size_t> m;
  for (const auto& l : d.labels(task)) ++m[l];
  return m;
}

}  // namespace

TEST(Tsv, TaskAFile) {
  const Dataset d = parse("@USER كلب URL\tOFF\nمرحبا<LF>بك\tNOT_OFF\n", Schema::kTaskA);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.records[0].text, "@USER كلب URL");
  EXPECT_EQ(d.records[1].text, "مرحبا<LF>بك");
  EXPECT_EQ(d.labels(Task::kA), (std::vector<std::string>{"OFF", "NOT_OFF"}));
  EXPECT_THROW(d.labels(Task::kB), Error);
}

TEST(Tsv, HierarchyViolation) {
  auto [kind, line] = parse_error("ok\tOFF\tHS\ntweet\tHS\tNOT_OFF\n", Schema::kBoth);
  EXPECT_EQ(kind, ErrorKind::kHierarchy);
  EXPECT_EQ(line, 2u);
}

TEST(Tsv, SchemaAndLabelErrors) {
  EXPECT_EQ(parse_error("a\tOFF\tHS\n", Schema::kTaskA).first, ErrorKind::kSchema);
  EXPECT_EQ(parse_error("a\n", Schema::kTaskA).first, ErrorKind::kSchema);
  EXPECT_EQ(parse_error("a\tOFFENSIVE\n", Schema::kTaskA).first, ErrorKind::kLabel);
  EXPECT_EQ(parse_error("a\tHS\n", Schema::kTaskA).first, ErrorKind::kLabel);
  EXPECT_EQ(parse_error("a\tOFF\n", Schema::kTaskB).first, ErrorKind::kLabel);
  EXPECT_EQ(parse_error("a\tb\n", Schema::kTextOnly).first, ErrorKind::kSchema);
}

TEST(Tsv, BothOrdersAccepted) {
  const Dataset d = parse("a\tOFF\tHS\nb\tNOT_OFF\tNOT_HS\n", Schema::kBoth);
  EXPECT_EQ(d.labels(Task::kB), (std::vector<std::string>{"HS", "NOT_HS"}));
}

TEST(Tsv, RoundTrip) {
  Dataset d;
  d.records = {{"@USER كلب 😂 URL", std::string(kOff), std::string(kHs)},
               {"مرحبا<LF>بك", std::string(kNotOff), std::string(kNotHs)}};
  std::ostringstream out;
  write_tsv(d, out);
  Dataset back = parse(out.str(), Schema::kBoth);
  back.split_name = d.split_name;
  EXPECT_EQ(back, d);
}

TEST(Tsv, WriterRejectsTabs) {
  Dataset d;
  d.records = {{"a\tb", std::string(kOff), std::nullopt}};
  std::ostringstream out;
  EXPECT_THROW(write_tsv(d, out), Error);
}

TEST(Upsample, ForcedCase) {
  const Dataset d = with_counts(5, 1);
  const Dataset u = upsample_minority(d, Task::kA, 1);
  auto counts = label_counts(u, Task::kA);
  EXPECT_EQ(counts["OFF"], 5u);
  EXPECT_EQ(counts["NOT_OFF"], 5u);
  for (const auto& r : u.records) {
    if (r.label_a == "OFF") {
      EXPECT_EQ(r.text, "pos 0");
    }
  }
}

TEST(Upsample, BalancedIsUnchangedMultiset) {
  const Dataset d = with_counts(3, 3);
  EXPECT_EQ(multiset(upsample_minority(d, Task::kA, 9)), multiset(d));
}

TEST(Upsample, DevCounts) {
  const Dataset d = with_counts(821, 179);
  const Dataset u = upsample_minority(d, Task::kA, 42);
  auto counts = label_counts(u, Task::kA);
  EXPECT_EQ(counts["NOT_OFF"], 821u);
  EXPECT_EQ(counts["OFF"], 821u);
  auto before = multiset(d), after = multiset(u);
  for (const auto& [k, n] : before) EXPECT_GE(after[k], n) << k;
  EXPECT_EQ(upsample_minority(d, Task::kA, 42), u);
}

TEST(Upsample, MajorityPositiveAndSingleClass) {
  const Dataset d = with_counts(2, 7);
  auto counts = label_counts(upsample_minority(d, Task::kA, 3), Task::kA);
  EXPECT_EQ(counts["NOT_OFF"], 7u);
  EXPECT_EQ(counts["OFF"], 7u);
  try {
    upsample_minority(with_counts(4, 0), Task::kA, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingleClassData);
  }
}

TEST(MicroCorpus, ShapeAndDeterminism) {
  const SplitCorpus a = micro_corpus(7), b = micro_corpus(7);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  EXPECT_NE(micro_corpus(8).train, a.train);
  for (const Dataset* d : {&a.train, &a.test}) {
    auto counts = label_counts(*d, Task::kA);
    EXPECT_EQ(counts["NOT_OFF"], 80u);
    EXPECT_EQ(counts["OFF"], 20u);
    for (const auto& r : d->records) {
      ASSERT_TRUE(r.label_b.has_value());
      if (r.label_b == "HS") {
        EXPECT_EQ(r.label_a, "OFF");
      }
    }
  }
  const Dataset all = stratified_micro_corpus(7);
  ASSERT_EQ(all.size(), 200u);
  EXPECT_TRUE(std::equal(a.train.records.begin(), a.train.records.end(), all.records.begin()));
}

TEST(MicroCorpus, RoundTripsThroughTsv) {
  const Dataset d = stratified_micro_corpus(42);
  std::ostringstream out;
  write_tsv(d, out);
  Dataset back = parse(out.str(), Schema::kBoth);
  back.split_name = d.split_name;
  EXPECT_EQ(back, d);
}

TEST(MicroCorpus, TrainAndTestCueFormsAreDisjointAndCovered) {
  const MicroCues& c = micro_cues();
  const auto lex = testkit::shipped_lexicons();
  auto disjoint = [](const auto& a, const auto& b) {
    for (const auto& x : a) {
      if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    }
    return true;
  };
  EXPECT_TRUE(disjoint(c.train_animals, c.test_animals));
  EXPECT_TRUE(disjoint(c.train_insults, c.test_insults));
  EXPECT_TRUE(disjoint(c.train_emoji, c.test_emoji));
  for (const auto* v : {&c.train_animals, &c.test_animals}) {
    for (const auto& w : *v) EXPECT_TRUE(lex->animal->contains(w)) << w;
  }
  for (const auto* v : {&c.train_insults, &c.test_insults}) {
    for (const auto& w : *v) EXPECT_TRUE(lex->dialect->contains(w)) << w;
  }
  for (const auto* v : {&c.train_emoji, &c.test_emoji}) {
    for (const auto& w : *v) EXPECT_TRUE(lex->emoji->contains(w)) << w;
  }
}

TEST(MicroCorpus, GeneratorAudit) {
  // After the full pipeline every offensive tweet carries a category word
  // and no neutral tweet does.
  const Pipeline p({StageSet::all(), testkit::shipped_lexicons()});
  const std::string markers[] = {"حيوان", "غبي", "غاضب"};
  for (std::uint64_t seed : {1u, 7u, 42u}) {
    for (const auto& r : stratified_micro_corpus(seed).records) {
      const auto toks = oracle::split_ws(p.run(r.text).text);
      const bool marked = std::any_of(std::begin(markers), std::end(markers), [&](const auto& m) {
        return std::find(toks.begin(), toks.end(), m) != toks.end();
      });
      EXPECT_EQ(marked, r.label_a == "OFF") << r.text;
    }
  }
}

TEST(Names, SchemaTaskLabels) {
  EXPECT_EQ(parse_schema("both"), Schema::kBoth);
  EXPECT_EQ(parse_schema("A"), Schema::kTaskA);
  EXPECT_FALSE(parse_schema("C").has_value());
  EXPECT_EQ(parse_task("B"), Task::kB);
  EXPECT_EQ(positive_label(Task::kA), "OFF");
  EXPECT_EQ(negative_label(Task::kB), "NOT_HS");
}
