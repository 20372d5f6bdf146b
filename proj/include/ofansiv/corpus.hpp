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

// Tweet datasets: `text<TAB>label_a[<TAB>label_b]`, no header.
// Placeholders such as @USER, URL and <LF> are kept verbatim on read.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ofansiv {

inline constexpr std::string_view kOff = "OFF";
inline constexpr std::string_view kNotOff = "NOT_OFF";
inline constexpr std::string_view kHs = "HS";
inline constexpr std::string_view kNotHs = "NOT_HS";

enum class Schema { kTextOnly, kTaskA, kTaskB, kBoth };
enum class Task { kA, kB };

std::optional<Schema> parse_schema(std::string_view name);
std::optional<Task> parse_task(std::string_view name);

std::string_view positive_label(Task task);
std::string_view negative_label(Task task);

struct Record {
  std::string text;
  std::optional<std::string> label_a;
  std::optional<std::string> label_b;

  const std::optional<std::string>& label(Task task) const {
    return task == Task::kA ? label_a : label_b;
  }

  bool operator==(const Record&) const = default;
};

struct Dataset {
  std::vector<Record> records;
  std::string split_name;

  std::size_t size() const { return records.size(); }
  std::vector<std::string> texts() const;

  // Throws LabelError if a record lacks the task's label.
  std::vector<std::string> labels(Task task) const;

  bool operator==(const Dataset&) const = default;
};

// Throws SchemaError (column count), LabelError (unknown or misplaced label)
// or HierarchyError (HS on a NOT_OFF tweet), each with the line number.
Dataset parse_tsv(std::istream& in, Schema schema, const std::string& source_name = "<stream>");
Dataset read_tsv(const std::filesystem::path& path, Schema schema);

// Writes the labels each record carries. Texts containing a tab or line
// break are rejected with InvalidArgument.
void write_tsv(const Dataset& data, std::ostream& out);
void write_tsv(const Dataset& data, const std::filesystem::path& path);

// Draws minority records with replacement until both classes have the
// majority count, then shuffles the whole set. Same seed, same output.
Dataset upsample_minority(const Dataset& data, Task task, std::uint64_t seed);

// Synthetic desk-scale corpus: 100 training and 100 test tweets, each split
// 80 NOT_OFF / 20 OFF. Offensive tweets carry one animal, dialect-insult or
// angry-emoji cue; training and test use disjoint surface forms of the cues.
struct SplitCorpus {
  Dataset train;
  Dataset test;
};
SplitCorpus micro_corpus(std::uint64_t seed);

// The 200 tweets above as one dataset (training half first).
Dataset stratified_micro_corpus(std::uint64_t seed);

// Cue surface forms used by the generator, for audits.
struct MicroCues {
  std::vector<std::string> train_animals, test_animals;
  std::vector<std::string> train_insults, test_insults;
  std::vector<std::string> train_emoji, test_emoji;
};
const MicroCues& micro_cues();

}  // namespace ofansiv
