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

// Tweet normalization: nine toggleable text transforms and the pipeline that
// composes them in a fixed order.
//
// The free functions are the individual stages. They are pure and operate on
// NFC text; stages that work per token preserve the original separators
// unless documented otherwise. `Pipeline` precompiles the lexicons once and is
// what batch callers should use.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ofansiv/lexicon.hpp"

namespace ofansiv {

enum class Stage : std::uint8_t {
  kEmojiConvert,
  kEmoticonConvert,
  kHashtagSegment,
  kLetterNormalize,
  kRepeatReduce,
  kMiscClean,
  kDialectNormalize,
  kWordCategorize,
  kStopwordRemove,
};

// Execution order. Configs only toggle stages; they never reorder them.
inline constexpr std::array<Stage, 9> kStageOrder = {
    Stage::kEmojiConvert,    Stage::kEmoticonConvert, Stage::kHashtagSegment,
    Stage::kLetterNormalize, Stage::kRepeatReduce,    Stage::kMiscClean,
    Stage::kDialectNormalize, Stage::kWordCategorize, Stage::kStopwordRemove};

std::string_view stage_name(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

class StageSet {
 public:
  constexpr StageSet() = default;

  static constexpr StageSet none() { return StageSet(); }
  static constexpr StageSet all() {
    StageSet s;
    s.bits_ = (1u << kStageOrder.size()) - 1;
    return s;
  }
  static constexpr StageSet from_bits(std::uint32_t bits) {
    StageSet s;
    s.bits_ = bits & all().bits_;
    return s;
  }

  constexpr bool contains(Stage s) const { return (bits_ >> bit(s)) & 1u; }
  constexpr StageSet with(Stage s) const { return from_bits(bits_ | (1u << bit(s))); }
  constexpr StageSet without(Stage s) const { return from_bits(bits_ & ~(1u << bit(s))); }
  constexpr StageSet operator|(StageSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }

  // Enabled stages in execution order.
  std::vector<Stage> ordered() const;

  constexpr bool operator==(const StageSet&) const = default;

 private:
  static constexpr unsigned bit(Stage s) { return static_cast<unsigned>(s); }
  std::uint32_t bits_ = 0;
};

struct PipelineConfig {
  StageSet stages = StageSet::all();
  std::shared_ptr<const LexiconSet> lexicons;
};

struct NormalizedText {
  std::string text;
  std::vector<std::string> applied_stages;

  bool operator==(const NormalizedText&) const = default;
};

// --- Individual stages -----------------------------------------------------

// Longest-match replacement of emoji sequences by " <description> ".
std::string convert_emoji(std::string_view text, const Lexicon& lex);

// Whitespace-delimited tokens fully covered by emoticon keys (greedy longest
// match) are replaced by their descriptions.
std::string convert_emoticons(std::string_view text, const Lexicon& lex);

// `#tag_parts` tokens lose their `#` and have `_` turned into spaces.
std::string segment_hashtags(std::string_view text);

// آ أ إ -> ا, ى -> ي, ة -> ه. Hamza/madda combining marks directly after a
// bare alif are folded away too, and the result is NFC.
std::string normalize_letters(std::string_view text);

// Runs of three or more identical codepoints are truncated to two.
std::string reduce_repeats(std::string_view text);

// Strips digits, tatweel, HTML tags, the dataset placeholders (@USER, URL,
// <LF>) and punctuation/symbols, then collapses whitespace.
std::string clean_misc(std::string_view text);

std::string normalize_dialect(std::string_view text, const Lexicon& lex);
std::string categorize_words(std::string_view text, const Lexicon& lex);

// Drops stopword tokens; output is single-space separated.
std::string remove_stopwords(std::string_view text, const Lexicon& lex);

// Codepoint classes removed (or turned into a separator) by clean_misc.
bool is_removed_by_cleaning(char32_t cp);

// --- Matchers ----------------------------------------------------------------

// Codepoint trie with longest-match lookup.
class SequenceMatcher {
 public:
  SequenceMatcher() = default;
  void insert(std::u32string_view key, std::string replacement);

  // Length in codepoints of the longest key starting at `pos`, or 0.
  std::size_t match(std::u32string_view text, std::size_t pos,
                    const std::string** replacement) const;

  bool empty() const { return nodes_.size() <= 1; }

 private:
  struct Node {
    std::vector<std::pair<char32_t, std::uint32_t>> children;  // sorted by codepoint
    std::int32_t value = -1;
  };
  std::vector<Node> nodes_{1};
  std::vector<std::string> values_;
};

// Rewrites inserted descriptions so later stages leave them unchanged.
using TextFolder = std::function<std::string(std::string_view)>;

class EmojiConverter {
 public:
  explicit EmojiConverter(const Lexicon& lex, const TextFolder& fold = {});
  std::string convert(std::string_view text) const;

 private:
  SequenceMatcher matcher_;
};

class EmoticonConverter {
 public:
  explicit EmoticonConverter(const Lexicon& lex, const TextFolder& fold = {});
  std::string convert(std::string_view text) const;
  std::optional<std::string> convert_token(std::string_view token) const;

 private:
  SequenceMatcher matcher_;
};

// Whole-token replacement table (dialect nouns, animal categories).
class TokenMapper {
 public:
  TokenMapper() = default;
  explicit TokenMapper(const Lexicon& lex);
  void insert(std::string key, std::string replacement);
  std::string apply(std::string_view text) const;
  const std::unordered_map<std::string, std::string>& table() const { return table_; }

 private:
  std::unordered_map<std::string, std::string> table_;
};

// --- Pipeline ----------------------------------------------------------------

class Pipeline {
 public:
  // Throws MissingLexicon if an enabled stage has no table, and
  // KindMismatch if the lexicons would make the pipeline non-idempotent
  // (a dialect replacement that is itself a dialect key).
  explicit Pipeline(PipelineConfig config);

  NormalizedText run(std::string_view raw) const;

  const PipelineConfig& config() const { return config_; }
  StageSet stages() const { return config_.stages; }

 private:
  bool on(Stage s) const { return config_.stages.contains(s); }
  std::string fold(std::string_view text) const;

  PipelineConfig config_;
  std::unique_ptr<EmojiConverter> emoji_;
  std::unique_ptr<EmoticonConverter> emoticon_;
  TokenMapper dialect_;
  TokenMapper category_;
  std::unordered_set<std::string> stopwords_;
};

// One-shot convenience; builds a Pipeline per call.
NormalizedText preprocess(std::string_view raw, const PipelineConfig& config);

}  // namespace ofansiv
