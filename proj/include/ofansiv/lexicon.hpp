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

// Static mapping tables that drive normalization.
//
// File format (UTF-8, one entry per line):
//
//   # kind: emoji
//   # version: 2026.1
//   # source: free text
//   <key>\t<replacement>
//   # padding
//   <key>\t<replacement>      (entries after the marker are placeholders)
//
// Stopword files carry only the key column. Blank lines and other `#` lines
// are ignored. Keys and replacements are stored NFC-composed.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ofansiv {

enum class LexiconKind { kEmoji, kEmoticon, kDialectNoun, kAnimalCategory, kStopword };

std::string_view kind_name(LexiconKind kind);
std::optional<LexiconKind> parse_kind(std::string_view name);

// Replacement for every animal-category entry.
inline constexpr std::string_view kAnimalWord = "حيوان";

struct LexiconEntry {
  std::string replacement;
  bool padding = false;

  bool operator==(const LexiconEntry&) const = default;
};

class Lexicon {
 public:
  using EntryMap = std::map<std::string, LexiconEntry, std::less<>>;

  explicit Lexicon(LexiconKind kind, std::string version = "0",
                   std::string source_note = "");

  // Validates the entry against the kind invariants. Throws DuplicateKey or
  // KindMismatch.
  void add(std::string_view key, std::string_view replacement, bool padding = false);

  // Exact lookup. The key is not normalized; callers pass NFC text.
  std::optional<std::string_view> lookup(std::string_view key) const;
  bool contains(std::string_view key) const { return entries_.count(key) != 0; }

  LexiconKind kind() const { return kind_; }
  const std::string& version() const { return version_; }
  const std::string& source_note() const { return source_note_; }
  const EntryMap& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t padding_count() const;

  bool operator==(const Lexicon&) const = default;

 private:
  LexiconKind kind_;
  std::string version_;
  std::string source_note_;
  EntryMap entries_;
};

Lexicon parse_lexicon(std::istream& in, LexiconKind kind,
                      const std::string& source_name = "<stream>");
Lexicon load_lexicon(const std::filesystem::path& path, LexiconKind kind);

void write_lexicon(const Lexicon& lexicon, std::ostream& out);
void write_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

// The five tables the pipeline can use; any of them may be absent.
struct LexiconSet {
  std::optional<Lexicon> emoji;
  std::optional<Lexicon> emoticon;
  std::optional<Lexicon> dialect;
  std::optional<Lexicon> animal;
  std::optional<Lexicon> stopword;

  const std::optional<Lexicon>& get(LexiconKind kind) const;

  // Loads emoji.tsv, emoticon.tsv, dialect.tsv, animal.tsv, stopword.tsv
  // from `dir`. Missing files leave the slot empty.
  static LexiconSet load_dir(const std::filesystem::path& dir);
};

std::string_view lexicon_file_name(LexiconKind kind);

}  // namespace ofansiv
