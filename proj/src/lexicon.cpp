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

#include "ofansiv/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "ofansiv/error.hpp"
#include "ofansiv/unicode.hpp"

namespace ofansiv {
namespace {

constexpr std::array<LexiconKind, 5> kAllKinds = {
    LexiconKind::kEmoji, LexiconKind::kEmoticon, LexiconKind::kDialectNoun,
    LexiconKind::kAnimalCategory, LexiconKind::kStopword};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Replacements must survive the cleaning stage untouched: letters and marks
// separated by single spaces.
bool is_plain_phrase(std::string_view text) {
  std::u32string cps = unicode::decode(text);
  if (cps.empty() || cps.front() == U' ' || cps.back() == U' ') return false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (cp == U' ') {
      if (cps[i - 1] == U' ') return false;
      continue;
    }
    if (cp == unicode::kTatweel) return false;
    if (!unicode::is_letter(cp) && !unicode::is_mark(cp)) return false;
  }
  return true;
}

}  // namespace

std::string_view kind_name(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kEmoji: return "emoji";
    case LexiconKind::kEmoticon: return "emoticon";
    case LexiconKind::kDialectNoun: return "dialect";
    case LexiconKind::kAnimalCategory: return "animal";
    case LexiconKind::kStopword: return "stopword";
  }
  return "unknown";
}

std::optional<LexiconKind> parse_kind(std::string_view name) {
  for (LexiconKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view lexicon_file_name(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kEmoji: return "emoji.tsv";
    case LexiconKind::kEmoticon: return "emoticon.tsv";
    case LexiconKind::kDialectNoun: return "dialect.tsv";
    case LexiconKind::kAnimalCategory: return "animal.tsv";
    case LexiconKind::kStopword: return "stopword.tsv";
  }
  return "";
}

Lexicon::Lexicon(LexiconKind kind, std::string version, std::string source_note)
    : kind_(kind), version_(std::move(version)), source_note_(std::move(source_note)) {}

void Lexicon::add(std::string_view raw_key, std::string_view raw_replacement,
                  bool padding) {
  std::string key = unicode::nfc(raw_key);
  std::string replacement = unicode::nfc(raw_replacement);
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorKind::kKindMismatch,
                std::string(kind_name(kind_)) + " key '" + key + "': " + why);
  };

  if (key.empty()) mismatch("empty key");
  if (key.front() == '#') {
    throw Error(ErrorKind::kParse, "key '" + key + "' begins with '#'");
  }
  for (char32_t cp : unicode::decode(key)) {
    if (unicode::is_whitespace(cp)) mismatch("key contains whitespace");
  }

  switch (kind_) {
    case LexiconKind::kEmoji:
      for (char32_t cp : unicode::decode(key)) {
        if (unicode::is_arabic(cp)) mismatch("emoji key contains Arabic script");
      }
      break;
    case LexiconKind::kEmoticon:
      break;
    case LexiconKind::kDialectNoun:
    case LexiconKind::kAnimalCategory:
    case LexiconKind::kStopword:
      if (!unicode::contains_arabic(key)) mismatch("key has no Arabic-script codepoint");
      break;
  }

  if (kind_ == LexiconKind::kStopword) {
    if (!replacement.empty()) mismatch("stopword entries take no replacement");
  } else {
    if (!is_plain_phrase(replacement)) {
      mismatch("replacement '" + replacement + "' must be letters separated by single spaces");
    }
    if (kind_ == LexiconKind::kAnimalCategory && replacement != kAnimalWord) {
      mismatch("animal replacement must be " + std::string(kAnimalWord));
    }
  }

  auto [it, inserted] = entries_.try_emplace(key, LexiconEntry{replacement, padding});
  if (!inserted) {
    throw Error(ErrorKind::kDuplicateKey, "'" + key + "' in " +
                                              std::string(kind_name(kind_)) + " lexicon");
  }
}

std::optional<std::string_view> Lexicon::lookup(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second.replacement);
}

std::size_t Lexicon::padding_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& e) { return e.second.padding; }));
}

Lexicon parse_lexicon(std::istream& in, LexiconKind kind, const std::string& source_name) {
  std::optional<std::string> header_kind;
  std::optional<std::string> version;
  std::string source_note;
  std::size_t kind_line = 0;
  bool padding = false;

  struct Pending {
    std::string key, replacement;
    bool padding;
    std::size_t line;
  };
  std::vector<Pending> pending;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(std::string_view(line).substr(1));
      auto field = [&](std::string_view name) -> std::optional<std::string> {
        if (body.substr(0, name.size()) == name) {
          return std::string(trim(body.substr(name.size())));
        }
        return std::nullopt;
      };
      if (auto v = field("kind:"); v && !header_kind) {
        header_kind = *v;
        kind_line = line_no;
      } else if (auto v = field("version:"); v && !version) {
        version = *v;
      } else if (auto v = field("source:"); v && source_note.empty()) {
        source_note = *v;
      } else if (body == "padding") {
        padding = true;
      }
      continue;
    }

    auto tab = line.find('\t');
    std::string key, replacement;
    if (kind == LexiconKind::kStopword) {
      if (tab != std::string::npos) {
        throw LocatedError(ErrorKind::kParse, source_name, line_no,
                           "stopword lines take a single column");
      }
      key = line;
    } else {
      if (tab == std::string::npos) {
        throw LocatedError(ErrorKind::kParse, source_name, line_no,
                           "expected key<TAB>replacement");
      }
      if (line.find('\t', tab + 1) != std::string::npos) {
        throw LocatedError(ErrorKind::kParse, source_name, line_no,
                           "more than two columns");
      }
      key = line.substr(0, tab);
      replacement = line.substr(tab + 1);
    }
    pending.push_back({std::move(key), std::move(replacement), padding, line_no});
  }

  if (!header_kind) {
    throw LocatedError(ErrorKind::kParse, source_name, 1, "missing '# kind:' header");
  }
  if (!version) {
    throw LocatedError(ErrorKind::kParse, source_name, 1, "missing '# version:' header");
  }
  if (*header_kind != kind_name(kind)) {
    throw LocatedError(ErrorKind::kKindMismatch, source_name, kind_line,
                       "file declares kind '" + *header_kind + "', expected '" +
                           std::string(kind_name(kind)) + "'");
  }

  Lexicon lex(kind, *version, source_note);
  for (const auto& p : pending) {
    try {
      lex.add(p.key, p.replacement, p.padding);
    } catch (const Error& e) {
      throw LocatedError(e.kind(), source_name, p.line, e.what());
    }
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path, LexiconKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open lexicon " + path.string());
  return parse_lexicon(in, kind, path.string());
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out << "# kind: " << kind_name(lexicon.kind()) << "\n";
  out << "# version: " << lexicon.version() << "\n";
  if (!lexicon.source_note().empty()) out << "# source: " << lexicon.source_note() << "\n";
  auto write_entries = [&](bool padding) {
    for (const auto& [key, entry] : lexicon.entries()) {
      if (entry.padding != padding) continue;
      out << key;
      if (lexicon.kind() != LexiconKind::kStopword) out << '\t' << entry.replacement;
      out << '\n';
    }
  };
  write_entries(false);
  if (lexicon.padding_count() > 0) {
    out << "# padding\n";
    write_entries(true);
  }
}

void write_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write lexicon " + path.string());
  write_lexicon(lexicon, out);
}

const std::optional<Lexicon>& LexiconSet::get(LexiconKind kind) const {
  switch (kind) {
    case LexiconKind::kEmoji: return emoji;
    case LexiconKind::kEmoticon: return emoticon;
    case LexiconKind::kDialectNoun: return dialect;
    case LexiconKind::kAnimalCategory: return animal;
    case LexiconKind::kStopword: return stopword;
  }
  return emoji;
}

LexiconSet LexiconSet::load_dir(const std::filesystem::path& dir) {
  LexiconSet set;
  auto load = [&](LexiconKind kind, std::optional<Lexicon>& slot) {
    auto path = dir / lexicon_file_name(kind);
    if (std::filesystem::exists(path)) slot = load_lexicon(path, kind);
  };
  load(LexiconKind::kEmoji, set.emoji);
  load(LexiconKind::kEmoticon, set.emoticon);
  load(LexiconKind::kDialectNoun, set.dialect);
  load(LexiconKind::kAnimalCategory, set.animal);
  load(LexiconKind::kStopword, set.stopword);
  return set;
}

}  // namespace ofansiv
