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

#include "ofansiv/normalize.hpp"

#include <unicode/uchar.h>

#include <algorithm>

#include "ofansiv/error.hpp"
#include "ofansiv/unicode.hpp"

namespace ofansiv {
namespace {

constexpr char32_t kAlif = 0x0627;
constexpr char32_t kAlifMadda = 0x0622;
constexpr char32_t kAlifHamzaAbove = 0x0623;
constexpr char32_t kAlifHamzaBelow = 0x0625;
constexpr char32_t kAlifMaqsura = 0x0649;
constexpr char32_t kYa = 0x064A;
constexpr char32_t kTaMarbuta = 0x0629;
constexpr char32_t kHa = 0x0647;

// Rebuilds `text`, handing every whitespace-delimited token to `f`. Separators
// are copied verbatim; `f` returns nullopt to keep a token as is.
template <class F>
std::string map_tokens(std::string_view text, F&& f) {
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (std::string_view tok : unicode::split_tokens(text)) {
    auto start = static_cast<std::size_t>(tok.data() - text.data());
    out.append(text.substr(cursor, start - cursor));
    if (std::optional<std::string> r = f(tok)) {
      out += *r;
    } else {
      out.append(tok);
    }
    cursor = start + tok.size();
  }
  out.append(text.substr(cursor));
  return out;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// `<tag ...>` spans: '<' followed by a letter, '/' or '!', closed by the next
// '>' on the same line with no nested '<'.
std::string strip_html_tags(std::string_view s) {
  constexpr std::size_t kMaxTag = 512;
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<' && i + 1 < s.size() &&
        (is_ascii_alpha(s[i + 1]) || s[i + 1] == '/' || s[i + 1] == '!')) {
      std::size_t j = i + 1;
      while (j < s.size() && j - i < kMaxTag && s[j] != '>' && s[j] != '<' && s[j] != '\n') ++j;
      if (j < s.size() && s[j] == '>') {
        out.push_back(' ');
        i = j + 1;
        continue;
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

bool is_variation_selector(char32_t cp) {
  return (cp >= 0xFE00 && cp <= 0xFE0F) || (cp >= 0xE0100 && cp <= 0xE01EF);
}

// Classes deleted outright (they live inside words or emoji sequences).
bool is_deleted_by_cleaning(char32_t cp) {
  if (cp == unicode::kTatweel || is_variation_selector(cp) || cp == 0x20E3) return true;
  return u_charType(static_cast<UChar32>(cp)) == U_FORMAT_CHAR;
}

// Classes turned into a separator.
bool is_separated_by_cleaning(char32_t cp) {
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & (U_GC_N_MASK | U_GC_P_MASK | U_GC_S_MASK | U_GC_CC_MASK)) != 0;
}

}  // namespace

// --- Stage names ---------------------------------------------------------------

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kEmojiConvert: return "EmojiConvert";
    case Stage::kEmoticonConvert: return "EmoticonConvert";
    case Stage::kHashtagSegment: return "HashtagSegment";
    case Stage::kLetterNormalize: return "LetterNormalize";
    case Stage::kRepeatReduce: return "RepeatReduce";
    case Stage::kMiscClean: return "MiscClean";
    case Stage::kDialectNormalize: return "DialectNormalize";
    case Stage::kWordCategorize: return "WordCategorize";
    case Stage::kStopwordRemove: return "StopwordRemove";
  }
  return "Unknown";
}

std::optional<Stage> parse_stage(std::string_view name) {
  for (Stage s : kStageOrder) {
    if (stage_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<Stage> StageSet::ordered() const {
  std::vector<Stage> out;
  for (Stage s : kStageOrder) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

// --- SequenceMatcher -------------------------------------------------------------

void SequenceMatcher::insert(std::u32string_view key, std::string replacement) {
  if (key.empty()) return;
  std::uint32_t node = 0;
  for (char32_t cp : key) {
    auto& children = nodes_[node].children;
    auto it = std::lower_bound(children.begin(), children.end(), cp,
                               [](const auto& c, char32_t v) { return c.first < v; });
    if (it != children.end() && it->first == cp) {
      node = it->second;
    } else {
      auto next = static_cast<std::uint32_t>(nodes_.size());
      children.insert(it, {cp, next});
      nodes_.emplace_back();
      node = next;
    }
  }
  if (nodes_[node].value < 0) {
    nodes_[node].value = static_cast<std::int32_t>(values_.size());
    values_.push_back(std::move(replacement));
  }
}

std::size_t SequenceMatcher::match(std::u32string_view text, std::size_t pos,
                                   const std::string** replacement) const {
  std::size_t best = 0;
  std::uint32_t node = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto& children = nodes_[node].children;
    auto it = std::lower_bound(children.begin(), children.end(), text[i],
                               [](const auto& c, char32_t v) { return c.first < v; });
    if (it == children.end() || it->first != text[i]) break;
    node = it->second;
    if (nodes_[node].value >= 0) {
      best = i - pos + 1;
      if (replacement) *replacement = &values_[static_cast<std::size_t>(nodes_[node].value)];
    }
  }
  return best;
}

// --- Emoji / emoticons -------------------------------------------------------------

EmojiConverter::EmojiConverter(const Lexicon& lex, const TextFolder& fold) {
  if (lex.kind() != LexiconKind::kEmoji) {
    throw Error(ErrorKind::kKindMismatch, "emoji conversion needs an emoji lexicon");
  }
  for (const auto& [key, entry] : lex.entries()) {
    matcher_.insert(unicode::decode(key), fold ? fold(entry.replacement) : entry.replacement);
  }
}

std::string EmojiConverter::convert(std::string_view text) const {
  std::u32string cps = unicode::decode(text);
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < cps.size()) {
    const std::string* desc = nullptr;
    std::size_t n = matcher_.match(cps, i, &desc);
    if (n > 0) {
      out.push_back(' ');
      out += *desc;
      out.push_back(' ');
      i += n;
    } else {
      unicode::append(out, cps[i]);
      ++i;
    }
  }
  return out;
}

EmoticonConverter::EmoticonConverter(const Lexicon& lex, const TextFolder& fold) {
  if (lex.kind() != LexiconKind::kEmoticon) {
    throw Error(ErrorKind::kKindMismatch, "emoticon conversion needs an emoticon lexicon");
  }
  for (const auto& [key, entry] : lex.entries()) {
    matcher_.insert(unicode::decode(key), fold ? fold(entry.replacement) : entry.replacement);
  }
}

std::optional<std::string> EmoticonConverter::convert_token(std::string_view token) const {
  std::u32string cps = unicode::decode(token);
  std::string out;
  std::size_t i = 0;
  while (i < cps.size()) {
    const std::string* desc = nullptr;
    std::size_t n = matcher_.match(cps, i, &desc);
    if (n == 0) return std::nullopt;
    if (!out.empty()) out.push_back(' ');
    out += *desc;
    i += n;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string EmoticonConverter::convert(std::string_view text) const {
  return map_tokens(text, [&](std::string_view tok) { return convert_token(tok); });
}

std::string convert_emoji(std::string_view text, const Lexicon& lex) {
  return EmojiConverter(lex).convert(text);
}

std::string convert_emoticons(std::string_view text, const Lexicon& lex) {
  return EmoticonConverter(lex).convert(text);
}

// --- Character-level stages --------------------------------------------------------

std::string segment_hashtags(std::string_view text) {
  return map_tokens(text, [](std::string_view tok) -> std::optional<std::string> {
    if (tok.empty() || tok.front() != '#') return std::nullopt;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= tok.size()) {
      std::size_t end = tok.find('_', start);
      if (end == std::string_view::npos) end = tok.size();
      std::string_view part = tok.substr(start, end - start);
      while (!part.empty() && part.front() == '#') part.remove_prefix(1);
      if (!part.empty()) parts.emplace_back(part);
      start = end + 1;
    }
    return unicode::join_tokens(parts);
  });
}

std::string normalize_letters(std::string_view text) {
  std::string current(text);
  // Mapping can expose new canonical compositions (ى + hamza -> ئ), so fold
  // and recompose until stable. Each round either stops or shortens the text.
  for (;;) {
    std::u32string out;
    out.reserve(current.size());
    for (char32_t cp : unicode::decode(current)) {
      switch (cp) {
        case kAlifMadda:
        case kAlifHamzaAbove:
        case kAlifHamzaBelow:
          cp = kAlif;
          break;
        case kAlifMaqsura:
          cp = kYa;
          break;
        case kTaMarbuta:
          cp = kHa;
          break;
        case 0x0653:
        case 0x0654:
        case 0x0655:
          if (!out.empty() && out.back() == kAlif) continue;
          break;
        default:
          break;
      }
      out.push_back(cp);
    }
    std::string folded = unicode::encode(out);
    std::string composed = unicode::nfc(folded);
    if (composed == folded) return folded;
    current = std::move(composed);
  }
}

std::string reduce_repeats(std::string_view text) {
  std::u32string cps = unicode::decode(text);
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    std::size_t n = out.size();
    if (n >= 2 && out[n - 1] == cp && out[n - 2] == cp) continue;
    out.push_back(cp);
  }
  return unicode::encode(out);
}

bool is_removed_by_cleaning(char32_t cp) {
  return is_deleted_by_cleaning(cp) || is_separated_by_cleaning(cp);
}

std::string clean_misc(std::string_view text) {
  std::string s(text);
  replace_all(s, "<LF>", " ");
  replace_all(s, "@USER", " ");
  s = strip_html_tags(s);

  std::string filtered;
  filtered.reserve(s.size());
  for (char32_t cp : unicode::decode(s)) {
    if (is_deleted_by_cleaning(cp)) continue;
    if (is_separated_by_cleaning(cp)) {
      filtered.push_back(' ');
      continue;
    }
    unicode::append(filtered, cp);
  }

  std::vector<std::string> kept;
  for (std::string_view tok : unicode::split_tokens(filtered)) {
    if (tok == "URL" || tok == "USER") continue;
    kept.emplace_back(tok);
  }
  return unicode::nfc(unicode::join_tokens(kept));
}

// --- Token-level stages ------------------------------------------------------------

TokenMapper::TokenMapper(const Lexicon& lex) {
  for (const auto& [key, entry] : lex.entries()) insert(key, entry.replacement);
}

void TokenMapper::insert(std::string key, std::string replacement) {
  table_.try_emplace(std::move(key), std::move(replacement));
}

std::string TokenMapper::apply(std::string_view text) const {
  return map_tokens(text, [&](std::string_view tok) -> std::optional<std::string> {
    auto it = table_.find(std::string(tok));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  });
}

std::string normalize_dialect(std::string_view text, const Lexicon& lex) {
  if (lex.kind() != LexiconKind::kDialectNoun) {
    throw Error(ErrorKind::kKindMismatch, "dialect normalization needs a dialect lexicon");
  }
  return TokenMapper(lex).apply(text);
}

std::string categorize_words(std::string_view text, const Lexicon& lex) {
  if (lex.kind() != LexiconKind::kAnimalCategory) {
    throw Error(ErrorKind::kKindMismatch, "word categorization needs an animal lexicon");
  }
  return TokenMapper(lex).apply(text);
}

std::string remove_stopwords(std::string_view text, const Lexicon& lex) {
  if (lex.kind() != LexiconKind::kStopword) {
    throw Error(ErrorKind::kKindMismatch, "stopword removal needs a stopword lexicon");
  }
  std::vector<std::string> kept;
  for (std::string_view tok : unicode::split_tokens(text)) {
    if (!lex.contains(tok)) kept.emplace_back(tok);
  }
  return unicode::join_tokens(kept);
}

// --- Pipeline ----------------------------------------------------------------------

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  auto require = [&](Stage stage, LexiconKind kind) -> const Lexicon& {
    if (!config_.lexicons || !config_.lexicons->get(kind)) {
      throw Error(ErrorKind::kMissingLexicon, std::string(stage_name(stage)) + " needs the " +
                                                  std::string(kind_name(kind)) + " lexicon");
    }
    const Lexicon& lex = *config_.lexicons->get(kind);
    if (lex.kind() != kind) {
      throw Error(ErrorKind::kKindMismatch, std::string(stage_name(stage)) + " got a " +
                                                std::string(kind_name(lex.kind())) + " lexicon");
    }
    return lex;
  };
  const TextFolder folder = [this](std::string_view t) { return fold(t); };

  if (on(Stage::kEmojiConvert)) {
    emoji_ = std::make_unique<EmojiConverter>(require(Stage::kEmojiConvert, LexiconKind::kEmoji),
                                              folder);
  }
  if (on(Stage::kEmoticonConvert)) {
    emoticon_ = std::make_unique<EmoticonConverter>(
        require(Stage::kEmoticonConvert, LexiconKind::kEmoticon), folder);
  }

  // Lookup keys go through the same character-level stages as the text, so
  // one spelling per entry suffices.
  auto folded_key = [&](const std::string& key) -> std::optional<std::string> {
    std::string k = unicode::collapse_whitespace(fold(key));
    if (k.empty() || k.find(' ') != std::string::npos) return std::nullopt;
    return k;
  };

  if (on(Stage::kDialectNormalize)) {
    for (const auto& [key, entry] :
         require(Stage::kDialectNormalize, LexiconKind::kDialectNoun).entries()) {
      if (auto k = folded_key(key)) dialect_.insert(*k, fold(entry.replacement));
    }
    for (const auto& [key, replacement] : dialect_.table()) {
      for (std::string_view tok : unicode::split_tokens(replacement)) {
        if (dialect_.table().count(std::string(tok))) {
          throw Error(ErrorKind::kKindMismatch, "dialect replacement '" + replacement +
                                                    "' for '" + key + "' is itself a dialect key");
        }
      }
    }
    if (on(Stage::kWordCategorize) && dialect_.table().count(fold(kAnimalWord))) {
      throw Error(ErrorKind::kKindMismatch, "the category word is a dialect key");
    }
  }
  if (on(Stage::kWordCategorize)) {
    const std::string animal = fold(kAnimalWord);
    for (const auto& [key, entry] :
         require(Stage::kWordCategorize, LexiconKind::kAnimalCategory).entries()) {
      if (auto k = folded_key(key)) category_.insert(*k, animal);
    }
  }
  if (on(Stage::kStopwordRemove)) {
    for (const auto& [key, entry] :
         require(Stage::kStopwordRemove, LexiconKind::kStopword).entries()) {
      if (auto k = folded_key(key)) stopwords_.insert(*k);
    }
  }
}

std::string Pipeline::fold(std::string_view text) const {
  std::string s = unicode::nfc(text);
  if (on(Stage::kLetterNormalize)) s = normalize_letters(s);
  if (on(Stage::kRepeatReduce)) s = reduce_repeats(s);
  if (on(Stage::kMiscClean)) s = clean_misc(s);
  return s;
}

NormalizedText Pipeline::run(std::string_view raw) const {
  std::string s = unicode::collapse_whitespace(unicode::nfc(raw));

  // Hashtag segmentation, repeat reduction and cleaning can expose new
  // emoticon tokens (`#:)`, `XD!`); re-matching after them keeps the
  // pipeline idempotent.
  auto rematch_emoticons = [&] {
    if (emoticon_) s = emoticon_->convert(s);
  };

  if (emoji_) s = emoji_->convert(s);
  if (emoticon_) s = emoticon_->convert(s);
  if (on(Stage::kHashtagSegment)) {
    s = segment_hashtags(s);
    rematch_emoticons();
  }
  if (on(Stage::kLetterNormalize)) s = normalize_letters(s);
  if (on(Stage::kRepeatReduce)) {
    s = reduce_repeats(s);
    rematch_emoticons();
  }
  if (on(Stage::kMiscClean)) {
    s = clean_misc(s);
    // Deleting tatweel and format characters joins neighbours, which can
    // form new compositions or runs.
    if (on(Stage::kLetterNormalize)) s = normalize_letters(s);
    if (on(Stage::kRepeatReduce)) s = reduce_repeats(s);
    rematch_emoticons();
  }
  if (on(Stage::kDialectNormalize)) s = dialect_.apply(s);
  if (on(Stage::kWordCategorize)) s = category_.apply(s);
  if (on(Stage::kStopwordRemove)) {
    std::vector<std::string> kept;
    for (std::string_view tok : unicode::split_tokens(s)) {
      if (!stopwords_.count(std::string(tok))) kept.emplace_back(tok);
    }
    s = unicode::join_tokens(kept);
  }

  NormalizedText result;
  result.text = unicode::collapse_whitespace(s);
  for (Stage st : config_.stages.ordered()) result.applied_stages.emplace_back(stage_name(st));
  return result;
}

NormalizedText preprocess(std::string_view raw, const PipelineConfig& config) {
  return Pipeline(config).run(raw);
}

}  // namespace ofansiv
