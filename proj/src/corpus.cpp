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

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>

#include "ofansiv/error.hpp"
#include "ofansiv/rng.hpp"
#include "ofansiv/unicode.hpp"

namespace ofansiv {
namespace {

bool is_label_a(std::string_view s) { return s == kOff || s == kNotOff; }
bool is_label_b(std::string_view s) { return s == kHs || s == kNotHs; }

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::size_t column_count(Schema schema) {
  switch (schema) {
    case Schema::kTextOnly: return 1;
    case Schema::kTaskA:
    case Schema::kTaskB: return 2;
    case Schema::kBoth: return 3;
  }
  return 0;
}

}  // namespace

std::optional<Schema> parse_schema(std::string_view name) {
  if (name == "text") return Schema::kTextOnly;
  if (name == "A") return Schema::kTaskA;
  if (name == "B") return Schema::kTaskB;
  if (name == "both") return Schema::kBoth;
  return std::nullopt;
}

std::optional<Task> parse_task(std::string_view name) {
  if (name == "A" || name == "a") return Task::kA;
  if (name == "B" || name == "b") return Task::kB;
  return std::nullopt;
}

std::string_view positive_label(Task task) { return task == Task::kA ? kOff : kHs; }
std::string_view negative_label(Task task) { return task == Task::kA ? kNotOff : kNotHs; }

std::vector<std::string> Dataset::texts() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.text);
  return out;
}

std::vector<std::string> Dataset::labels(Task task) const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& label = records[i].label(task);
    if (!label) {
      throw Error(ErrorKind::kLabel, "record " + std::to_string(i + 1) + " of '" + split_name +
                                         "' has no task " + (task == Task::kA ? "A" : "B") +
                                         " label");
    }
    out.push_back(*label);
  }
  return out;
}

Dataset parse_tsv(std::istream& in, Schema schema, const std::string& source_name) {
  Dataset data;
  data.split_name = source_name;
  const std::size_t want = column_count(schema);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string_view> cols = split_tabs(line);
    if (cols.size() != want) {
      throw LocatedError(ErrorKind::kSchema, source_name, line_no,
                         "expected " + std::to_string(want) + " columns, found " +
                             std::to_string(cols.size()));
    }
    Record r;
    r.text = std::string(cols[0]);
    for (std::size_t c = 1; c < cols.size(); ++c) {
      std::string_view v = cols[c];
      bool a = is_label_a(v), b = is_label_b(v);
      if (!a && !b) {
        throw LocatedError(ErrorKind::kLabel, source_name, line_no,
                           "unknown label '" + std::string(v) + "'");
      }
      if ((schema == Schema::kTaskA && !a) || (schema == Schema::kTaskB && !b) ||
          (a && r.label_a) || (b && r.label_b)) {
        throw LocatedError(ErrorKind::kLabel, source_name, line_no,
                           "label '" + std::string(v) + "' does not fit the schema");
      }
      (a ? r.label_a : r.label_b) = std::string(v);
    }
    if (r.label_a && r.label_b && *r.label_b == kHs && *r.label_a != kOff) {
      throw LocatedError(ErrorKind::kHierarchy, source_name, line_no,
                         "HS tweet must be labelled OFF");
    }
    data.records.push_back(std::move(r));
  }
  return data;
}

Dataset read_tsv(const std::filesystem::path& path, Schema schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open dataset " + path.string());
  Dataset d = parse_tsv(in, schema, path.string());
  d.split_name = path.stem().string();
  return d;
}

void write_tsv(const Dataset& data, std::ostream& out) {
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    const Record& r = data.records[i];
    if (r.text.find_first_of("\t\r\n") != std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument,
                  "record " + std::to_string(i + 1) + " text contains a tab or line break");
    }
    out << r.text;
    if (r.label_a) out << '\t' << *r.label_a;
    if (r.label_b) out << '\t' << *r.label_b;
    out << '\n';
  }
}

void write_tsv(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write dataset " + path.string());
  write_tsv(data, out);
}

Dataset upsample_minority(const Dataset& data, Task task, std::uint64_t seed) {
  const std::vector<std::string> labels = data.labels(task);
  const std::string_view pos = positive_label(task);
  std::vector<std::size_t> pos_idx, neg_idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == pos ? pos_idx : neg_idx).push_back(i);
  }
  if (pos_idx.empty() || neg_idx.empty()) {
    throw Error(ErrorKind::kSingleClassData, "upsampling needs both classes in '" +
                                                 data.split_name + "'");
  }
  const std::vector<std::size_t>& minority = pos_idx.size() < neg_idx.size() ? pos_idx : neg_idx;
  const std::size_t deficit =
      std::max(pos_idx.size(), neg_idx.size()) - std::min(pos_idx.size(), neg_idx.size());

  Rng rng(seed);
  Dataset out;
  out.split_name = data.split_name;
  out.records = data.records;
  out.records.reserve(data.records.size() + deficit);
  for (std::size_t k = 0; k < deficit; ++k) {
    out.records.push_back(data.records[minority[rng.below(minority.size())]]);
  }
  rng.shuffle(std::span<Record>(out.records));
  return out;
}

// --- Synthetic corpus --------------------------------------------------------

const MicroCues& micro_cues() {
  static const MicroCues cues{
      {"كلب", "خنزير", "حمار", "قرد"},
      {"بزونة", "قطوة", "جحش", "ثعلب"},
      {"خبل", "دلخ", "عبيط"},
      {"مهبول", "أثول", "غشيم"},
      {"😡", "🤬"},
      {"😠", "👿"},
  };
  return cues;
}

namespace {

constexpr std::array<std::string_view, 48> kFiller = {
    "اليوم",   "الجو",    "جميل",    "المباراة", "كانت",    "رائعة",   "الهلال",  "النصر",
    "فاز",     "شكرا",    "على",     "الدعم",    "صباح",    "الخير",   "جمعة",    "مباركة",
    "الله",    "يحفظك",   "ننتظر",   "الحلقة",   "الجديدة", "السفر",   "غدا",     "القهوة",
    "لذيذة",   "الدوام",  "طويل",    "المدرسة",  "الامتحان", "سهل",     "الفريق",  "لعب",
    "بشكل",    "ممتاز",   "مبروك",   "للجميع",   "الحمد",   "لله",     "الصيف",   "حار",
    "المطر",   "نزل",     "الليلة",  "والله",    "صدقت",    "كلام",    "صحيح",    "موفق"};

constexpr std::array<std::string_view, 6> kAddress = {"يا", "يا", "انت", "هذا", "شوف", "قال"};
constexpr std::array<std::string_view, 7> kFriendly = {"صديقي", "أخي", "حبيبي", "غالي",
                                                       "بطل",   "عزيزي", "أستاذ"};
constexpr std::array<std::string_view, 8> kExtras = {"😂", "❤️", "👍", "🌹", ":)", "ههههه", "URL",
                                                     "<LF>"};
constexpr std::array<std::string_view, 3> kHashtags = {"#الهلال_النصر", "#صباح_الخير",
                                                       "#جمعة_مباركة"};

template <std::size_t N>
std::string_view pick(Rng& rng, const std::array<std::string_view, N>& items) {
  return items[rng.below(N)];
}

std::string_view pick(Rng& rng, const std::vector<std::string>& items) {
  return items[rng.below(items.size())];
}

// Inserts one tatweel after the second codepoint of an Arabic word.
std::string stretch(std::string_view word) {
  std::u32string cps = unicode::decode(word);
  if (cps.size() < 3) return std::string(word);
  cps.insert(cps.begin() + 2, unicode::kTatweel);
  return unicode::encode(cps);
}

void add_filler(Rng& rng, std::vector<std::string>& tokens, std::size_t lo, std::size_t hi) {
  std::size_t n = lo + rng.below(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i) tokens.emplace_back(pick(rng, kFiller));
}

void add_decorations(Rng& rng, std::vector<std::string>& tokens) {
  if (rng.below(3) == 0) tokens.insert(tokens.begin(), "@USER");
  if (rng.below(4) == 0) tokens.emplace_back(pick(rng, kHashtags));
  if (rng.below(3) == 0) tokens.emplace_back(pick(rng, kExtras));
}

// Both classes share one template: filler words with a single marked word
// at a random position, optionally preceded by an address word. Neutral
// tweets mark a friendly word; offensive tweets mark a cue. Nothing but the
// marked word separates the classes.
std::string tweet(Rng& rng, std::string marked) {
  std::vector<std::string> tokens;
  add_filler(rng, tokens, 2, 5);
  std::vector<std::string> head;
  if (rng.below(2) == 0) head.emplace_back(pick(rng, kAddress));
  head.push_back(std::move(marked));
  tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(rng.below(tokens.size() + 1)),
                head.begin(), head.end());
  add_decorations(rng, tokens);
  return unicode::join_tokens(tokens);
}

std::string neutral_tweet(Rng& rng) { return tweet(rng, std::string(pick(rng, kFriendly))); }

// family: 0 animal, 1 dialect insult, 2 angry emoji.
std::string offensive_tweet(Rng& rng, int family, bool test) {
  const MicroCues& c = micro_cues();
  std::string cue;
  if (family == 2) {
    cue = pick(rng, test ? c.test_emoji : c.train_emoji);
    if (rng.below(2) == 0) cue += cue;
  } else {
    const auto& forms = family == 0 ? (test ? c.test_animals : c.train_animals)
                                    : (test ? c.test_insults : c.train_insults);
    cue = pick(rng, forms);
    if (test && rng.below(3) == 0) cue = stretch(cue);
  }
  return tweet(rng, std::move(cue));
}

Dataset make_split(Rng& rng, bool test) {
  Dataset d;
  d.split_name = test ? "micro-test" : "micro-train";
  for (int i = 0; i < 80; ++i) {
    d.records.push_back({neutral_tweet(rng), std::string(kNotOff), std::string(kNotHs)});
  }
  for (int i = 0; i < 20; ++i) {
    int family = i % 3;
    d.records.push_back({offensive_tweet(rng, family, test), std::string(kOff),
                         std::string(family == 0 ? kHs : kNotHs)});
  }
  rng.shuffle(std::span<Record>(d.records));
  return d;
}

}  // namespace

SplitCorpus micro_corpus(std::uint64_t seed) {
  Rng rng(seed);
  SplitCorpus c;
  c.train = make_split(rng, false);
  c.test = make_split(rng, true);
  return c;
}

Dataset stratified_micro_corpus(std::uint64_t seed) {
  SplitCorpus c = micro_corpus(seed);
  Dataset d;
  d.split_name = "micro";
  d.records = std::move(c.train.records);
  d.records.insert(d.records.end(), c.test.records.begin(), c.test.records.end());
  return d;
}

}  // namespace ofansiv
