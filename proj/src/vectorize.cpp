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

#include "ofansiv/vectorize.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "ofansiv/error.hpp"
#include "ofansiv/unicode.hpp"

namespace ofansiv {
namespace {

void check_range(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) {
    throw Error(ErrorKind::kInvalidArgument, "n-gram range must satisfy 1 <= n_min <= n_max");
  }
}

// Calls f(window) for every codepoint window of the configured lengths.
template <class F>
void for_each_window(std::string_view text, int n_min, int n_max, F&& f) {
  const std::vector<std::size_t> bounds = unicode::boundaries(text);
  const std::size_t len = bounds.size() - 1;
  for (int n = n_min; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (un > len) break;
    for (std::size_t i = 0; i + un <= len; ++i) {
      f(text.substr(bounds[i], bounds[i + un] - bounds[i]));
    }
  }
}

bool parse_field(std::string_view token, std::string_view name, std::size_t& value) {
  if (token.substr(0, name.size()) != name) return false;
  token.remove_prefix(name.size());
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> ngrams, int n_min, int n_max,
                       std::string fitted_on)
    : ngrams_(std::move(ngrams)), n_min_(n_min), n_max_(n_max), fitted_on_(std::move(fitted_on)) {
  check_range(n_min, n_max);
  index_.reserve(ngrams_.size());
  for (std::size_t i = 0; i < ngrams_.size(); ++i) {
    if (i > 0 && !(ngrams_[i - 1] < ngrams_[i])) {
      throw Error(ErrorKind::kInvalidArgument, "vocabulary n-grams must be sorted and unique");
    }
    index_.emplace(ngrams_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view ngram) const {
  auto it = index_.find(ngram);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> extract_char_ngrams(std::string_view text, int n_min, int n_max) {
  check_range(n_min, n_max);
  std::vector<std::string> out;
  for_each_window(text, n_min, n_max, [&](std::string_view w) { out.emplace_back(w); });
  return out;
}

std::string corpus_fingerprint(std::span<const std::string> corpus) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& doc : corpus) {
    for (char c : doc) mix(static_cast<unsigned char>(c));
    mix(0xFF);  // never occurs in UTF-8
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Vocabulary fit_vocabulary(std::span<const std::string> corpus, int n_min, int n_max) {
  check_range(n_min, n_max);
  if (corpus.empty()) throw Error(ErrorKind::kEmptyCorpus, "cannot fit a vocabulary on no documents");
  std::unordered_set<std::string_view> seen;
  for (const auto& doc : corpus) {
    for_each_window(doc, n_min, n_max, [&](std::string_view w) { seen.insert(w); });
  }
  std::vector<std::string> ngrams(seen.begin(), seen.end());
  // Byte order of UTF-8 equals codepoint order.
  std::sort(ngrams.begin(), ngrams.end());
  return Vocabulary(std::move(ngrams), n_min, n_max, corpus_fingerprint(corpus));
}

Vocabulary fit_vocabulary(std::span<const NormalizedText> corpus, int n_min, int n_max) {
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const auto& d : corpus) texts.push_back(d.text);
  return fit_vocabulary(std::span<const std::string>(texts), n_min, n_max);
}

SparseVector transform(std::string_view text, const Vocabulary& vocab, std::size_t* dropped) {
  std::vector<std::uint32_t> hits;
  std::size_t misses = 0;
  for_each_window(text, vocab.n_min(), vocab.n_max(), [&](std::string_view w) {
    if (auto idx = vocab.index_of(w)) {
      hits.push_back(*idx);
    } else {
      ++misses;
    }
  });
  std::sort(hits.begin(), hits.end());

  SparseVector v;
  v.dim = vocab.size();
  for (std::uint32_t idx : hits) {
    if (!v.entries.empty() && v.entries.back().index == idx) {
      ++v.entries.back().count;
    } else {
      v.entries.push_back({idx, 1});
    }
  }
  if (dropped) *dropped = misses;
  return v;
}

void write_vocabulary(const Vocabulary& vocab, std::ostream& out) {
  out << "ngram-vocab v1 n_min=" << vocab.n_min() << " n_max=" << vocab.n_max()
      << " size=" << vocab.size() << '\n';
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const std::string& g = vocab.ngrams()[i];
    if (g.find_first_of("\t\n\r") != std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument,
                  "n-gram at index " + std::to_string(i) + " contains a tab or line break");
    }
    out << g << '\t' << i << '\n';
  }
}

void write_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write vocabulary " + path.string());
  write_vocabulary(vocab, out);
}

Vocabulary read_vocabulary(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw LocatedError(ErrorKind::kParse, source_name, 1, "empty vocabulary file");
  }
  std::size_t n_min = 0, n_max = 0, size = 0;
  {
    std::vector<std::string_view> fields = unicode::split_tokens(line);
    if (fields.size() != 5 || fields[0] != "ngram-vocab" || fields[1] != "v1" ||
        !parse_field(fields[2], "n_min=", n_min) || !parse_field(fields[3], "n_max=", n_max) ||
        !parse_field(fields[4], "size=", size)) {
      throw LocatedError(ErrorKind::kParse, source_name, 1, "bad vocabulary header");
    }
  }
  std::vector<std::string> ngrams;
  ngrams.reserve(size);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.rfind('\t');
    std::size_t index = 0;
    if (tab == std::string::npos || !parse_field(std::string_view(line).substr(tab + 1), "", index)) {
      throw LocatedError(ErrorKind::kParse, source_name, line_no, "expected ngram<TAB>index");
    }
    if (index != ngrams.size()) {
      throw LocatedError(ErrorKind::kParse, source_name, line_no,
                         "index " + std::to_string(index) + " out of order");
    }
    ngrams.push_back(line.substr(0, tab));
  }
  if (ngrams.size() != size) {
    throw LocatedError(ErrorKind::kParse, source_name, line_no,
                       "header declares " + std::to_string(size) + " entries, found " +
                           std::to_string(ngrams.size()));
  }
  try {
    return Vocabulary(std::move(ngrams), static_cast<int>(n_min), static_cast<int>(n_max));
  } catch (const Error& e) {
    throw LocatedError(ErrorKind::kParse, source_name, line_no, e.what());
  }
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open vocabulary " + path.string());
  return read_vocabulary(in, path.string());
}

}  // namespace ofansiv
