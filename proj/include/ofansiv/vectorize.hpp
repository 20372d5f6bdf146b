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

// Character n-gram count features. "Character" means codepoint; windows run
// over the whole string, spaces included.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ofansiv/normalize.hpp"

namespace ofansiv {

inline constexpr int kDefaultNgramMin = 2;
inline constexpr int kDefaultNgramMax = 5;

struct SparseEntry {
  std::uint32_t index;
  std::uint32_t count;

  bool operator==(const SparseEntry&) const = default;
};

// Strictly increasing indices, counts >= 1, indices < dim.
struct SparseVector {
  std::vector<SparseEntry> entries;
  std::size_t dim = 0;

  bool operator==(const SparseVector&) const = default;
};

class Vocabulary {
 public:
  Vocabulary() = default;

  // `ngrams` must be sorted and unique; index i is assigned to ngrams[i].
  Vocabulary(std::vector<std::string> ngrams, int n_min, int n_max,
             std::string fitted_on = {});

  std::optional<std::uint32_t> index_of(std::string_view ngram) const;
  const std::string& ngram(std::uint32_t index) const { return ngrams_[index]; }
  const std::vector<std::string>& ngrams() const { return ngrams_; }

  std::size_t size() const { return ngrams_.size(); }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  const std::string& fitted_on() const { return fitted_on_; }

  // Compares the mapping and n-range; the corpus fingerprint is not part of
  // the serialized form and is ignored.
  bool operator==(const Vocabulary& o) const {
    return n_min_ == o.n_min_ && n_max_ == o.n_max_ && ngrams_ == o.ngrams_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  std::vector<std::string> ngrams_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
  int n_min_ = kDefaultNgramMin;
  int n_max_ = kDefaultNgramMax;
  std::string fitted_on_;
};

// All codepoint windows of length n_min..n_max, grouped by length and then
// by start position. Multiplicities are preserved.
std::vector<std::string> extract_char_ngrams(std::string_view text, int n_min, int n_max);

Vocabulary fit_vocabulary(std::span<const std::string> corpus,
                          int n_min = kDefaultNgramMin, int n_max = kDefaultNgramMax);
Vocabulary fit_vocabulary(std::span<const NormalizedText> corpus,
                          int n_min = kDefaultNgramMin, int n_max = kDefaultNgramMax);

// Out-of-vocabulary windows are dropped; their number goes to `dropped` when
// given.
SparseVector transform(std::string_view text, const Vocabulary& vocab,
                       std::size_t* dropped = nullptr);

// Text format: header `ngram-vocab v1 n_min=<a> n_max=<b> size=<N>`, then
// `ngram<TAB>index` per entry in index order.
void write_vocabulary(const Vocabulary& vocab, std::ostream& out);
void write_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary read_vocabulary(std::istream& in, const std::string& source_name = "<stream>");
Vocabulary read_vocabulary(const std::filesystem::path& path);

// FNV-1a over the documents, as 16 hex digits.
std::string corpus_fingerprint(std::span<const std::string> corpus);

}  // namespace ofansiv
