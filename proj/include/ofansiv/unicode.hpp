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

// UTF-8 helpers shared by the lexicon, normalizer and vectorizer. Malformed
// UTF-8 decodes to U+FFFD; nothing here throws on bad input.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ofansiv::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;
inline constexpr char32_t kTatweel = 0x0640;

std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

// Number of codepoints.
std::size_t length(std::string_view utf8);

// Byte offset of every codepoint boundary, including the final one
// (size = length + 1).
std::vector<std::size_t> boundaries(std::string_view utf8);

// Canonical composition (NFC).
std::string nfc(std::string_view utf8);
bool is_nfc(std::string_view utf8);

bool is_whitespace(char32_t cp);
bool is_arabic(char32_t cp);
bool is_letter(char32_t cp);
bool is_mark(char32_t cp);
bool is_digit(char32_t cp);

// Trims and folds every run of Unicode whitespace into one U+0020.
std::string collapse_whitespace(std::string_view utf8);

// Splits on runs of Unicode whitespace; never yields empty tokens.
std::vector<std::string_view> split_tokens(std::string_view utf8);

std::string join_tokens(const std::vector<std::string>& tokens);

bool contains_arabic(std::string_view utf8);

}  // namespace ofansiv::unicode
