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

#include "ofansiv/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace ofansiv::unicode {
namespace {

const icu::Normalizer2& nfc_instance() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
      throw std::runtime_error(std::string("ICU NFC unavailable: ") +
                               u_errorName(status));
    }
    return n;
  }();
  return *instance;
}

// Decodes one codepoint starting at `i`, advancing it.
char32_t next(std::string_view s, std::size_t& i) {
  int32_t pos = static_cast<int32_t>(i);
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  UChar32 c;
  U8_NEXT(p, pos, static_cast<int32_t>(s.size()), c);
  i = static_cast<std::size_t>(pos);
  return c < 0 ? kReplacementChar : static_cast<char32_t>(c);
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) out.push_back(next(utf8, i));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacementChar;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) append(out, cp);
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < utf8.size(); ++n) next(utf8, i);
  return n;
}

std::vector<std::size_t> boundaries(std::string_view utf8) {
  std::vector<std::size_t> out;
  out.reserve(utf8.size() + 1);
  std::size_t i = 0;
  while (i < utf8.size()) {
    out.push_back(i);
    next(utf8, i);
  }
  out.push_back(utf8.size());
  return out;
}

std::string nfc(std::string_view utf8) {
  // Fast path: ASCII is always NFC.
  bool ascii = true;
  for (char c : utf8) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) return std::string(utf8);

  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString dst = nfc_instance().normalize(src, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("NFC failed: ") + u_errorName(status));
  }
  std::string out;
  dst.toUTF8String(out);
  return out;
}

bool is_nfc(std::string_view utf8) { return nfc(utf8) == utf8; }

bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_arabic(char32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x0870 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFC);
}

bool is_letter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }

bool is_mark(char32_t cp) {
  return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_M_MASK) != 0;
}

bool is_digit(char32_t cp) {
  return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_N_MASK) != 0;
}

std::string collapse_whitespace(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < utf8.size()) {
    std::size_t start = i;
    char32_t cp = next(utf8, i);
    if (is_whitespace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (cp == kReplacementChar) {
      append(out, cp);
    } else {
      out.append(utf8.substr(start, i - start));
    }
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view utf8) {
  std::vector<std::string_view> tokens;
  std::size_t token_start = std::string_view::npos;
  std::size_t i = 0;
  while (i < utf8.size()) {
    std::size_t start = i;
    char32_t cp = next(utf8, i);
    if (is_whitespace(cp)) {
      if (token_start != std::string_view::npos) {
        tokens.push_back(utf8.substr(token_start, start - token_start));
        token_start = std::string_view::npos;
      }
    } else if (token_start == std::string_view::npos) {
      token_start = start;
    }
  }
  if (token_start != std::string_view::npos) {
    tokens.push_back(utf8.substr(token_start));
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

bool contains_arabic(std::string_view utf8) {
  std::size_t i = 0;
  while (i < utf8.size()) {
    if (is_arabic(next(utf8, i))) return true;
  }
  return false;
}

}  // namespace ofansiv::unicode
