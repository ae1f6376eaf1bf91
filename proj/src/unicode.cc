// Copyright 2026 The morphoseg Authors
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

#include "morphoseg/unicode.h"

#include <algorithm>

#include <unicode/uchar.h>

namespace morphoseg::unicode {
namespace {

constexpr char32_t kEscapeBase = 0xDC00;

bool is_escaped_byte(char32_t cp) { return cp >= 0xDC80 && cp <= 0xDCFF; }

// Returns number of bytes consumed; 0 marks an invalid sequence at `i`.
std::size_t decode_one(std::string_view s, std::size_t i, char32_t& cp) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  }
  std::size_t len;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong forms, encoded surrogates and out-of-range values are invalid.
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

}  // namespace

void append(std::string& out, char32_t cp) {
  if (is_escaped_byte(cp)) {
    out.push_back(static_cast<char>(cp - kEscapeBase));
  } else if (cp < 0x80) {
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

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = 0;
    const std::size_t n = decode_one(utf8, i, cp);
    if (n == 0) {
      out.push_back(kEscapeBase + static_cast<unsigned char>(utf8[i]));
      ++i;
    } else {
      out.push_back(cp);
      i += n;
    }
  }
  return out;
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::vector<std::string> characters(std::string_view utf8) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = 0;
    std::size_t n = decode_one(utf8, i, cp);
    if (n == 0) n = 1;
    out.emplace_back(utf8.substr(i, n));
    i += n;
  }
  return out;
}

std::size_t length(std::string_view utf8) { return decode(utf8).size(); }

char32_t to_lower(char32_t cp) {
  if (is_escaped_byte(cp)) return cp;
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

char32_t to_upper(char32_t cp) {
  if (is_escaped_byte(cp)) return cp;
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp)));
}

bool is_alpha(char32_t cp) {
  return !is_escaped_byte(cp) && u_isalpha(static_cast<UChar32>(cp));
}

bool is_upper(char32_t cp) {
  return !is_escaped_byte(cp) && u_isupper(static_cast<UChar32>(cp));
}

bool is_lower(char32_t cp) {
  return !is_escaped_byte(cp) && u_islower(static_cast<UChar32>(cp));
}

std::string lower(std::string_view utf8) {
  std::u32string cps = decode(utf8);
  for (char32_t& cp : cps) cp = to_lower(cp);
  return encode(cps);
}

std::string upper(std::string_view utf8) {
  std::u32string cps = decode(utf8);
  for (char32_t& cp : cps) cp = to_upper(cp);
  return encode(cps);
}

std::string lower_first(std::string_view utf8) {
  if (utf8.empty()) return {};
  std::u32string cps = decode(utf8);
  cps[0] = to_lower(cps[0]);
  return encode(cps);
}

std::string upper_first(std::string_view utf8) {
  if (utf8.empty()) return {};
  std::u32string cps = decode(utf8);
  cps[0] = to_upper(cps[0]);
  return encode(cps);
}

bool starts_upper(std::string_view utf8) {
  if (utf8.empty()) return false;
  const std::u32string cps = decode(utf8.substr(0, std::min<std::size_t>(4, utf8.size())));
  return !cps.empty() && is_upper(cps[0]);
}

}  // namespace morphoseg::unicode
