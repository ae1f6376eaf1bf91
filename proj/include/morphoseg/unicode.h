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

#ifndef MORPHOSEG_UNICODE_H_
#define MORPHOSEG_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace morphoseg::unicode {

// Code points are decoded losslessly: a byte that is not part of a valid
// UTF-8 sequence maps to U+DC80..U+DCFF (surrogate escape) and is written
// back as the original byte, so decode/encode round-trips arbitrary input.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

// Splits into one string per code point (surrogate-escaped bytes stay single).
std::vector<std::string> characters(std::string_view utf8);
std::size_t length(std::string_view utf8);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
bool is_alpha(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

std::string lower(std::string_view utf8);
std::string upper(std::string_view utf8);
std::string lower_first(std::string_view utf8);
std::string upper_first(std::string_view utf8);

// First code point is an uppercase letter.
bool starts_upper(std::string_view utf8);

}  // namespace morphoseg::unicode

#endif  // MORPHOSEG_UNICODE_H_
