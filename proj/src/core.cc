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

#include "morphoseg/core.h"

#include <algorithm>
#include <array>
#include <set>

#include "morphoseg/unicode.h"

namespace morphoseg {
namespace {

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool starts_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

bool ends_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

// `@` + ASCII letters + `@` anywhere in the text.
bool contains_filler_shape(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '@') continue;
    std::size_t j = i + 1;
    while (j < s.size() && is_ascii_letter(s[j])) ++j;
    if (j > i + 1 && j < s.size() && s[j] == '@') return true;
  }
  return false;
}

// `<` + one or more non-angle characters + `>` anywhere in the text.
bool contains_markup_shape(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '<') continue;
    std::size_t j = i + 1;
    while (j < s.size() && s[j] != '<' && s[j] != '>') ++j;
    if (j > i + 1 && j < s.size() && s[j] == '>') return true;
  }
  return false;
}

enum class EscapeMode { kCorpus, kLemma };

struct EscapeTable {
  char32_t prefix = 0;
  // Sorted lead characters; the code for lead_chars[i] is kCodes[i + 1].
  std::vector<char32_t> lead_chars;
};

constexpr std::string_view kCodes = "0123456789abcdefghijklmnopqrstuvwxyz";

// One table for both modes so that unescape needs no mode.
EscapeTable escape_table(const MarkerScheme& scheme) {
  EscapeTable table;
  table.prefix = unicode::decode(scheme.escape_prefix).at(0);
  std::set<char32_t> leads;
  for (const std::string* m : {&scheme.suffix_marker, &scheme.compound_sep, &scheme.bpe_marker,
                               &scheme.case_upper, &scheme.case_lower, &scheme.hyphen_token}) {
    leads.insert(unicode::decode(*m).at(0));
  }
  leads.insert(U'@');
  leads.insert(U'<');
  leads.insert(U'[');
  table.lead_chars.assign(leads.begin(), leads.end());
  return table;
}

bool needs_escape(std::string_view raw, const MarkerScheme& scheme, EscapeMode mode) {
  if (raw.find(scheme.escape_prefix) != std::string_view::npos) return true;
  for (const std::string* m : {&scheme.suffix_marker, &scheme.compound_sep, &scheme.bpe_marker,
                               &scheme.case_upper, &scheme.case_lower, &scheme.hyphen_token}) {
    if (raw.find(*m) != std::string_view::npos) return true;
  }
  if (contains_filler_shape(raw)) return true;
  if (mode == EscapeMode::kCorpus && (is_tag_shaped(raw) || contains_markup_shape(raw))) {
    return true;
  }
  return false;
}

std::string escape_with(std::string_view raw, const MarkerScheme& scheme, EscapeMode mode) {
  if (!needs_escape(raw, scheme, mode)) return std::string(raw);
  const EscapeTable table = escape_table(scheme);
  std::string out;
  out.reserve(raw.size() + 8);
  for (char32_t cp : unicode::decode(raw)) {
    if (cp == table.prefix) {
      unicode::append(out, table.prefix);
      out.push_back(kCodes[0]);
      continue;
    }
    const auto it = std::lower_bound(table.lead_chars.begin(), table.lead_chars.end(), cp);
    const bool markup = cp == U'<' || cp == U'[';
    if (it != table.lead_chars.end() && *it == cp && !(markup && mode == EscapeMode::kLemma)) {
      unicode::append(out, table.prefix);
      out.push_back(kCodes[1 + (it - table.lead_chars.begin())]);
      continue;
    }
    unicode::append(out, cp);
  }
  return out;
}

}  // namespace

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kPlain: return "Plain";
    case TokenKind::kSuffixPart: return "SuffixPart";
    case TokenKind::kCompoundSeparator: return "CompoundSeparator";
    case TokenKind::kCaseMarkUpper: return "CaseMarkUpper";
    case TokenKind::kCaseMarkLower: return "CaseMarkLower";
    case TokenKind::kFiller: return "Filler";
    case TokenKind::kHyphenSeparator: return "HyphenSeparator";
    case TokenKind::kBpeContinuation: return "BpeContinuation";
    case TokenKind::kTag: return "TagToken";
    case TokenKind::kLemma: return "LemmaToken";
  }
  return "Unknown";
}

bool is_protected(TokenKind kind) {
  switch (kind) {
    case TokenKind::kSuffixPart:
    case TokenKind::kCompoundSeparator:
    case TokenKind::kCaseMarkUpper:
    case TokenKind::kCaseMarkLower:
    case TokenKind::kFiller:
    case TokenKind::kHyphenSeparator:
    case TokenKind::kTag:
      return true;
    default:
      return false;
  }
}

bool is_case_mark(TokenKind kind) {
  return kind == TokenKind::kCaseMarkUpper || kind == TokenKind::kCaseMarkLower;
}

bool is_word_part(TokenKind kind) {
  return kind == TokenKind::kPlain || kind == TokenKind::kLemma;
}

void MarkerScheme::validate() const {
  const std::array<const std::string*, 7> all = {&suffix_marker, &compound_sep, &bpe_marker,
                                                 &case_upper,    &case_lower,   &hyphen_token,
                                                 &escape_prefix};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i]->empty()) throw std::invalid_argument("marker strings must be non-empty");
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (*all[i] == *all[j]) {
        throw std::invalid_argument("marker strings must be pairwise distinct: " + *all[i]);
      }
    }
  }
  const std::u32string prefix = unicode::decode(escape_prefix);
  if (prefix.size() != 1 || prefix[0] < 0x80) {
    throw std::invalid_argument("escape prefix must be a single non-ASCII code point");
  }
  for (const std::string* m : all) {
    if (m->find_first_of(" \t\n\r") != std::string::npos) {
      throw std::invalid_argument("marker strings must not contain whitespace");
    }
  }
}

std::string escape_corpus_token(std::string_view raw, const MarkerScheme& scheme) {
  return escape_with(raw, scheme, EscapeMode::kCorpus);
}

std::string escape_lemma_text(std::string_view raw, const MarkerScheme& scheme) {
  return escape_with(raw, scheme, EscapeMode::kLemma);
}

std::string unescape_corpus_token(std::string_view escaped, const MarkerScheme& scheme) {
  if (escaped.find(scheme.escape_prefix) == std::string_view::npos) return std::string(escaped);
  const EscapeTable table = escape_table(scheme);
  const std::u32string cps = unicode::decode(escaped);
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] != table.prefix) {
      unicode::append(out, cps[i]);
      continue;
    }
    if (i + 1 >= cps.size()) {
      throw MalformedInput("truncated escape sequence in '" + std::string(escaped) + "'");
    }
    const char32_t code = cps[++i];
    const std::size_t index = code < 0x80 ? kCodes.find(static_cast<char>(code)) : std::string_view::npos;
    if (index == 0) {
      unicode::append(out, table.prefix);
    } else if (index != std::string_view::npos && index <= table.lead_chars.size()) {
      unicode::append(out, table.lead_chars[index - 1]);
    } else {
      throw MalformedInput("invalid escape sequence in '" + std::string(escaped) + "'");
    }
  }
  return out;
}

bool is_tag_shaped(std::string_view text) {
  if (text.size() < 3) return false;
  if (text.find_first_of(" \t\n\r") != std::string_view::npos) return false;
  if (text.front() == '[') {
    if (text.back() != ']') return false;
    const std::string_view inner = text.substr(1, text.size() - 2);
    return inner.find_first_of("[]") == std::string_view::npos;
  }
  if (text.front() != '<') return false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') return false;
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != '<' && text[j] != '>') ++j;
    if (j == i + 1 || j >= text.size() || text[j] != '>') return false;
    i = j + 1;
  }
  return true;
}

bool is_filler_shaped(std::string_view text) {
  if (text.size() < 3 || text.size() > kMaxFillerLetters + 2) return false;
  if (text.front() != '@' || text.back() != '@') return false;
  return std::all_of(text.begin() + 1, text.end() - 1, is_ascii_letter);
}

Token classify_token(std::string_view text, const MarkerScheme& scheme) {
  Token token{std::string(text), TokenKind::kPlain};
  if (text == scheme.compound_sep) {
    token.kind = TokenKind::kCompoundSeparator;
  } else if (text == scheme.hyphen_token) {
    token.kind = TokenKind::kHyphenSeparator;
  } else if (text == scheme.case_upper) {
    token.kind = TokenKind::kCaseMarkUpper;
  } else if (text == scheme.case_lower) {
    token.kind = TokenKind::kCaseMarkLower;
  } else if (text.size() > scheme.suffix_marker.size() && starts_with(text, scheme.suffix_marker)) {
    token.kind = TokenKind::kSuffixPart;
  } else if (is_filler_shaped(text)) {
    token.kind = TokenKind::kFiller;
  } else if (is_tag_shaped(text)) {
    token.kind = TokenKind::kTag;
  } else if (text.size() > scheme.bpe_marker.size() && ends_with(text, scheme.bpe_marker)) {
    token.kind = TokenKind::kBpeContinuation;
  }
  return token;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = line.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    if (end > i) words.emplace_back(line.substr(i, end - i));
    i = end + 1;
  }
  return words;
}

TokenStream parse_line(std::string_view line, const MarkerScheme& scheme) {
  TokenStream stream;
  for (std::string& w : split_words(line)) stream.push_back(classify_token(w, scheme));
  return stream;
}

std::string join_tokens(const TokenStream& stream) {
  std::string out;
  for (const Token& t : stream) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

Token make_token(std::string text, TokenKind kind) { return Token{std::move(text), kind}; }

}  // namespace morphoseg
