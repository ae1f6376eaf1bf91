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

// Token and marker data model shared by every segmentation stage.
//
// A sentence is a sequence of space-separated tokens. Sub-word structure is
// expressed with self-describing marker tokens:
//
//   $$en        detached suffix, attaches to the token on its left
//   @@          compound separator between two parts
//   @es@        compound filler, its letters are inserted on join
//   #U / #L     case of the first letter of the re-assembled word
//   @-@         hyphen that was split off a word
//   Wir##       BPE piece continued by the next token
//
// Corpus text that already contains marker-shaped substrings is escaped on
// ingestion so that every stage stays exactly invertible.

#ifndef MORPHOSEG_CORE_H_
#define MORPHOSEG_CORE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morphoseg {

inline constexpr std::string_view kVersion = "1.0.0";

enum class TokenKind {
  kPlain,
  kSuffixPart,
  kCompoundSeparator,
  kCaseMarkUpper,
  kCaseMarkLower,
  kFiller,
  kHyphenSeparator,
  kBpeContinuation,
  kTag,
  kLemma,
};

std::string_view kind_name(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kPlain;

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenStream = std::vector<Token>;

// Kinds that BPE neither segments nor merges across.
bool is_protected(TokenKind kind);
bool is_case_mark(TokenKind kind);
// Plain or lemma text, i.e. something a suffix or separator can attach to.
bool is_word_part(TokenKind kind);

struct MarkerScheme {
  std::string suffix_marker = "$$";
  std::string compound_sep = "@@";
  std::string bpe_marker = "##";
  std::string case_upper = "#U";
  std::string case_lower = "#L";
  std::string hyphen_token = "@-@";
  std::string escape_prefix = "\xEF\xBF\xB0";  // U+FFF0

  // Throws std::invalid_argument unless markers are non-empty and distinct.
  void validate() const;
};

// Fillers are `@` + 1..kMaxFillerLetters ASCII letters + `@`.
inline constexpr std::size_t kMaxFillerLetters = 9;

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects per-sentence repair notes in best-effort mode.
struct Diagnostics {
  std::vector<std::string> messages;
  void add(std::string message) { messages.push_back(std::move(message)); }
  bool empty() const { return messages.empty(); }
};

enum class Strictness { kStrict, kBestEffort };

std::string escape_corpus_token(std::string_view raw, const MarkerScheme& scheme);
std::string unescape_corpus_token(std::string_view escaped, const MarkerScheme& scheme);

// Lemma text keeps its `<..>` markup literal; only marker strings are escaped.
std::string escape_lemma_text(std::string_view raw, const MarkerScheme& scheme);

// `(<[^<>]+>)+` or `\[[^\[\]]+\]`, without whitespace.
bool is_tag_shaped(std::string_view text);
bool is_filler_shaped(std::string_view text);

Token classify_token(std::string_view text, const MarkerScheme& scheme);

// One sentence per line, tokens separated by single spaces.
TokenStream parse_line(std::string_view line, const MarkerScheme& scheme);
std::vector<std::string> split_words(std::string_view line);
std::string join_tokens(const TokenStream& stream);
std::string join_words(const std::vector<std::string>& words);

Token make_token(std::string text, TokenKind kind);

}  // namespace morphoseg

#endif  // MORPHOSEG_CORE_H_
