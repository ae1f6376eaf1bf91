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

// Suffix detachment driven by ordered, region-constrained rule steps.
// Suffixes are kept as `$$`-marked tokens and the stem is never rewritten.

#ifndef MORPHOSEG_AFFIX_H_
#define MORPHOSEG_AFFIX_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/core.h"

namespace morphoseg {

enum class Language { kGerman, kCzechLight, kCzechAggressive };

// Accepts "de", "german", "cs-light", "czech-light", "cs-aggressive", ...
Language parse_language(std::string_view name);
std::string_view language_name(Language language);

enum class Region { kR1, kR2, kWhole };

struct SuffixRule {
  std::string suffix;       // as written in the rules file (lowercase)
  std::u32string pattern;   // decoded suffix
  std::string condition;    // empty = unconditional
  std::size_t min_word = 0; // rule only fires on words at least this long
};

struct RuleStep {
  int number = 0;
  Region region = Region::kWhole;
  std::vector<SuffixRule> suffixes;
};

struct AffixRuleSet {
  std::string language;
  std::vector<RuleStep> steps;
  std::size_t min_stem_length = 3;
  std::size_t r1_min = 0;
  std::u32string vowels;
  bool mark_uy = false;       // Snowball German: u/y between vowels are consonants
  bool letters_only = false;  // skip tokens with non-letters or mixed case
};

struct Regions {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
};

// Standard Snowball regions on an already lowercased word. r1 is clamped to
// at least `r1_min`; r2 is searched from the unclamped r1.
Regions compute_regions(std::u32string_view word, std::u32string_view vowels,
                        std::size_t r1_min = 3);

inline constexpr std::string_view kAffixHeader = "#morphoseg-affix v1";

AffixRuleSet parse_rules(std::istream& in);
AffixRuleSet load_rules(const std::string& path);
const AffixRuleSet& builtin_rules(Language language);

// Known condition names, for validation and documentation.
const std::vector<std::string>& condition_names();

// Returns {stem, suffix1, suffix2, ...} in surface order; a single element
// when nothing was detached.
std::vector<std::string> detach_suffixes(std::string_view word, const AffixRuleSet& rules);

TokenStream split_suffixes(std::string_view token, const AffixRuleSet& rules,
                           const MarkerScheme& scheme);
// Splits every Plain token of a stream; other tokens pass through.
TokenStream split_suffixes(const TokenStream& stream, const AffixRuleSet& rules,
                           const MarkerScheme& scheme);

inline TokenStream split_suffixes_czech(std::string_view token, Language variant,
                                        const MarkerScheme& scheme) {
  return split_suffixes(token, builtin_rules(variant), scheme);
}

TokenStream join_suffixes(const TokenStream& stream, const MarkerScheme& scheme,
                          Strictness strictness = Strictness::kStrict,
                          Diagnostics* diag = nullptr);

// The 28 German suffixes the splitter can detach.
const std::vector<std::string>& german_suffix_inventory();

}  // namespace morphoseg

#endif  // MORPHOSEG_AFFIX_H_
