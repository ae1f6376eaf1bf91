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

// Frequency-driven compound splitting with filler elements and case marks.

#ifndef MORPHOSEG_COMPOUND_H_
#define MORPHOSEG_COMPOUND_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/core.h"

namespace morphoseg {

struct LexiconEntry {
  std::uint64_t count = 0;
  std::string casing;  // most frequent surface form, first seen on ties
};

class FrequencyLexicon {
 public:
  // Counts one occurrence (or `count`) of a surface form.
  void add(std::string_view surface, std::uint64_t count = 1);
  // Sets an entry verbatim, as read from a file.
  void set(std::string folded, LexiconEntry entry);

  const LexiconEntry* find(std::string_view folded) const;
  std::uint64_t count(std::string_view folded) const;
  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  struct Casings {
    std::vector<std::pair<std::string, std::uint64_t>> seen;  // first-seen order
  };
  std::map<std::string, LexiconEntry> entries_;
  std::map<std::string, Casings> casings_;
};

std::string fold_case(std::string_view text);

// Plain tokens only; marker tokens never count.
FrequencyLexicon build_frequency_lexicon(const std::vector<TokenStream>& corpus);
void add_to_lexicon(FrequencyLexicon& lexicon, const TokenStream& sentence);

FrequencyLexicon read_lexicon(std::istream& in);
FrequencyLexicon load_lexicon(const std::string& path);
void write_lexicon(std::ostream& out, const FrequencyLexicon& lexicon);

struct CompoundConfig {
  std::size_t min_part_size = 4;
  std::uint64_t min_part_count = 2;
  std::uint64_t max_part_count = 999999999;
  std::vector<std::string> fillers;
  std::size_t max_parts = 4;

  void validate() const;
};

// German inventory suffixes, each also followed by "s", plus s, es and zu.
std::vector<std::string> default_fillers();
CompoundConfig default_compound_config();

struct Decomposition {
  std::vector<std::string> parts;    // surface substrings of the word
  std::vector<std::string> fillers;  // parts.size() - 1 entries, "" = plain separator
};

// Tokens the splitter would emit for a decomposition of `word`.
TokenStream render_split(std::string_view word, const Decomposition& d,
                         const FrequencyLexicon& lexicon, const MarkerScheme& scheme);

// The winning decomposition, or nullopt when the word stays whole.
std::optional<Decomposition> best_split(std::string_view word, const FrequencyLexicon& lexicon,
                                        const CompoundConfig& config, const MarkerScheme& scheme);

TokenStream split_compound(std::string_view token, const FrequencyLexicon& lexicon,
                           const CompoundConfig& config, const MarkerScheme& scheme);
// Splits Plain tokens; suffix parts and other markers pass through untouched.
TokenStream split_compounds(const TokenStream& stream, const FrequencyLexicon& lexicon,
                            const CompoundConfig& config, const MarkerScheme& scheme);

TokenStream join_compound(const TokenStream& stream, const MarkerScheme& scheme,
                          Strictness strictness = Strictness::kStrict,
                          Diagnostics* diag = nullptr);

}  // namespace morphoseg

#endif  // MORPHOSEG_COMPOUND_H_
