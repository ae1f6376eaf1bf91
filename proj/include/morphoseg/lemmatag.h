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

// Lemma-tag codec: each analysed word becomes a tag token followed by a
// lemma token; decoding re-inflects through a corpus-derived lexicon.

#ifndef MORPHOSEG_LEMMATAG_H_
#define MORPHOSEG_LEMMATAG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphoseg/compound.h"
#include "morphoseg/core.h"

namespace morphoseg {

class ParseError : public MalformedInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : MalformedInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct AnalyzedToken {
  std::string surface;
  std::optional<std::string> lemma;  // set together with tag
  std::optional<std::string> tag;

  bool passthrough() const { return !tag.has_value(); }
};

using AnnotatedSentence = std::vector<AnalyzedToken>;

// `surface<TAB>lemma<TAB>tag` per line, blank line between sentences,
// `_` for absent lemma and tag.
std::vector<AnnotatedSentence> read_annotations(std::istream& in);
std::vector<AnnotatedSentence> load_annotations(const std::string& path);
void write_annotations(std::ostream& out, const std::vector<AnnotatedSentence>& corpus);

std::string surface_sentence(const AnnotatedSentence& sentence);

TokenStream encode_lemmatag(const AnnotatedSentence& sentence, const MarkerScheme& scheme);

struct InflectionCandidate {
  std::string surface;
  std::uint64_t count = 0;

  friend bool operator==(const InflectionCandidate&, const InflectionCandidate&) = default;
};

class InflectionLexicon {
 public:
  using Key = std::pair<std::string, std::string>;  // (lemma, tag)

  void add(const std::string& lemma, const std::string& tag, const std::string& surface,
           std::uint64_t count = 1);
  // Count descending, then surface ascending.
  void sort();
  void override_counts(const FrequencyLexicon& freq);

  const std::vector<InflectionCandidate>* find(const std::string& lemma, const std::string& tag) const;
  const std::map<Key, std::vector<InflectionCandidate>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, std::vector<InflectionCandidate>> entries_;
};

InflectionLexicon build_inflection_lexicon(const std::vector<AnnotatedSentence>& corpus,
                                           const FrequencyLexicon* freq = nullptr);

InflectionLexicon read_inflection_lexicon(std::istream& in);
InflectionLexicon load_inflection_lexicon(const std::string& path);
void write_inflection_lexicon(std::ostream& out, const InflectionLexicon& lexicon);

// Surface guess for an unknown pair: markup stripped, non-initial segments
// lowercased, capitalised for nominal tags.
std::string fallback_surface(const std::string& lemma, const std::string& tag);

// Input is an unsegmented lemma-tag stream (run merge_bpe first). Output
// tokens are raw surface forms.
TokenStream decode_lemmatag(const TokenStream& stream, const InflectionLexicon& lexicon,
                            const MarkerScheme& scheme, Diagnostics* diag = nullptr);

}  // namespace morphoseg

#endif  // MORPHOSEG_LEMMATAG_H_
