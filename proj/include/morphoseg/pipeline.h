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

// Corpus preparation and the end-to-end segment/desegment cascades.

#ifndef MORPHOSEG_PIPELINE_H_
#define MORPHOSEG_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/affix.h"
#include "morphoseg/bpe.h"
#include "morphoseg/compound.h"
#include "morphoseg/core.h"
#include "morphoseg/lemmatag.h"

namespace morphoseg {

// Whitespace split plus detachment of `.,;:!?"()` from word edges.
std::vector<std::string> tokenize(std::string_view line);

// Internal hyphens become standalone hyphen tokens; edge hyphens stay.
TokenStream hyphen_split(const TokenStream& stream, const MarkerScheme& scheme);
TokenStream hyphen_join(const TokenStream& stream, const MarkerScheme& scheme,
                        Strictness strictness = Strictness::kStrict, Diagnostics* diag = nullptr);

class TruecaseModel {
 public:
  struct Entry {
    std::string casing;
    std::uint64_t count = 0;
  };

  // Counts one non-initial occurrence of `word`.
  void observe(std::string_view word);
  void set(std::string lowered, Entry entry);
  // Best casing of a word, looked up by its lowercase form.
  const std::string* best(std::string_view word) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
  std::map<std::string, std::vector<std::pair<std::string, std::uint64_t>>> seen_;
};

TruecaseModel learn_truecaser(const std::vector<std::vector<std::string>>& sentences);
TruecaseModel read_truecase_model(std::istream& in);
TruecaseModel load_truecase_model(const std::string& path);
void write_truecase_model(std::ostream& out, const TruecaseModel& model);

// Replaces the sentence-initial word by its majority casing.
std::vector<std::string> apply_truecase(std::vector<std::string> words, const TruecaseModel& model);
// Re-capitalises the first word; a leading upper case mark is resolved instead.
std::vector<std::string> revert_truecase(std::vector<std::string> words, const MarkerScheme& scheme);

struct FilterConfig {
  std::size_t max_len_raw = 50;
  std::size_t max_len_bpe = 60;
};

struct FilterReport {
  std::size_t total = 0;
  std::size_t dropped_raw = 0;
  std::size_t dropped_bpe = 0;
  std::size_t kept = 0;
};

// Returns indices of kept pairs. Line counts must match.
std::vector<std::size_t> filter_lengths(const std::vector<std::string>& source,
                                        const std::vector<std::string>& target,
                                        const FilterConfig& config, const MergeTable& merges,
                                        const MarkerScheme& scheme, FilterReport& report);

enum class Strategy { kBaselineBpe, kLemmaTag, kSegmentation };
Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy strategy);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  Strategy strategy = Strategy::kSegmentation;
  Language language = Language::kGerman;
  CompoundConfig compound = default_compound_config();
  bool hyphen_split = true;
  bool skip_bpe = false;
  Strictness strictness = Strictness::kBestEffort;
  MarkerScheme scheme;
};

// Shared read-only resources; unused ones may stay null.
struct Resources {
  const AffixRuleSet* rules = nullptr;
  const FrequencyLexicon* freq = nullptr;
  const MergeTable* merges = nullptr;
  const TruecaseModel* truecase = nullptr;
  const InflectionLexicon* inflex = nullptr;
};

class Pipeline {
 public:
  Pipeline(PipelineConfig config, Resources resources);

  // Throw ConfigError when a resource the strategy needs is missing.
  void require_segment_resources() const;
  void require_desegment_resources() const;

  TokenStream segment(std::string_view line) const;
  TokenStream segment(const AnnotatedSentence& sentence) const;  // lemma-tag strategy
  std::string desegment(std::string_view line, Diagnostics* diag = nullptr) const;

  const PipelineConfig& config() const { return config_; }

 private:
  TokenStream segment_words(std::vector<std::string> words) const;
  TokenStream split_first_word(const TokenStream& pieces, bool marked) const;

  PipelineConfig config_;
  Resources res_;
};

struct VocabStats {
  std::size_t tokens = 0;
  std::size_t types = 0;
  std::map<std::string, std::size_t> kinds;  // kind name -> token count

  double type_token_ratio() const { return tokens ? static_cast<double>(types) / tokens : 0.0; }
};

class VocabCounter {
 public:
  explicit VocabCounter(MarkerScheme scheme = {}) : scheme_(std::move(scheme)) {}
  void add_line(std::string_view line);
  VocabStats stats() const;

 private:
  MarkerScheme scheme_;
  std::size_t tokens_ = 0;
  std::map<std::string, std::size_t> types_;
  std::map<std::string, std::size_t> kinds_;
};

void write_stats(std::ostream& out, const VocabStats& stats);

}  // namespace morphoseg

#endif  // MORPHOSEG_PIPELINE_H_
