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

#ifndef MORPHOSEG_BPE_H_
#define MORPHOSEG_BPE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphoseg/core.h"

namespace morphoseg {

struct Merge {
  std::string left;
  std::string right;

  friend bool operator==(const Merge&, const Merge&) = default;
};

class MergeTable {
 public:
  MergeTable() = default;
  explicit MergeTable(std::vector<Merge> merges);

  void push_back(Merge merge);
  const std::vector<Merge>& merges() const { return merges_; }
  std::size_t size() const { return merges_.size(); }
  bool empty() const { return merges_.empty(); }

  // Position in learned order, or -1 when the pair was never merged.
  long rank(const std::string& left, const std::string& right) const;

  friend bool operator==(const MergeTable& a, const MergeTable& b) { return a.merges_ == b.merges_; }

 private:
  std::vector<Merge> merges_;
  std::unordered_map<std::string, long> ranks_;
};

struct BpeConfig {
  std::size_t num_merges = 29500;
};

// Word type -> frequency. Ordered so that learning never depends on hashing.
using WordCounts = std::map<std::string, std::uint64_t>;

// Counts every token BPE may segment; protected kinds are skipped.
WordCounts count_words(const std::vector<TokenStream>& corpus);
void add_word_counts(WordCounts& counts, const TokenStream& sentence);

MergeTable learn_bpe(const WordCounts& words, const BpeConfig& config);
MergeTable learn_bpe(const std::vector<TokenStream>& corpus, const BpeConfig& config);

// Replays merges on one word; returns the pieces without markers.
std::vector<std::string> bpe_pieces(const std::string& word, const MergeTable& merges);

TokenStream apply_bpe(const TokenStream& sentence, const MergeTable& merges,
                      const MarkerScheme& scheme);
TokenStream merge_bpe(const TokenStream& sentence, const MarkerScheme& scheme,
                      Strictness strictness = Strictness::kStrict, Diagnostics* diag = nullptr);

inline constexpr std::string_view kBpeHeader = "#morphoseg-bpe v1";

MergeTable read_merges(std::istream& in);
MergeTable load_merges(const std::string& path);
void write_merges(std::ostream& out, const MergeTable& merges);

}  // namespace morphoseg

#endif  // MORPHOSEG_BPE_H_
