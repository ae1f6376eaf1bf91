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

#include "morphoseg/bpe.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "morphoseg/unicode.h"

namespace morphoseg {
namespace {

std::string rank_key(const std::string& left, const std::string& right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key += left;
  key.push_back(' ');
  key += right;
  return key;
}

// Symbols are interned; pairs are packed into one 64-bit key.
using SymbolId = std::uint32_t;
using PairKey = std::uint64_t;

PairKey pack(SymbolId l, SymbolId r) { return (static_cast<PairKey>(l) << 32) | r; }
SymbolId left_of(PairKey k) { return static_cast<SymbolId>(k >> 32); }
SymbolId right_of(PairKey k) { return static_cast<SymbolId>(k & 0xffffffffu); }

class Learner {
 public:
  explicit Learner(const WordCounts& words) {
    for (const auto& [word, freq] : words) {
      if (word.empty() || freq == 0) continue;
      std::vector<SymbolId> symbols;
      for (const std::string& ch : unicode::characters(word)) symbols.push_back(intern(ch));
      words_.push_back({std::move(symbols), static_cast<std::int64_t>(freq)});
    }
    for (std::size_t w = 0; w < words_.size(); ++w) add_pairs(w, +1);
    flush();
  }

  MergeTable run(std::size_t num_merges) {
    MergeTable table;
    while (table.size() < num_merges && !queue_.empty()) {
      const Entry best = *queue_.begin();
      const PairKey pair = pack(best.left, best.right);
      table.push_back({names_[best.left], names_[best.right]});
      const SymbolId merged = intern(names_[best.left] + names_[best.right]);
      const auto found = where_.find(pair);
      std::vector<std::size_t> affected;
      if (found != where_.end()) affected.assign(found->second.begin(), found->second.end());
      std::sort(affected.begin(), affected.end());
      for (std::size_t w : affected) {
        if (!contains(words_[w].symbols, best.left, best.right)) continue;
        add_pairs(w, -1);
        merge_word(words_[w].symbols, best.left, best.right, merged);
        add_pairs(w, +1);
      }
      where_.erase(pair);
      flush();
    }
    return table;
  }

 private:
  struct WordType {
    std::vector<SymbolId> symbols;
    std::int64_t freq;
  };

  // Highest count first, then the bytewise smallest (left, right).
  struct Entry {
    std::int64_t count;
    SymbolId left;
    SymbolId right;
  };
  struct EntryLess {
    const std::vector<std::string>* names;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.count != b.count) return a.count > b.count;
      const int c = (*names)[a.left].compare((*names)[b.left]);
      if (c != 0) return c < 0;
      const int d = (*names)[a.right].compare((*names)[b.right]);
      if (d != 0) return d < 0;
      return false;
    }
  };

  SymbolId intern(const std::string& s) {
    const auto [it, inserted] = ids_.emplace(s, static_cast<SymbolId>(names_.size()));
    if (inserted) names_.push_back(s);
    return it->second;
  }

  static bool contains(const std::vector<SymbolId>& s, SymbolId l, SymbolId r) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == l && s[i + 1] == r) return true;
    }
    return false;
  }

  static void merge_word(std::vector<SymbolId>& s, SymbolId l, SymbolId r, SymbolId merged) {
    std::vector<SymbolId> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i + 1 < s.size() && s[i] == l && s[i + 1] == r) {
        out.push_back(merged);
        ++i;
      } else {
        out.push_back(s[i]);
      }
    }
    s.swap(out);
  }

  void add_pairs(std::size_t w, int sign) {
    const WordType& word = words_[w];
    for (std::size_t i = 0; i + 1 < word.symbols.size(); ++i) {
      const PairKey key = pack(word.symbols[i], word.symbols[i + 1]);
      delta_[key] += sign * word.freq;
      if (sign > 0) where_[key].insert(w);
    }
  }

  // Moves pending count changes into the ordered queue.
  void flush() {
    for (const auto& [key, d] : delta_) {
      if (d == 0) continue;
      std::int64_t& count = counts_[key];
      if (count > 0) queue_.erase(Entry{count, left_of(key), right_of(key)});
      count += d;
      if (count > 0) {
        queue_.insert(Entry{count, left_of(key), right_of(key)});
      } else {
        counts_.erase(key);
      }
    }
    delta_.clear();
  }

  std::vector<WordType> words_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
  std::unordered_map<PairKey, std::int64_t> counts_;
  std::unordered_map<PairKey, std::int64_t> delta_;
  std::unordered_map<PairKey, std::unordered_set<std::size_t>> where_;
  std::set<Entry, EntryLess> queue_{EntryLess{&names_}};
};

bool is_continuation(const std::string& text, const MarkerScheme& scheme) {
  const std::string& m = scheme.bpe_marker;
  if (text.size() <= m.size() || text.compare(text.size() - m.size(), m.size(), m) != 0) {
    return false;
  }
  return !is_protected(classify_token(text, scheme).kind);
}

}  // namespace

MergeTable::MergeTable(std::vector<Merge> merges) {
  for (Merge& m : merges) push_back(std::move(m));
}

void MergeTable::push_back(Merge merge) {
  ranks_.emplace(rank_key(merge.left, merge.right), static_cast<long>(merges_.size()));
  merges_.push_back(std::move(merge));
}

long MergeTable::rank(const std::string& left, const std::string& right) const {
  const auto it = ranks_.find(rank_key(left, right));
  return it == ranks_.end() ? -1 : it->second;
}

void add_word_counts(WordCounts& counts, const TokenStream& sentence) {
  for (const Token& t : sentence) {
    if (!is_protected(t.kind) && !t.text.empty()) ++counts[t.text];
  }
}

WordCounts count_words(const std::vector<TokenStream>& corpus) {
  WordCounts counts;
  for (const TokenStream& s : corpus) add_word_counts(counts, s);
  return counts;
}

MergeTable learn_bpe(const WordCounts& words, const BpeConfig& config) {
  if (config.num_merges == 0) return {};
  return Learner(words).run(config.num_merges);
}

MergeTable learn_bpe(const std::vector<TokenStream>& corpus, const BpeConfig& config) {
  return learn_bpe(count_words(corpus), config);
}

std::vector<std::string> bpe_pieces(const std::string& word, const MergeTable& merges) {
  std::vector<std::string> symbols = unicode::characters(word);
  if (merges.empty()) return symbols;
  while (symbols.size() > 1) {
    long best = -1;
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      const long r = merges.rank(symbols[i], symbols[i + 1]);
      if (r >= 0 && (best < 0 || r < best)) {
        best = r;
        at = i;
      }
    }
    if (best < 0) break;
    const std::string left = symbols[at];
    const std::string right = symbols[at + 1];
    std::vector<std::string> out;
    out.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
        out.push_back(left + right);
        ++i;
      } else {
        out.push_back(std::move(symbols[i]));
      }
    }
    symbols.swap(out);
  }
  return symbols;
}

TokenStream apply_bpe(const TokenStream& sentence, const MergeTable& merges,
                      const MarkerScheme& scheme) {
  TokenStream out;
  out.reserve(sentence.size() * 2);
  for (const Token& t : sentence) {
    if (is_protected(t.kind)) {
      out.push_back(t);
      continue;
    }
    std::vector<std::string> pieces = bpe_pieces(t.text, merges);
    if (pieces.size() <= 1) {
      out.push_back(t);
      continue;
    }
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      out.push_back({pieces[i] + scheme.bpe_marker, TokenKind::kBpeContinuation});
    }
    Token last = classify_token(pieces.back(), scheme);
    if (t.kind == TokenKind::kLemma && last.kind == TokenKind::kPlain) last.kind = TokenKind::kLemma;
    out.push_back(std::move(last));
  }
  return out;
}

TokenStream merge_bpe(const TokenStream& sentence, const MarkerScheme& scheme,
                      Strictness strictness, Diagnostics* diag) {
  TokenStream out;
  out.reserve(sentence.size());
  std::string pending;
  bool open = false;
  for (const Token& t : sentence) {
    if (is_continuation(t.text, scheme)) {
      pending.append(t.text, 0, t.text.size() - scheme.bpe_marker.size());
      open = true;
      continue;
    }
    if (open) {
      out.push_back(classify_token(pending + t.text, scheme));
      pending.clear();
      open = false;
    } else {
      out.push_back(t);
    }
  }
  if (open) {
    if (strictness == Strictness::kStrict) {
      throw MalformedInput("stream ends with a continued BPE piece");
    }
    if (diag) diag->add("stream ends with a continued BPE piece; marker dropped");
    out.push_back(classify_token(pending, scheme));
  }
  return out;
}

MergeTable read_merges(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBpeHeader) {
    throw MalformedInput("merge table: missing '" + std::string(kBpeHeader) + "' header");
  }
  MergeTable table;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size() ||
        line.find(' ', sp + 1) != std::string::npos) {
      throw MalformedInput("merge table line " + std::to_string(lineno) + ": expected 'left right'");
    }
    table.push_back({line.substr(0, sp), line.substr(sp + 1)});
  }
  return table;
}

MergeTable load_merges(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open merge table: " + path);
  return read_merges(in);
}

void write_merges(std::ostream& out, const MergeTable& merges) {
  out << kBpeHeader << '\n';
  for (const Merge& m : merges.merges()) out << m.left << ' ' << m.right << '\n';
}

}  // namespace morphoseg
