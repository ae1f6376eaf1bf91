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

#include "morphoseg/compound.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphoseg/affix.h"
#include "morphoseg/unicode.h"

namespace morphoseg {
namespace {

using boost::multiprecision::cpp_int;

struct Candidate {
  Decomposition split;
  std::vector<std::uint64_t> counts;  // capped, one per part
  std::vector<std::size_t> part_lengths;
  std::vector<std::size_t> filler_lengths;
};

cpp_int power(cpp_int base, std::size_t exp) {
  cpp_int out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Compares geometric means exactly: (prod a)^(1/n) vs (prod b)^(1/m).
int compare_scores(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  cpp_int pa = 1;
  cpp_int pb = 1;
  for (std::uint64_t v : a) pa *= v;
  for (std::uint64_t v : b) pb *= v;
  const cpp_int lhs = power(pa, b.size());
  const cpp_int rhs = power(pb, a.size());
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

// Higher score; then fewer parts; then longer parts from the left; then
// shorter fillers from the left.
bool better(const Candidate& a, const Candidate& b) {
  const int c = compare_scores(a.counts, b.counts);
  if (c != 0) return c > 0;
  if (a.counts.size() != b.counts.size()) return a.counts.size() < b.counts.size();
  if (a.part_lengths != b.part_lengths) {
    return std::lexicographical_compare(b.part_lengths.begin(), b.part_lengths.end(),
                                        a.part_lengths.begin(), a.part_lengths.end());
  }
  return a.filler_lengths < b.filler_lengths;
}

bool is_separator(TokenKind kind) {
  return kind == TokenKind::kCompoundSeparator || kind == TokenKind::kFiller;
}

class Splitter {
 public:
  Splitter(std::string_view word, const FrequencyLexicon& lexicon, const CompoundConfig& config)
      : lexicon_(lexicon), config_(config), surface_(unicode::decode(word)) {
    folded_ = surface_;
    for (char32_t& c : folded_) c = unicode::to_lower(c);
    for (const std::string& f : config.fillers) fillers_.push_back(unicode::decode(fold_case(f)));
  }

  std::vector<Candidate> enumerate() {
    out_.clear();
    if (config_.max_parts >= 2) walk(0);
    return std::move(out_);
  }

 private:
  void walk(std::size_t pos) {
    const std::size_t n = folded_.size();
    for (std::size_t end = pos + config_.min_part_size; end <= n; ++end) {
      const std::uint64_t count =
          lexicon_.count(unicode::encode(std::u32string_view(folded_).substr(pos, end - pos)));
      if (count == 0 || count < config_.min_part_count) continue;
      parts_.push_back({pos, end});
      counts_.push_back(std::min(count, config_.max_part_count));
      if (end == n) {
        if (parts_.size() >= 2) emit();
      } else if (parts_.size() < config_.max_parts) {
        fillers_used_.push_back({end, end});
        walk(end);
        fillers_used_.pop_back();
        for (const std::u32string& f : fillers_) {
          if (f.empty() || end + f.size() >= n) continue;
          if (std::u32string_view(folded_).substr(end, f.size()) != f) continue;
          fillers_used_.push_back({end, end + f.size()});
          walk(end + f.size());
          fillers_used_.pop_back();
        }
      }
      parts_.pop_back();
      counts_.pop_back();
    }
  }

  void emit() {
    Candidate c;
    c.counts = counts_;
    for (const auto& [b, e] : parts_) {
      c.split.parts.push_back(unicode::encode(std::u32string_view(surface_).substr(b, e - b)));
      c.part_lengths.push_back(e - b);
    }
    for (const auto& [b, e] : fillers_used_) {
      c.split.fillers.push_back(unicode::encode(std::u32string_view(surface_).substr(b, e - b)));
      c.filler_lengths.push_back(e - b);
    }
    out_.push_back(std::move(c));
  }

  const FrequencyLexicon& lexicon_;
  const CompoundConfig& config_;
  std::u32string surface_;
  std::u32string folded_;
  std::vector<std::u32string> fillers_;
  std::vector<std::pair<std::size_t, std::size_t>> parts_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::pair<std::size_t, std::size_t>> fillers_used_;
  std::vector<Candidate> out_;
};

}  // namespace

std::string fold_case(std::string_view text) { return unicode::lower(text); }

void FrequencyLexicon::add(std::string_view surface, std::uint64_t count) {
  if (surface.empty() || count == 0) return;
  std::string folded = fold_case(surface);
  LexiconEntry& entry = entries_[folded];
  entry.count += count;
  auto& seen = casings_[folded].seen;
  auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == surface; });
  if (it == seen.end()) {
    seen.emplace_back(std::string(surface), count);
  } else {
    it->second += count;
  }
  const auto best = std::max_element(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;  // max_element keeps the first of equal maxima
  });
  entry.casing = best->first;
}

void FrequencyLexicon::set(std::string folded, LexiconEntry entry) {
  casings_[folded].seen = {{entry.casing, entry.count}};
  entries_[std::move(folded)] = std::move(entry);
}

const LexiconEntry* FrequencyLexicon::find(std::string_view folded) const {
  const auto it = entries_.find(std::string(folded));
  return it == entries_.end() ? nullptr : &it->second;
}

std::uint64_t FrequencyLexicon::count(std::string_view folded) const {
  const LexiconEntry* e = find(folded);
  return e ? e->count : 0;
}

void add_to_lexicon(FrequencyLexicon& lexicon, const TokenStream& sentence) {
  for (const Token& t : sentence) {
    if (t.kind == TokenKind::kPlain) lexicon.add(t.text);
  }
}

FrequencyLexicon build_frequency_lexicon(const std::vector<TokenStream>& corpus) {
  FrequencyLexicon lexicon;
  for (const TokenStream& s : corpus) add_to_lexicon(lexicon, s);
  return lexicon;
}

FrequencyLexicon read_lexicon(std::istream& in) {
  FrequencyLexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw MalformedInput("lexicon line " + std::to_string(lineno) + ": expected 3 columns");
    }
    const std::string count = line.substr(t1 + 1, t2 - t1 - 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos ||
        count.size() > 19 || std::stoull(count) == 0) {
      throw MalformedInput("lexicon line " + std::to_string(lineno) + ": bad count '" + count + "'");
    }
    lexicon.set(line.substr(0, t1), {std::stoull(count), line.substr(t2 + 1)});
  }
  return lexicon;
}

FrequencyLexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path);
  return read_lexicon(in);
}

void write_lexicon(std::ostream& out, const FrequencyLexicon& lexicon) {
  for (const auto& [word, e] : lexicon.entries()) {
    out << word << '\t' << e.count << '\t' << e.casing << '\n';
  }
}

void CompoundConfig::validate() const {
  if (min_part_size < 1) throw std::invalid_argument("min part size must be at least 1");
  if (max_parts < 1) throw std::invalid_argument("max parts must be at least 1");
  for (const std::string& f : fillers) {
    if (f.empty() || f.size() > kMaxFillerLetters ||
        !std::all_of(f.begin(), f.end(), [](char c) {
          return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        })) {
      throw std::invalid_argument("fillers must be 1.." + std::to_string(kMaxFillerLetters) +
                                  " ASCII letters: '" + f + "'");
    }
  }
}

std::vector<std::string> default_fillers() {
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto add = [&](const std::string& f) {
    if (seen.insert(f).second) out.push_back(f);
  };
  add("s");
  add("es");
  for (const std::string& s : german_suffix_inventory()) add(s);
  for (const std::string& s : german_suffix_inventory()) add(s + "s");
  add("zu");
  return out;
}

CompoundConfig default_compound_config() {
  CompoundConfig config;
  config.fillers = default_fillers();
  return config;
}

TokenStream render_split(std::string_view word, const Decomposition& d,
                         const FrequencyLexicon& lexicon, const MarkerScheme& scheme) {
  TokenStream out;
  out.push_back(unicode::starts_upper(word) ? Token{scheme.case_upper, TokenKind::kCaseMarkUpper}
                                            : Token{scheme.case_lower, TokenKind::kCaseMarkLower});
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (i > 0) {
      const std::string& f = d.fillers[i - 1];
      if (f.empty()) {
        out.push_back({scheme.compound_sep, TokenKind::kCompoundSeparator});
      } else {
        out.push_back({"@" + f + "@", TokenKind::kFiller});
      }
    }
    const LexiconEntry* e = lexicon.find(fold_case(d.parts[i]));
    out.push_back(classify_token(e ? e->casing : d.parts[i], scheme));
  }
  return out;
}

std::optional<Decomposition> best_split(std::string_view word, const FrequencyLexicon& lexicon,
                                        const CompoundConfig& config, const MarkerScheme& scheme) {
  if (word.empty()) return std::nullopt;
  Candidate best;
  best.split.parts = {std::string(word)};
  best.counts = {std::min(lexicon.count(fold_case(word)), config.max_part_count)};
  best.part_lengths = {unicode::length(word)};
  bool split = false;
  for (Candidate& c : Splitter(word, lexicon, config).enumerate()) {
    if (!better(c, best)) continue;
    // Only splits that re-assemble to the exact input may win.
    const TokenStream joined = join_compound(render_split(word, c.split, lexicon, scheme), scheme);
    if (joined.size() != 1 || joined[0].text != word) continue;
    best = std::move(c);
    split = true;
  }
  if (!split) return std::nullopt;
  return best.split;
}

TokenStream split_compound(std::string_view token, const FrequencyLexicon& lexicon,
                           const CompoundConfig& config, const MarkerScheme& scheme) {
  const std::optional<Decomposition> d = best_split(token, lexicon, config, scheme);
  if (!d) return {classify_token(token, scheme)};
  return render_split(token, *d, lexicon, scheme);
}

TokenStream split_compounds(const TokenStream& stream, const FrequencyLexicon& lexicon,
                            const CompoundConfig& config, const MarkerScheme& scheme) {
  TokenStream out;
  out.reserve(stream.size());
  for (const Token& t : stream) {
    if (t.kind != TokenKind::kPlain) {
      out.push_back(t);
      continue;
    }
    for (Token& piece : split_compound(t.text, lexicon, config, scheme)) {
      out.push_back(std::move(piece));
    }
  }
  return out;
}

TokenStream join_compound(const TokenStream& stream, const MarkerScheme& scheme,
                          Strictness strictness, Diagnostics* diag) {
  TokenStream out;
  out.reserve(stream.size());
  auto malformed = [&](const std::string& what) {
    if (strictness == Strictness::kStrict) throw MalformedInput(what);
    if (diag) diag->add(what + "; dropped");
  };
  const std::size_t n = stream.size();
  std::size_t i = 0;
  while (i < n) {
    const Token& t = stream[i];
    std::optional<TokenKind> mark;
    std::size_t first = i;
    if (is_case_mark(t.kind)) {
      if (i + 1 >= n || !is_word_part(stream[i + 1].kind)) {
        malformed("case mark '" + t.text + "' is not followed by a word");
        ++i;
        continue;
      }
      mark = t.kind;
      first = i + 1;
    } else if (is_separator(t.kind)) {
      malformed("separator '" + t.text + "' without a word on both sides");
      ++i;
      continue;
    } else if (!is_word_part(t.kind) || i + 2 >= n || !is_separator(stream[i + 1].kind) ||
               !is_word_part(stream[i + 2].kind)) {
      out.push_back(t);
      ++i;
      continue;
    }
    std::string text = stream[first].text;
    std::size_t j = first + 1;
    while (j + 1 < n && is_separator(stream[j].kind) && is_word_part(stream[j + 1].kind)) {
      if (stream[j].kind == TokenKind::kFiller) {
        text += stream[j].text.substr(1, stream[j].text.size() - 2);
      }
      text += unicode::lower_first(stream[j + 1].text);
      j += 2;
    }
    if (mark == TokenKind::kCaseMarkUpper) text = unicode::upper_first(text);
    if (mark == TokenKind::kCaseMarkLower) text = unicode::lower_first(text);
    out.push_back(classify_token(text, scheme));
    i = j;
  }
  return out;
}

}  // namespace morphoseg
