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

#include "morphoseg/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "morphoseg/unicode.h"

namespace morphoseg {
namespace {

constexpr std::string_view kPunctuation = ".,;:!?\"()";

bool is_punct(char c) { return kPunctuation.find(c) != std::string_view::npos; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string unescape_or_keep(const std::string& text, const MarkerScheme& scheme,
                             Strictness strictness, Diagnostics* diag) {
  try {
    return unescape_corpus_token(text, scheme);
  } catch (const MalformedInput& e) {
    if (strictness == Strictness::kStrict) throw;
    if (diag) diag->add(std::string(e.what()) + "; kept verbatim");
    return text;
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j == i) break;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && is_punct(line[b])) out.emplace_back(1, line[b++]);
    std::vector<std::string> tail;
    while (e > b && is_punct(line[e - 1])) tail.emplace_back(1, line[--e]);
    if (e > b) out.emplace_back(line.substr(b, e - b));
    out.insert(out.end(), tail.rbegin(), tail.rend());
    i = j;
  }
  return out;
}

TokenStream hyphen_split(const TokenStream& stream, const MarkerScheme& scheme) {
  TokenStream out;
  out.reserve(stream.size());
  for (const Token& t : stream) {
    if (t.kind != TokenKind::kPlain || t.text.find('-') == std::string::npos) {
      out.push_back(t);
      continue;
    }
    const std::u32string cps = unicode::decode(t.text);
    std::size_t start = 0;
    bool first = true;
    auto emit_piece = [&](std::size_t b, std::size_t e) {
      if (e <= b) return;
      if (!first) out.push_back({scheme.hyphen_token, TokenKind::kHyphenSeparator});
      out.push_back(classify_token(unicode::encode(std::u32string_view(cps).substr(b, e - b)), scheme));
      first = false;
    };
    // Consecutive hyphens give consecutive separator tokens.
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i + 1 < cps.size(); ++i) {
      if (cps[i] == U'-') cuts.push_back(i);
    }
    if (cuts.empty()) {
      out.push_back(t);
      continue;
    }
    for (std::size_t c : cuts) {
      if (c > start) {
        emit_piece(start, c);
      } else {
        out.push_back({scheme.hyphen_token, TokenKind::kHyphenSeparator});
      }
      start = c + 1;
    }
    emit_piece(start, cps.size());
  }
  return out;
}

TokenStream hyphen_join(const TokenStream& stream, const MarkerScheme& scheme,
                        Strictness strictness, Diagnostics* diag) {
  TokenStream out;
  out.reserve(stream.size());
  const std::size_t n = stream.size();
  std::size_t i = 0;
  while (i < n) {
    if (stream[i].kind != TokenKind::kHyphenSeparator) {
      out.push_back(stream[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < n && stream[j].kind == TokenKind::kHyphenSeparator) ++j;
    const bool left_ok = !out.empty() && is_word_part(out.back().kind);
    const bool right_ok = j < n && is_word_part(stream[j].kind);
    if (left_ok && right_ok) {
      std::string text = out.back().text + std::string(j - i, '-') + stream[j].text;
      out.back() = classify_token(text, scheme);
      i = j + 1;
      continue;
    }
    if (strictness == Strictness::kStrict) {
      throw MalformedInput("hyphen token without a word on both sides");
    }
    if (diag) diag->add("hyphen token without a word on both sides; dropped");
    i = j;
  }
  return out;
}

void TruecaseModel::observe(std::string_view word) {
  if (word.empty()) return;
  const std::string lowered = unicode::lower(word);
  auto& seen = seen_[lowered];
  auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == word; });
  if (it == seen.end()) {
    seen.emplace_back(std::string(word), 1);
  } else {
    ++it->second;
  }
  const auto best = std::max_element(seen.begin(), seen.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  Entry& e = entries_[lowered];
  e.casing = best->first;
  e.count = best->second;
}

void TruecaseModel::set(std::string lowered, Entry entry) {
  seen_[lowered] = {{entry.casing, entry.count}};
  entries_[std::move(lowered)] = std::move(entry);
}

const std::string* TruecaseModel::best(std::string_view word) const {
  const auto it = entries_.find(unicode::lower(word));
  return it == entries_.end() ? nullptr : &it->second.casing;
}

TruecaseModel learn_truecaser(const std::vector<std::vector<std::string>>& sentences) {
  TruecaseModel model;
  for (const auto& words : sentences) {
    for (std::size_t i = 1; i < words.size(); ++i) model.observe(words[i]);
  }
  return model;
}

TruecaseModel read_truecase_model(std::istream& in) {
  TruecaseModel model;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw MalformedInput("truecase model line " + std::to_string(lineno) + ": expected 3 columns");
    }
    const std::string count = line.substr(t2 + 1);
    if (count.empty() || count.size() > 19 || count.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInput("truecase model line " + std::to_string(lineno) + ": bad count");
    }
    model.set(line.substr(0, t1), {line.substr(t1 + 1, t2 - t1 - 1), std::stoull(count)});
  }
  return model;
}

TruecaseModel load_truecase_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open truecase model: " + path);
  return read_truecase_model(in);
}

void write_truecase_model(std::ostream& out, const TruecaseModel& model) {
  for (const auto& [lowered, e] : model.entries()) {
    out << lowered << '\t' << e.casing << '\t' << e.count << '\n';
  }
}

std::vector<std::string> apply_truecase(std::vector<std::string> words, const TruecaseModel& model) {
  if (words.empty()) return words;
  if (const std::string* best = model.best(words[0])) words[0] = *best;
  return words;
}

std::vector<std::string> revert_truecase(std::vector<std::string> words, const MarkerScheme& scheme) {
  if (words.empty()) return words;
  if (words[0] == scheme.case_upper && words.size() > 1) {
    words.erase(words.begin());
  }
  words[0] = unicode::upper_first(words[0]);
  return words;
}

std::vector<std::size_t> filter_lengths(const std::vector<std::string>& source,
                                        const std::vector<std::string>& target,
                                        const FilterConfig& config, const MergeTable& merges,
                                        const MarkerScheme& scheme, FilterReport& report) {
  if (source.size() != target.size()) {
    throw ConfigError("source has " + std::to_string(source.size()) + " lines, target has " +
                      std::to_string(target.size()));
  }
  report = FilterReport{};
  report.total = source.size();
  auto bpe_length = [&](const std::vector<std::string>& words) {
    TokenStream s;
    s.reserve(words.size());
    for (const std::string& w : words) s.push_back({escape_corpus_token(w, scheme), TokenKind::kPlain});
    return apply_bpe(s, merges, scheme).size();
  };
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const std::vector<std::string> src = split_words(source[i]);
    const std::vector<std::string> tgt = split_words(target[i]);
    if (src.size() > config.max_len_raw || tgt.size() > config.max_len_raw) {
      ++report.dropped_raw;
      continue;
    }
    if (bpe_length(src) > config.max_len_bpe || bpe_length(tgt) > config.max_len_bpe) {
      ++report.dropped_bpe;
      continue;
    }
    kept.push_back(i);
  }
  report.kept = kept.size();
  return kept;
}

Strategy parse_strategy(std::string_view name) {
  if (name == "segmentation") return Strategy::kSegmentation;
  if (name == "baseline" || name == "baseline-bpe") return Strategy::kBaselineBpe;
  if (name == "lemmatag" || name == "lemma-tag") return Strategy::kLemmaTag;
  throw ConfigError("unknown strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSegmentation: return "segmentation";
    case Strategy::kBaselineBpe: return "baseline";
    case Strategy::kLemmaTag: return "lemmatag";
  }
  return "unknown";
}

Pipeline::Pipeline(PipelineConfig config, Resources resources)
    : config_(std::move(config)), res_(resources) {
  config_.scheme.validate();
  config_.compound.validate();
  if (config_.strategy == Strategy::kSegmentation && !res_.rules) {
    res_.rules = &builtin_rules(config_.language);
  }
}

void Pipeline::require_segment_resources() const {
  if (!config_.skip_bpe && !res_.merges) {
    throw ConfigError("strategy '" + std::string(strategy_name(config_.strategy)) +
                      "' needs a merge table (--bpe) unless BPE is skipped");
  }
  if (config_.strategy == Strategy::kSegmentation && !res_.freq) {
    throw ConfigError("segmentation strategy needs a frequency lexicon (--freq)");
  }
}

void Pipeline::require_desegment_resources() const {
  if (config_.strategy == Strategy::kLemmaTag && !res_.inflex) {
    throw ConfigError("lemma-tag desegmentation needs an inflection lexicon (--inflex)");
  }
}

TokenStream Pipeline::segment(std::string_view line) const {
  require_segment_resources();
  if (config_.strategy == Strategy::kLemmaTag) {
    throw ConfigError("lemma-tag segmentation reads annotated sentences");
  }
  return segment_words(split_words(line));
}

TokenStream Pipeline::segment(const AnnotatedSentence& sentence) const {
  require_segment_resources();
  TokenStream s = encode_lemmatag(sentence, config_.scheme);
  if (!config_.skip_bpe) s = apply_bpe(s, *res_.merges, config_.scheme);
  return s;
}

TokenStream Pipeline::split_first_word(const TokenStream& pieces, bool marked) const {
  const MarkerScheme& scheme = config_.scheme;
  TokenStream out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Token& t = pieces[i];
    if (t.kind != TokenKind::kPlain) {
      out.push_back(t);
      continue;
    }
    TokenStream split = split_compound(t.text, *res_.freq, config_.compound, scheme);
    if (i == 0 && marked) {
      // The sentence-initial mark replaces the compound's own case mark.
      const Token upper{scheme.case_upper, TokenKind::kCaseMarkUpper};
      if (split.size() > 1) {
        split[0] = upper;
        const TokenStream joined = join_compound(split, scheme);
        if (joined.size() != 1 || joined[0].text != unicode::upper_first(t.text)) {
          split = {upper, t};
        }
      } else {
        split.insert(split.begin(), upper);
      }
    }
    for (Token& p : split) out.push_back(std::move(p));
  }
  return out;
}

TokenStream Pipeline::segment_words(std::vector<std::string> words) const {
  const MarkerScheme& scheme = config_.scheme;
  bool marked = false;
  if (res_.truecase && !words.empty()) {
    const std::string* best = res_.truecase->best(words[0]);
    if (best && *best != words[0] && unicode::upper_first(*best) == words[0]) {
      words[0] = *best;
      marked = true;
    }
  }
  TokenStream s;
  s.reserve(words.size() * 3);
  for (const std::string& w : words) s.push_back({escape_corpus_token(w, scheme), TokenKind::kPlain});

  if (config_.strategy == Strategy::kBaselineBpe) {
    if (marked) s.insert(s.begin(), Token{scheme.case_upper, TokenKind::kCaseMarkUpper});
  } else {
    if (config_.hyphen_split) s = hyphen_split(s, scheme);
    s = split_suffixes(s, *res_.rules, scheme);
    s = split_first_word(s, marked);
  }
  if (!config_.skip_bpe) s = apply_bpe(s, *res_.merges, scheme);
  return s;
}

std::string Pipeline::desegment(std::string_view line, Diagnostics* diag) const {
  const MarkerScheme& scheme = config_.scheme;
  const Strictness strict = config_.strictness;
  TokenStream s = merge_bpe(parse_line(line, scheme), scheme, strict, diag);
  switch (config_.strategy) {
    case Strategy::kSegmentation:
      s = join_compound(s, scheme, strict, diag);
      s = join_suffixes(s, scheme, strict, diag);
      s = hyphen_join(s, scheme, strict, diag);
      break;
    case Strategy::kBaselineBpe:
      if (!s.empty() && s[0].kind == TokenKind::kCaseMarkUpper) {
        if (s.size() > 1 && is_word_part(s[1].kind)) {
          s.erase(s.begin());
          s[0].text = unicode::upper_first(s[0].text);
        } else if (strict == Strictness::kStrict) {
          throw MalformedInput("case mark is not followed by a word");
        } else {
          if (diag) diag->add("case mark is not followed by a word; dropped");
          s.erase(s.begin());
        }
      }
      break;
    case Strategy::kLemmaTag: {
      require_desegment_resources();
      return join_tokens(decode_lemmatag(s, *res_.inflex, scheme, diag));
    }
  }
  std::string out;
  for (const Token& t : s) {
    if (!out.empty()) out.push_back(' ');
    out += unescape_or_keep(t.text, scheme, strict, diag);
  }
  return out;
}

void VocabCounter::add_line(std::string_view line) {
  for (const Token& t : parse_line(line, scheme_)) {
    ++tokens_;
    ++types_[t.text];
    ++kinds_[std::string(kind_name(t.kind))];
  }
}

VocabStats VocabCounter::stats() const {
  VocabStats s;
  s.tokens = tokens_;
  s.types = types_.size();
  s.kinds = kinds_;
  return s;
}

void write_stats(std::ostream& out, const VocabStats& stats) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", stats.type_token_ratio());
  out << "tokens\t" << stats.tokens << '\n';
  out << "types\t" << stats.types << '\n';
  out << "type_token_ratio\t" << ratio << '\n';
  for (const auto& [kind, count] : stats.kinds) out << "kind." << kind << '\t' << count << '\n';
}

}  // namespace morphoseg
