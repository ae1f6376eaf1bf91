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

#include "morphoseg/lemmatag.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "morphoseg/unicode.h"

namespace morphoseg {
namespace {

constexpr std::string_view kAbsent = "_";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (true) {
    const std::size_t t = line.find('\t', i);
    out.push_back(line.substr(i, t == std::string::npos ? std::string::npos : t - i));
    if (t == std::string::npos) break;
    i = t + 1;
  }
  return out;
}

bool has_space(const std::string& s) { return s.find_first_of(" \r\n") != std::string::npos; }

bool has_markup(std::string_view s) {
  const std::size_t open = s.find('<');
  if (open == std::string_view::npos) return false;
  const std::size_t close = s.find('>', open + 1);
  return close != std::string_view::npos && close > open + 1;
}

bool is_nominal(const std::string& tag) {
  return tag.rfind("<+NN>", 0) == 0 || tag.rfind("<+NPROP>", 0) == 0;
}

}  // namespace

std::vector<AnnotatedSentence> read_annotations(std::istream& in) {
  std::vector<AnnotatedSentence> corpus;
  AnnotatedSentence current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) corpus.push_back(std::move(current));
      current.clear();
      continue;
    }
    const std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 3) {
      throw ParseError(lineno, "expected 3 tab-separated columns, got " + std::to_string(cols.size()));
    }
    AnalyzedToken token;
    token.surface = cols[0];
    if (token.surface.empty() || has_space(token.surface)) {
      throw ParseError(lineno, "surface must be non-empty and without spaces");
    }
    const bool no_lemma = cols[1].empty() || cols[1] == kAbsent;
    const bool no_tag = cols[2].empty() || cols[2] == kAbsent;
    if (no_lemma != no_tag) throw ParseError(lineno, "lemma and tag must both be present or absent");
    if (!no_tag) {
      if (!is_tag_shaped(cols[2])) throw ParseError(lineno, "malformed tag '" + cols[2] + "'");
      if (has_space(cols[1])) throw ParseError(lineno, "lemma must not contain spaces");
      token.lemma = cols[1];
      token.tag = cols[2];
    }
    current.push_back(std::move(token));
  }
  if (!current.empty()) corpus.push_back(std::move(current));
  return corpus;
}

std::vector<AnnotatedSentence> load_annotations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open annotations: " + path);
  return read_annotations(in);
}

void write_annotations(std::ostream& out, const std::vector<AnnotatedSentence>& corpus) {
  for (const AnnotatedSentence& s : corpus) {
    for (const AnalyzedToken& t : s) {
      out << t.surface << '\t' << t.lemma.value_or(std::string(kAbsent)) << '\t'
          << t.tag.value_or(std::string(kAbsent)) << '\n';
    }
    out << '\n';
  }
}

std::string surface_sentence(const AnnotatedSentence& sentence) {
  std::string out;
  for (const AnalyzedToken& t : sentence) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

TokenStream encode_lemmatag(const AnnotatedSentence& sentence, const MarkerScheme& scheme) {
  TokenStream out;
  out.reserve(sentence.size() * 2);
  for (const AnalyzedToken& t : sentence) {
    if (t.passthrough()) {
      out.push_back({escape_corpus_token(t.surface, scheme), TokenKind::kPlain});
      continue;
    }
    out.push_back({*t.tag, TokenKind::kTag});
    std::string lemma = escape_lemma_text(*t.lemma, scheme);
    // A lemma that would read back as a marker or tag is fully escaped.
    if (classify_token(lemma, scheme).kind != TokenKind::kPlain) {
      lemma = escape_corpus_token(*t.lemma, scheme);
    }
    out.push_back({std::move(lemma), TokenKind::kLemma});
  }
  return out;
}

void InflectionLexicon::add(const std::string& lemma, const std::string& tag,
                            const std::string& surface, std::uint64_t count) {
  auto& list = entries_[{lemma, tag}];
  auto it = std::find_if(list.begin(), list.end(),
                         [&](const InflectionCandidate& c) { return c.surface == surface; });
  if (it == list.end()) {
    list.push_back({surface, count});
  } else {
    it->count += count;
  }
}

void InflectionLexicon::sort() {
  for (auto& [key, list] : entries_) {
    std::sort(list.begin(), list.end(), [](const InflectionCandidate& a, const InflectionCandidate& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.surface < b.surface;
    });
  }
}

void InflectionLexicon::override_counts(const FrequencyLexicon& freq) {
  for (auto& [key, list] : entries_) {
    for (InflectionCandidate& c : list) {
      const std::uint64_t n = freq.count(fold_case(c.surface));
      if (n > 0) c.count = n;
    }
  }
  sort();
}

const std::vector<InflectionCandidate>* InflectionLexicon::find(const std::string& lemma,
                                                               const std::string& tag) const {
  const auto it = entries_.find({lemma, tag});
  return it == entries_.end() ? nullptr : &it->second;
}

InflectionLexicon build_inflection_lexicon(const std::vector<AnnotatedSentence>& corpus,
                                           const FrequencyLexicon* freq) {
  InflectionLexicon lexicon;
  for (const AnnotatedSentence& s : corpus) {
    for (const AnalyzedToken& t : s) {
      if (!t.passthrough()) lexicon.add(*t.lemma, *t.tag, t.surface);
    }
  }
  if (freq) {
    lexicon.override_counts(*freq);
  } else {
    lexicon.sort();
  }
  return lexicon;
}

InflectionLexicon read_inflection_lexicon(std::istream& in) {
  InflectionLexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 4) throw ParseError(lineno, "expected lemma, tag, surface and count");
    const std::string& count = cols[3];
    if (count.empty() || count.size() > 19 || count.find_first_not_of("0123456789") != std::string::npos ||
        std::stoull(count) == 0) {
      throw ParseError(lineno, "bad count '" + count + "'");
    }
    if (!is_tag_shaped(cols[1])) throw ParseError(lineno, "malformed tag '" + cols[1] + "'");
    lexicon.add(cols[0], cols[1], cols[2], std::stoull(count));
  }
  lexicon.sort();
  return lexicon;
}

InflectionLexicon load_inflection_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open inflection lexicon: " + path);
  return read_inflection_lexicon(in);
}

void write_inflection_lexicon(std::ostream& out, const InflectionLexicon& lexicon) {
  for (const auto& [key, list] : lexicon.entries()) {
    for (const InflectionCandidate& c : list) {
      out << key.first << '\t' << key.second << '\t' << c.surface << '\t' << c.count << '\n';
    }
  }
}

std::string fallback_surface(const std::string& lemma, const std::string& tag) {
  std::vector<std::string> segments;
  std::string current;
  std::size_t i = 0;
  while (i < lemma.size()) {
    if (lemma[i] == '<') {
      const std::size_t close = lemma.find('>', i + 1);
      if (close != std::string::npos && close > i + 1 &&
          lemma.find('<', i + 1) > close) {
        if (!current.empty()) segments.push_back(std::move(current));
        current.clear();
        i = close + 1;
        continue;
      }
    }
    current.push_back(lemma[i]);
    ++i;
  }
  if (!current.empty()) segments.push_back(std::move(current));
  if (segments.empty()) return lemma;
  std::string out = segments[0];
  for (std::size_t s = 1; s < segments.size(); ++s) {
    const bool after_hyphen = !segments[s - 1].empty() && segments[s - 1].back() == '-';
    out += after_hyphen ? segments[s] : unicode::lower_first(segments[s]);
  }
  return is_nominal(tag) ? unicode::upper_first(out) : unicode::lower_first(out);
}

TokenStream decode_lemmatag(const TokenStream& stream, const InflectionLexicon& lexicon,
                            const MarkerScheme& scheme, Diagnostics* diag) {
  auto unescape = [&](const std::string& text) {
    try {
      return unescape_corpus_token(text, scheme);
    } catch (const MalformedInput& e) {
      if (diag) diag->add(e.what());
      return text;
    }
  };
  TokenStream out;
  out.reserve(stream.size());
  const std::size_t n = stream.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = stream[i];
    if (t.kind == TokenKind::kTag) {
      if (i + 1 >= n || !is_word_part(stream[i + 1].kind)) {
        if (diag) diag->add("orphan tag '" + t.text + "' dropped");
        continue;
      }
      const std::string lemma = unescape(stream[i + 1].text);
      const std::vector<InflectionCandidate>* candidates = lexicon.find(lemma, t.text);
      std::string surface = candidates && !candidates->empty() ? candidates->front().surface
                                                                : fallback_surface(lemma, t.text);
      out.push_back({std::move(surface), TokenKind::kPlain});
      ++i;
      continue;
    }
    if (is_word_part(t.kind) && has_markup(t.text)) {
      if (diag) diag->add("orphan lemma '" + t.text + "' dropped");
      continue;
    }
    out.push_back({unescape(t.text), TokenKind::kPlain});
  }
  return out;
}

}  // namespace morphoseg
