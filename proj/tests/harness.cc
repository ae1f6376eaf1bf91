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

#include "harness.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphoseg/unicode.h"

namespace morphoseg::testing {

namespace fs = std::filesystem;

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::array<char, 65536> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

std::string make_temp_dir(const std::string& tag) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("morphoseg-" + tag + "-" + std::to_string(getpid()) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::vector<FixtureResult> run_fixture_suite(const std::string& root, const std::string& cli) {
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<FixtureResult> results;
  for (const fs::path& dir : dirs) {
    FixtureResult r;
    r.id = dir.filename().string();
    try {
      std::string cmd = read_file((dir / "cmd.txt").string());
      while (!cmd.empty() && (cmd.back() == '\n' || cmd.back() == '\r')) cmd.pop_back();
      const std::string full = "cd " + shell_quote(dir.string()) + " && MORPHOSEG=" + shell_quote(cli) +
                               " sh -c " + shell_quote(cmd) + " < input.txt";
      const CommandResult got = run_command(full);
      const std::string expected = read_file((dir / "expected.txt").string());
      r.passed = got.output == expected;
      if (!r.passed) {
        std::istringstream a(got.output), b(expected);
        std::string la, lb;
        for (int line = 1;; ++line) {
          const bool ha = static_cast<bool>(std::getline(a, la));
          const bool hb = static_cast<bool>(std::getline(b, lb));
          if (!ha && !hb) {
            r.detail = "trailing bytes differ";
            break;
          }
          if (ha != hb || la != lb) {
            r.detail = "line " + std::to_string(line) + ": got '" + (ha ? la : "<eof>") +
                       "', expected '" + (hb ? lb : "<eof>") + "'";
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

// --- BPE oracle -------------------------------------------------------------

namespace {

std::vector<std::string> utf8_chars(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if (c >= 0xF0) {
      len = 4;
    } else if (c >= 0xE0) {
      len = 3;
    } else if (c >= 0xC0) {
      len = 2;
    }
    len = std::min(len, s.size() - i);
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace

MergeTable oracle_learn_bpe(const WordCounts& words, std::size_t num_merges) {
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> corpus;
  for (const auto& [w, c] : words) corpus.emplace_back(utf8_chars(w), c);
  MergeTable table;
  while (table.size() < num_merges) {
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
    for (const auto& [symbols, freq] : corpus) {
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) counts[{symbols[i], symbols[i + 1]}] += freq;
    }
    if (counts.empty()) break;
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    const auto [left, right] = best->first;
    table.push_back({left, right});
    for (auto& entry : corpus) {
      std::vector<std::string>& symbols = entry.first;
      std::vector<std::string> merged;
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
          merged.push_back(left + right);
          ++i;
        } else {
          merged.push_back(symbols[i]);
        }
      }
      symbols = std::move(merged);
    }
  }
  return table;
}

// --- compound oracle --------------------------------------------------------

namespace {

using boost::multiprecision::cpp_int;

struct Scored {
  std::vector<std::uint64_t> counts;
  std::vector<std::size_t> part_lengths;
  std::vector<std::size_t> filler_lengths;
  OracleSplit split;
};

// +1 when a beats b under the declared ordering.
int compare(const Scored& a, const Scored& b) {
  cpp_int pa = 1, pb = 1;
  for (auto v : a.counts) pa *= v;
  for (auto v : b.counts) pb *= v;
  cpp_int lhs = 1, rhs = 1;
  for (std::size_t i = 0; i < b.counts.size(); ++i) lhs *= pa;
  for (std::size_t i = 0; i < a.counts.size(); ++i) rhs *= pb;
  if (lhs != rhs) return lhs > rhs ? 1 : -1;
  if (a.counts.size() != b.counts.size()) return a.counts.size() < b.counts.size() ? 1 : -1;
  if (a.part_lengths != b.part_lengths) return a.part_lengths > b.part_lengths ? 1 : -1;
  if (a.filler_lengths != b.filler_lengths) return a.filler_lengths < b.filler_lengths ? 1 : -1;
  return 0;
}

std::string lower_all(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& c : out) c = unicode::to_lower(c);
  return unicode::encode(out);
}

}  // namespace

OracleSplit oracle_best_split(const std::string& word, const FrequencyLexicon& lexicon,
                              const CompoundConfig& config) {
  const std::u32string cps = unicode::decode(word);
  const std::size_t n = cps.size();
  Scored best;
  best.counts = {std::min(lexicon.count(fold_case(word)), config.max_part_count)};
  best.part_lengths = {n};
  if (n < 2) return best.split;
  std::set<std::string> fillers;
  for (const std::string& f : config.fillers) fillers.insert(fold_case(f));

  auto reassembles = [&](const std::vector<std::u32string>& pieces, const std::vector<bool>& is_filler) {
    std::string joined;
    bool first_part = true;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (is_filler[i]) {
        joined += unicode::encode(pieces[i]);
        continue;
      }
      const std::string casing = lexicon.find(lower_all(pieces[i]))->casing;
      joined += first_part ? casing : unicode::lower_first(casing);
      first_part = false;
    }
    joined = unicode::starts_upper(word) ? unicode::upper_first(joined) : unicode::lower_first(joined);
    return joined == word;
  };

  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::u32string> pieces;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || (mask >> (i - 1) & 1u)) {
        pieces.push_back(cps.substr(start, i - start));
        start = i;
      }
    }
    const std::size_t k = pieces.size();
    std::vector<bool> is_filler(k, false);
    std::function<void(std::size_t)> label = [&](std::size_t i) {
      if (i == k) {
        Scored s;
        for (std::size_t j = 0; j < k; ++j) {
          const std::string text = unicode::encode(pieces[j]);
          if (is_filler[j]) {
            s.split.fillers.push_back(text);
            s.filler_lengths.push_back(pieces[j].size());
            continue;
          }
          if (j > 0 && !is_filler[j - 1]) {
            s.split.fillers.emplace_back();
            s.filler_lengths.push_back(0);
          }
          s.split.parts.push_back(text);
          s.part_lengths.push_back(pieces[j].size());
          s.counts.push_back(std::min(lexicon.count(lower_all(pieces[j])), config.max_part_count));
        }
        const std::size_t parts = s.split.parts.size();
        if (parts < 2 || parts > config.max_parts) return;
        if (compare(s, best) <= 0) return;
        if (!reassembles(pieces, is_filler)) return;
        s.split.split = true;
        best = std::move(s);
        return;
      }
      // part
      const std::string folded = lower_all(pieces[i]);
      const std::uint64_t c = lexicon.count(folded);
      if (pieces[i].size() >= config.min_part_size && c > 0 && c >= config.min_part_count) {
        is_filler[i] = false;
        label(i + 1);
      }
      // filler: never first, last, or next to another filler
      if (i > 0 && i + 1 < k && !is_filler[i - 1] && fillers.count(folded)) {
        is_filler[i] = true;
        label(i + 1);
        is_filler[i] = false;
      }
    };
    label(0);
  }
  return best.split;
}

// --- fuzz -------------------------------------------------------------------

std::vector<std::string> fuzz_sentences(std::size_t n, std::uint64_t seed,
                                        const std::vector<std::string>& vocabulary) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  static const std::vector<std::string> kSpecial = {
      "$$", "$$en", "$$$", "@@", "@@@", "##", "a##", "##b", "#U", "#L", "#Uber", "@-@", "@es@",
      "@x@y", "@abcdefghij@", "<+NN>", "<+NN><Fem>", "[APPR-Acc]", "[", "]", "<", ">", "<>",
      "a<b>c", "\xEF\xBF\xB0", "\xEF\xBF\xB0" "0", "x\xEF\xBF\xB0" "4", "@", "#", "$", "-", "--",
      "-a", "a-", "a--b", "EU-Kommission", "A-B-C", "@-@-@", "#U@@", "$$##", "%", "&amp;",
      "Ä", "ß", "ẞ", "İstanbul", "ǅemal", "Σίσυφος", "ΌΣΟΣ", "Москва", "日本語", "😀", "🇩🇪",
      "e\xCC\x81", "\xCC\x81x", "ﬁsch", "Straße", "STRASSE", "1990", ",", ".", "\"", "(", ")"};
  static const std::vector<std::pair<char32_t, char32_t>> kRanges = {
      {0x21, 0x7E},       {0xA1, 0xFF},     {0x100, 0x17F},  {0x370, 0x3FF},   {0x400, 0x4FF},
      {0x300, 0x36F},     {0x1E00, 0x1EFF}, {0x3040, 0x30FF}, {0x4E00, 0x4E80}, {0x1F600, 0x1F64F},
      {0xFFF0, 0xFFFD},   {0x2000, 0x206F}};
  auto random_word = [&]() {
    std::u32string w;
    const std::size_t len = 1 + pick(10);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& [lo, hi] = kRanges[pick(kRanges.size())];
      char32_t c = lo + static_cast<char32_t>(pick(hi - lo + 1));
      if (c == U' ' || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029) c = U'x';
      w.push_back(c);
    }
    return unicode::encode(w);
  };
  auto vocab_word = [&]() {
    if (vocabulary.empty()) return std::string("Fisch");
    std::string w = vocabulary[pick(vocabulary.size())];
    switch (pick(6)) {
      case 0: return unicode::upper_first(w);
      case 1: return unicode::lower_first(w);
      case 2: return unicode::upper(w);
      case 3: return w + vocabulary[pick(vocabulary.size())];  // ad hoc compound
      case 4: return w + "-" + vocabulary[pick(vocabulary.size())];
      default: return w;
    }
  };
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> tokens;
    const std::size_t len = pick(20) == 0 ? 0 : 1 + pick(18);
    for (std::size_t t = 0; t < len; ++t) {
      const std::size_t r = pick(10);
      std::string tok;
      if (r < 5) {
        tok = vocab_word();
      } else if (r < 7) {
        tok = kSpecial[pick(kSpecial.size())];
      } else if (r < 9) {
        tok = random_word();
      } else {
        tok = vocab_word() + kSpecial[pick(kSpecial.size())] + random_word();
      }
      tokens.push_back(tok);
    }
    std::string line;
    for (const std::string& t : tokens) {
      if (!line.empty()) line.push_back(' ');
      line += t;
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace morphoseg::testing
