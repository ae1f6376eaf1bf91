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

#include "morphoseg/affix.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "morphoseg/unicode.h"
#include "rules_data.h"

namespace morphoseg {
namespace {

using Cps = std::u32string;

bool in_set(char32_t c, std::u32string_view set) { return set.find(c) != std::u32string_view::npos; }

bool has_at(const Cps& w, std::size_t pos, std::u32string_view what) {
  return pos + what.size() <= w.size() && std::u32string_view(w).substr(pos, what.size()) == what;
}

// A condition sees the lowercased word truncated to `end`, the suffix start
// `p` and the regions. It returns -1 to reject, else the number of extra
// characters left of `p` that join the detached suffix.
using Condition = std::function<long(const Cps& w, std::size_t p, const Regions& r)>;

const std::map<std::string, Condition>& conditions() {
  static const std::map<std::string, Condition> table = {
      {"s_ending",
       [](const Cps& w, std::size_t p, const Regions&) -> long {
         return p >= 1 && in_set(w[p - 1], U"bdfghklmnrt") ? 0 : -1;
       }},
      {"st_ending",
       [](const Cps& w, std::size_t p, const Regions&) -> long {
         return p >= 4 && in_set(w[p - 1], U"bdfghklmnt") ? 0 : -1;
       }},
      {"niss",
       [](const Cps& w, std::size_t p, const Regions&) -> long {
         return p >= 4 && has_at(w, p - 4, U"niss") ? 1 : 0;
       }},
      {"not_after_e",
       [](const Cps& w, std::size_t p, const Regions& r) -> long {
         return p >= 1 && p - 1 >= r.r2 && w[p - 1] == U'e' ? -1 : 0;
       }},
      {"absorb_ig_r2",
       [](const Cps& w, std::size_t p, const Regions& r) -> long {
         if (p < 2 || p - 2 < r.r2 || !has_at(w, p - 2, U"ig")) return 0;
         if (p >= 3 && p - 3 >= r.r2 && w[p - 3] == U'e') return 0;
         return 2;
       }},
      {"absorb_er_en_r1",
       [](const Cps& w, std::size_t p, const Regions& r) -> long {
         if (p < 2 || p - 2 < r.r1) return 0;
         return has_at(w, p - 2, U"er") || has_at(w, p - 2, U"en") ? 2 : 0;
       }},
      {"absorb_lich_ig_r2",
       [](const Cps& w, std::size_t p, const Regions& r) -> long {
         if (p >= 4 && p - 4 >= r.r2 && has_at(w, p - 4, U"lich")) return 4;
         if (p >= 2 && p - 2 >= r.r2 && has_at(w, p - 2, U"ig")) return 2;
         return 0;
       }},
  };
  return table;
}

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void rules_error(std::size_t line, const std::string& what) {
  throw MalformedInput("affix rules line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& v, std::size_t line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    rules_error(line, "expected a number, got '" + v + "'");
  }
  return std::stoul(v);
}

Region parse_region(const std::string& v, std::size_t line) {
  if (v == "R1") return Region::kR1;
  if (v == "R2") return Region::kR2;
  if (v == "whole") return Region::kWhole;
  rules_error(line, "unknown region '" + v + "'");
}

// Neither lower, title nor upper case.
bool is_mixed_case(const Cps& cps) {
  bool upper_after_first = false;
  bool all_upper = true;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const bool up = unicode::is_upper(cps[i]);
    all_upper &= up;
    if (i > 0 && up) upper_after_first = true;
  }
  return upper_after_first && !all_upper;
}

}  // namespace

Language parse_language(std::string_view name) {
  if (name == "de" || name == "german") return Language::kGerman;
  if (name == "cs" || name == "cs-light" || name == "czech" || name == "czech-light") {
    return Language::kCzechLight;
  }
  if (name == "cs-aggressive" || name == "czech-aggressive") return Language::kCzechAggressive;
  throw std::invalid_argument("unknown language '" + std::string(name) + "'");
}

std::string_view language_name(Language language) {
  switch (language) {
    case Language::kGerman: return "german";
    case Language::kCzechLight: return "czech-light";
    case Language::kCzechAggressive: return "czech-aggressive";
  }
  return "unknown";
}

Regions compute_regions(std::u32string_view word, std::u32string_view vowels, std::size_t r1_min) {
  const std::size_t n = word.size();
  auto next_region = [&](std::size_t from) {
    for (std::size_t i = std::max<std::size_t>(from, 1); i < n; ++i) {
      if (i >= from + 1 && in_set(word[i - 1], vowels) && !in_set(word[i], vowels)) return i + 1;
    }
    return n;
  };
  Regions r;
  const std::size_t r1 = next_region(0);
  r.r2 = next_region(r1);
  r.r1 = std::min(std::max(r1, r1_min), n);
  return r;
}

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : conditions()) out.push_back(name);
    return out;
  }();
  return names;
}

AffixRuleSet parse_rules(std::istream& in) {
  AffixRuleSet rules;
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  std::string step_cond;  // step-wide default condition
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!header) {
      if (raw != kAffixHeader) rules_error(lineno, "missing '" + std::string(kAffixHeader) + "' header");
      header = true;
      continue;
    }
    const bool indented = !raw.empty() && (raw[0] == ' ' || raw[0] == '\t');
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    std::size_t step_number = 0;
    if (!indented && first == "step") {
      std::string n;
      fields >> n;
      step_number = parse_count(n, lineno);
    }
    std::vector<std::pair<std::string, std::string>> attrs;
    for (std::string f; fields >> f;) {
      const std::size_t eq = f.find('=');
      if (eq == std::string::npos) rules_error(lineno, "expected key=value, got '" + f + "'");
      attrs.emplace_back(f.substr(0, eq), f.substr(eq + 1));
    }
    if (indented) {
      if (rules.steps.empty()) rules_error(lineno, "suffix outside of a step");
      RuleStep& step = rules.steps.back();
      SuffixRule rule;
      rule.suffix = first;
      rule.pattern = unicode::decode(first);
      rule.condition = step_cond;
      for (const auto& [k, v] : attrs) {
        if (k == "cond") {
          if (!conditions().count(v)) rules_error(lineno, "unknown condition '" + v + "'");
          rule.condition = v;
        } else if (k == "min_word") {
          rule.min_word = parse_count(v, lineno);
        } else {
          rules_error(lineno, "unknown suffix attribute '" + k + "'");
        }
      }
      if (!step.suffixes.empty() && step.suffixes.back().pattern.size() < rule.pattern.size()) {
        rules_error(lineno, "suffixes within a step must be sorted by descending length");
      }
      step.suffixes.push_back(std::move(rule));
    } else if (first == "step") {
      RuleStep step;
      step.number = static_cast<int>(step_number);
      if (step_number != rules.steps.size() + 1) rules_error(lineno, "steps must be numbered 1, 2, ...");
      step_cond.clear();
      for (const auto& [k, v] : attrs) {
        if (k == "region") {
          step.region = parse_region(v, lineno);
        } else if (k == "cond") {
          if (!conditions().count(v)) rules_error(lineno, "unknown condition '" + v + "'");
          step_cond = v;
        } else {
          rules_error(lineno, "unknown step attribute '" + k + "'");
        }
      }
      rules.steps.push_back(std::move(step));
    } else if (first.find('=') != std::string::npos && attrs.empty()) {
      const std::size_t eq = first.find('=');
      const std::string k = first.substr(0, eq);
      const std::string v = first.substr(eq + 1);
      if (k == "language") {
        rules.language = v;
      } else if (k == "min_stem") {
        rules.min_stem_length = parse_count(v, lineno);
      } else if (k == "r1_min") {
        rules.r1_min = parse_count(v, lineno);
      } else if (k == "vowels") {
        rules.vowels = unicode::decode(v);
      } else if (k == "mark_uy") {
        rules.mark_uy = v == "true";
      } else if (k == "letters_only") {
        rules.letters_only = v == "true";
      } else {
        rules_error(lineno, "unknown setting '" + k + "'");
      }
    } else {
      rules_error(lineno, "cannot parse '" + line + "'");
    }
  }
  if (!header) rules_error(0, "empty rules file");
  for (const RuleStep& step : rules.steps) {
    for (const SuffixRule& s : step.suffixes) {
      if (s.pattern.empty()) rules_error(0, "empty suffix");
    }
  }
  return rules;
}

AffixRuleSet load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open rules file: " + path);
  return parse_rules(in);
}

const AffixRuleSet& builtin_rules(Language language) {
  static const AffixRuleSet german = [] {
    std::istringstream in{std::string(rules_data::kGerman)};
    return parse_rules(in);
  }();
  static const AffixRuleSet czech_light = [] {
    std::istringstream in{std::string(rules_data::kCzechLight)};
    return parse_rules(in);
  }();
  static const AffixRuleSet czech_aggressive = [] {
    std::istringstream in{std::string(rules_data::kCzechAggressive)};
    return parse_rules(in);
  }();
  switch (language) {
    case Language::kGerman: return german;
    case Language::kCzechLight: return czech_light;
    case Language::kCzechAggressive: return czech_aggressive;
  }
  return german;
}

std::vector<std::string> detach_suffixes(std::string_view word, const AffixRuleSet& rules) {
  const Cps original = unicode::decode(word);
  if (original.empty()) return {std::string(word)};
  if (rules.letters_only) {
    if (!std::all_of(original.begin(), original.end(), unicode::is_alpha)) return {std::string(word)};
    if (is_mixed_case(original)) return {std::string(word)};
  }
  Cps w = original;
  for (char32_t& c : w) c = unicode::to_lower(c);
  if (rules.mark_uy) {
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      if (in_set(w[i - 1], rules.vowels) && in_set(w[i + 1], rules.vowels)) {
        if (w[i] == U'u') w[i] = U'U';
        else if (w[i] == U'y') w[i] = U'Y';
      }
    }
  }
  const Regions regions = compute_regions(w, rules.vowels, rules.r1_min);

  std::size_t end = w.size();
  std::vector<std::size_t> cuts;  // suffix start positions, outermost first
  for (const RuleStep& step : rules.steps) {
    const std::size_t region_start = step.region == Region::kR1   ? regions.r1
                                     : step.region == Region::kR2 ? regions.r2
                                                                  : 0;
    const Cps current = w.substr(0, end);
    for (const SuffixRule& rule : step.suffixes) {
      const std::size_t k = rule.pattern.size();
      if (k > end || end < rule.min_word) continue;
      const std::size_t p = end - k;
      if (p < region_start || !has_at(current, p, rule.pattern)) continue;
      long extra = 0;
      if (!rule.condition.empty()) extra = conditions().at(rule.condition)(current, p, regions);
      if (extra >= 0 && p - static_cast<std::size_t>(extra) >= rules.min_stem_length &&
          static_cast<std::size_t>(extra) <= p) {
        end = p - static_cast<std::size_t>(extra);
        cuts.push_back(end);
      }
      break;
    }
  }

  std::vector<std::string> pieces;
  pieces.push_back(unicode::encode(std::u32string_view(original).substr(0, end)));
  // Suffix boundaries in surface order: innermost cut first.
  std::vector<std::size_t> bounds(cuts.rbegin(), cuts.rend());
  bounds.push_back(original.size());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    pieces.push_back(
        unicode::encode(std::u32string_view(original).substr(bounds[i], bounds[i + 1] - bounds[i])));
  }
  return pieces;
}

TokenStream split_suffixes(std::string_view token, const AffixRuleSet& rules,
                           const MarkerScheme& scheme) {
  const std::vector<std::string> pieces = detach_suffixes(token, rules);
  TokenStream out;
  out.push_back(classify_token(pieces[0], scheme));
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    out.push_back({scheme.suffix_marker + pieces[i], TokenKind::kSuffixPart});
  }
  return out;
}

TokenStream split_suffixes(const TokenStream& stream, const AffixRuleSet& rules,
                           const MarkerScheme& scheme) {
  TokenStream out;
  out.reserve(stream.size() * 2);
  for (const Token& t : stream) {
    if (t.kind != TokenKind::kPlain) {
      out.push_back(t);
      continue;
    }
    for (Token& piece : split_suffixes(t.text, rules, scheme)) out.push_back(std::move(piece));
  }
  return out;
}

TokenStream join_suffixes(const TokenStream& stream, const MarkerScheme& scheme,
                          Strictness strictness, Diagnostics* diag) {
  TokenStream out;
  out.reserve(stream.size());
  bool attachable = false;  // the last emitted token may take a suffix
  for (const Token& t : stream) {
    if (t.kind != TokenKind::kSuffixPart) {
      out.push_back(t);
      attachable = is_word_part(t.kind);
      continue;
    }
    const std::string letters = t.text.substr(scheme.suffix_marker.size());
    if (attachable) {
      out.back().text += letters;
      out.back() = classify_token(out.back().text, scheme);
      continue;
    }
    if (strictness == Strictness::kStrict) {
      throw MalformedInput("suffix '" + t.text + "' has no stem to attach to");
    }
    if (diag) diag->add("suffix '" + t.text + "' has no stem; kept without marker");
    out.push_back(classify_token(letters, scheme));
    attachable = is_word_part(out.back().kind);
  }
  return out;
}

const std::vector<std::string>& german_suffix_inventory() {
  static const std::vector<std::string> inventory = {
      "e",   "em",   "en",   "end",  "enheit", "enlich", "er",  "erheit",   "erlich", "ern",
      "es",  "est",  "heit", "ig",   "igend",  "igkeit", "igung", "ik",     "isch",   "keit",
      "lich", "lichkeit", "s", "se", "sen",    "ses",    "st",  "ung"};
  return inventory;
}

}  // namespace morphoseg
