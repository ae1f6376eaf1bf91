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

#include <set>
#include <sstream>

#include "doctest.h"
#include "morphoseg/affix.h"
#include "morphoseg/unicode.h"

using namespace morphoseg;

namespace {

const MarkerScheme kScheme;

std::string split_de(const std::string& word) {
  return join_tokens(split_suffixes(word, builtin_rules(Language::kGerman), kScheme));
}

std::string split_cs(const std::string& word, Language variant) {
  return join_tokens(split_suffixes_czech(word, variant, kScheme));
}

std::string join(const std::string& line) {
  return join_tokens(join_suffixes(parse_line(line, kScheme), kScheme));
}

}  // namespace

TEST_CASE("regions") {
  const std::u32string v = U"aeiouyäöü";
  // standard Snowball: R1 begins after "wir"
  CHECK(compute_regions(U"wirtschaftlichen", v).r1 == 3);
  CHECK(compute_regions(U"wirtschaftlichen", v).r2 == 9);
  CHECK(compute_regions(U"ab", v).r1 == 2);
  CHECK(compute_regions(U"aerobe", v).r1 == 3);
  CHECK(compute_regions(U"beautiful", U"aeiouy", 0).r1 == 5);
  CHECK(compute_regions(U"beautiful", U"aeiouy", 0).r2 == 7);
}

TEST_CASE("German suffix splitting") {
  CHECK(split_de("wirtschaftlichen") == "wirtschaft $$lich $$en");
  CHECK(split_de("Fischen") == "Fisch $$en");
  CHECK(split_de("und") == "und");
  CHECK(split_de("Quecksilber") == "Quecksilb $$er");
  CHECK(split_de("Haus") == "Haus");
  CHECK(split_de("möchte") == "möcht $$e");
  CHECK(split_de("großen") == "groß $$en");
  CHECK(split_de("Grenzwerte") == "Grenzwert $$e");
  CHECK(split_de("Ereignisse") == "Ereignis $$se");
  CHECK(split_de("Fischs") == "Fisch $$s");
  CHECK(split_de("Gemütlichkeit") == "Gemüt $$lichkeit");
}

TEST_CASE("stem is never rewritten") {
  for (const char* w : {"Häusern", "BÄUMEN", "Tauen", "bauen", "Mäuse", "Schlüssel"}) {
    const TokenStream s = split_suffixes(w, builtin_rules(Language::kGerman), kScheme);
    std::string joined;
    for (const Token& t : s) joined += t.kind == TokenKind::kSuffixPart ? t.text.substr(2) : t.text;
    CHECK(joined == w);
    CHECK(std::string(w).rfind(s[0].text, 0) == 0);
  }
}

TEST_CASE("only plain tokens are split") {
  const TokenStream in = parse_line("#U Fischen $$en Wir## @es@", kScheme);
  CHECK(join_tokens(split_suffixes(in, builtin_rules(Language::kGerman), kScheme)) ==
        "#U Fisch $$en $$en Wir## @es@");
}

TEST_CASE("joining suffixes") {
  CHECK(join("Fisch $$en") == "Fischen");
  CHECK(join("möcht $$e") == "möchte");
  CHECK(join("Haus") == "Haus");
  CHECK(join("wirtschaft $$lich $$en die") == "wirtschaftlichen die");
  CHECK_THROWS_AS(join("$$en Fisch"), MalformedInput);
  Diagnostics d;
  const TokenStream out = join_suffixes(parse_line("$$en Fisch", kScheme), kScheme,
                                        Strictness::kBestEffort, &d);
  CHECK(join_tokens(out) == "en Fisch");
  CHECK(d.messages.size() == 1);
}

TEST_CASE("Czech variants") {
  CHECK(split_cs("ženám", Language::kCzechLight) == "žen $$ám");
  CHECK(split_cs("pes", Language::kCzechLight) == "pes");
  CHECK(split_cs("domeček", Language::kCzechLight) == "domeček");
  CHECK(split_cs("domeček", Language::kCzechAggressive) == "dom $$eček");
  CHECK(split_cs("Praha", Language::kCzechLight) == "Prah $$a");
}

TEST_CASE("Czech round-trip") {
  for (Language l : {Language::kCzechLight, Language::kCzechAggressive}) {
    for (const char* w : {"ženám", "hradech", "městech", "kočkami", "nejkrásnější", "domečkem",
                          "učitelův", "matčin", "stolům", "X", ""}) {
      const std::string s = split_cs(w, l);
      CHECK(join(s) == w);
    }
  }
}

TEST_CASE("German inventory") {
  const auto& inv = german_suffix_inventory();
  CHECK(inv.size() == 28);
  CHECK(std::set<std::string>(inv.begin(), inv.end()).size() == 28);
}

TEST_CASE("rules file parsing") {
  std::istringstream ok(
      "#morphoseg-affix v1\nlanguage=test\nmin_stem=2\nstep 1 region=whole\n  ing\n  s cond=s_ending\n");
  const AffixRuleSet r = parse_rules(ok);
  CHECK(r.steps.size() == 1);
  CHECK(r.steps[0].suffixes.size() == 2);
  CHECK(join_tokens(split_suffixes("walking", r, kScheme)) == "walk $$ing");

  std::istringstream unsorted("#morphoseg-affix v1\nstep 1 region=R1\n  e\n  en\n");
  CHECK_THROWS(parse_rules(unsorted));
  std::istringstream no_header("step 1 region=R1\n");
  CHECK_THROWS(parse_rules(no_header));
  std::istringstream bad_cond("#morphoseg-affix v1\nstep 1 region=R1\n  e cond=nope\n");
  CHECK_THROWS(parse_rules(bad_cond));
  std::istringstream bad_step("#morphoseg-affix v1\nstep 2 region=R1\n  e\n");
  CHECK_THROWS(parse_rules(bad_step));
}

TEST_CASE("language names") {
  CHECK(parse_language("de") == Language::kGerman);
  CHECK(parse_language("cs-aggressive") == Language::kCzechAggressive);
  CHECK_THROWS(parse_language("fr"));
}
