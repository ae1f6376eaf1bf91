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

#include <sstream>

#include "doctest.h"
#include "morphoseg/lemmatag.h"

using namespace morphoseg;

namespace {

const MarkerScheme kScheme;

std::vector<AnnotatedSentence> parse(const std::string& text) {
  std::istringstream in(text);
  return read_annotations(in);
}

std::string decode(const std::string& line, const InflectionLexicon& lex, Diagnostics* diag = nullptr) {
  return join_tokens(decode_lemmatag(parse_line(line, kScheme), lex, kScheme, diag));
}

const char* kTable1 =
    "die\tdie<Def>\t<+ART><Fem><Nom><Sg><St>\n"
    "EU-Kommission\tEU-<TRUNC>Kommission\t<+NN><Fem><Nom><Sg><NA>\n"
    "will\twollen\t<+V><1><Sg><Pres><Ind>\n"
    "Grenzen\tGrenze\t<+NN><Fem><Acc><Pl><NA>\n"
    "in\tin\t[APPR-Dat]\n"
    "großen\tgroß<Pos>\t<+ADJ><NoGend><Dat><Pl><St>\n"
    "Raubfischen\tRaub<NN>Fisch\t<+NN><Masc><Dat><Pl><NA>\n"
    "2019\t_\t_\n"
    "verdoppeln\tverdoppeln\t<+V><Inf>\n";

}  // namespace

TEST_CASE("reading annotations") {
  const auto corpus = parse(std::string(kTable1) + "\n\nHaus\tHaus\t<+NN><Neut><Nom><Sg><NA>\n");
  REQUIRE(corpus.size() == 2);
  REQUIRE(corpus[0].size() == 9);
  CHECK(corpus[0][3].surface == "Grenzen");
  CHECK(*corpus[0][3].lemma == "Grenze");
  CHECK(*corpus[0][3].tag == "<+NN><Fem><Acc><Pl><NA>");
  CHECK(corpus[0][7].passthrough());
  CHECK_FALSE(corpus[0][7].lemma);
  CHECK(surface_sentence(corpus[0]) ==
        "die EU-Kommission will Grenzen in großen Raubfischen 2019 verdoppeln");
  CHECK(parse("").empty());
}

TEST_CASE("annotation errors carry line numbers") {
  try {
    parse("die\tdie<Def>\t<+ART>\nGrenzen\tGrenze\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("x\t_\t<+NN>\n"), ParseError);
  CHECK_THROWS_AS(parse("x\tx\tNN\n"), ParseError);
  CHECK_THROWS_AS(parse("\tx\t<+NN>\n"), ParseError);
}

TEST_CASE("writing annotations round-trips") {
  const auto corpus = parse(kTable1);
  std::ostringstream out;
  write_annotations(out, corpus);
  const auto back = parse(out.str());
  REQUIRE(back.size() == 1);
  CHECK(surface_sentence(back[0]) == surface_sentence(corpus[0]));
  CHECK(*back[0][6].lemma == "Raub<NN>Fisch");
}

TEST_CASE("encoding") {
  const auto s = parse(kTable1)[0];
  const TokenStream enc = encode_lemmatag(s, kScheme);
  CHECK(join_tokens(enc) ==
        "<+ART><Fem><Nom><Sg><St> die<Def> <+NN><Fem><Nom><Sg><NA> EU-<TRUNC>Kommission "
        "<+V><1><Sg><Pres><Ind> wollen <+NN><Fem><Acc><Pl><NA> Grenze [APPR-Dat] in "
        "<+ADJ><NoGend><Dat><Pl><St> groß<Pos> <+NN><Masc><Dat><Pl><NA> Raub<NN>Fisch 2019 "
        "<+V><Inf> verdoppeln");
  CHECK(enc.size() == 2 * 8 + 1);
  CHECK(enc[0].kind == TokenKind::kTag);
  CHECK(enc[1].kind == TokenKind::kLemma);
  CHECK(enc[14].kind == TokenKind::kPlain);
}

TEST_CASE("marker-like lemmas and passthrough are escaped") {
  const auto s = parse("$$x\t_\t_\n@@\t@@\t<+XY>\n")[0];
  const TokenStream enc = encode_lemmatag(s, kScheme);
  REQUIRE(enc.size() == 3);
  CHECK(enc[0].kind == TokenKind::kPlain);
  CHECK(enc[0].text != "$$x");
  CHECK(enc[2].text != "@@");
  InflectionLexicon empty;
  CHECK(join_tokens(decode_lemmatag(enc, empty, kScheme)) == "$$x @@");
}

TEST_CASE("inflection lexicon") {
  const auto corpus = parse(kTable1);
  InflectionLexicon lex = build_inflection_lexicon(corpus);
  const auto* c = lex.find("Grenze", "<+NN><Fem><Acc><Pl><NA>");
  REQUIRE(c);
  REQUIRE(c->size() == 1);
  CHECK((*c)[0] == InflectionCandidate{"Grenzen", 1});
  CHECK_FALSE(lex.find("Grenze", "<+NN>"));

  InflectionLexicon tie;
  tie.add("l", "<+T>", "b", 5);
  tie.add("l", "<+T>", "a", 5);
  tie.add("l", "<+T>", "c", 6);
  tie.sort();
  const auto* t = tie.find("l", "<+T>");
  REQUIRE(t->size() == 3);
  CHECK((*t)[0].surface == "c");
  CHECK((*t)[1].surface == "a");
  CHECK((*t)[2].surface == "b");

  std::ostringstream out;
  write_inflection_lexicon(out, lex);
  std::istringstream in(out.str());
  const InflectionLexicon back = read_inflection_lexicon(in);
  CHECK(back.entries() == lex.entries());
  std::istringstream bad("a\t<+T>\tb\n");
  CHECK_THROWS_AS(read_inflection_lexicon(bad), ParseError);
}

TEST_CASE("decoding") {
  const InflectionLexicon lex = build_inflection_lexicon(parse(kTable1));
  CHECK(decode("<+NN><Fem><Acc><Pl><NA> Grenze", lex) == "Grenzen");
  CHECK(decode("<+NN><Masc><Dat><Pl><NA> Raub<NN>Fisch 2019", lex) == "Raubfischen 2019");
  CHECK(decode("<+V><Inf> verdoppeln", lex) == "verdoppeln");
  const InflectionLexicon empty;
  CHECK(decode("<+NN><Neut><Nom><Sg><NA> Wertpapier<NN>Konto", empty) == "Wertpapierkonto");
  CHECK(decode("", empty) == "");
}

TEST_CASE("fallback surface") {
  CHECK(fallback_surface("Wertpapier<NN>Konto", "<+NN><Neut><Nom><Sg><NA>") == "Wertpapierkonto");
  CHECK(fallback_surface("EU-<TRUNC>Kommission", "<+NN><Fem><Nom><Sg><NA>") == "EU-Kommission");
  CHECK(fallback_surface("groß<Pos>", "<+ADJ><Pos>") == "groß");
  CHECK(fallback_surface("die<Def>", "<+ART>") == "die");
  CHECK(fallback_surface("haus", "<+NN>") == "Haus");
}

TEST_CASE("orphans are dropped with diagnostics") {
  const InflectionLexicon empty;
  Diagnostics diag;
  CHECK(decode("<+V><Inf>", empty, &diag) == "");
  CHECK(diag.messages.size() == 1);
  Diagnostics diag2;
  CHECK(decode("a <+V><Inf> <+NN> Haus", empty, &diag2) == "a Haus");
  CHECK(diag2.messages.size() == 1);
}
