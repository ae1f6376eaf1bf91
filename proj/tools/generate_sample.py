# Copyright 2026 The morphoseg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the German sample corpus under data/sample.

The sentences come from a small hand-written grammar, so the text and its
annotations carry no third-party rights. Every (lemma, tag) pair has exactly
one surface form, which keeps lemma-tag decoding closed over the corpus.

    python3 tools/generate_sample.py [--out data/sample] [--seed 20260]
"""

import argparse
import os
import random

CASES = ["Nom", "Gen", "Dat", "Acc"]

# lemma, gender, singular forms (Nom Gen Dat Acc), plural forms (Nom Gen Dat Acc)
NOUNS = [
    ("Fisch", "Masc", "Fisch Fisches Fisch Fisch", "Fische Fische Fischen Fische"),
    ("Raub<NN>Fisch", "Masc", "Raubfisch Raubfisches Raubfisch Raubfisch",
     "Raubfische Raubfische Raubfischen Raubfische"),
    ("zier<V>Fisch", "Masc", "Zierfisch Zierfisches Zierfisch Zierfisch",
     "Zierfische Zierfische Zierfischen Zierfische"),
    ("Grenze", "Fem", "Grenze Grenze Grenze Grenze", "Grenzen Grenzen Grenzen Grenzen"),
    ("Wert", "Masc", "Wert Wertes Wert Wert", "Werte Werte Werten Werte"),
    ("Grenze<NN>Wert", "Masc", "Grenzwert Grenzwertes Grenzwert Grenzwert",
     "Grenzwerte Grenzwerte Grenzwerten Grenzwerte"),
    ("Kommission", "Fem", "Kommission Kommission Kommission Kommission",
     "Kommissionen Kommissionen Kommissionen Kommissionen"),
    ("EU-<TRUNC>Kommission", "Fem",
     "EU-Kommission EU-Kommission EU-Kommission EU-Kommission",
     "EU-Kommissionen EU-Kommissionen EU-Kommissionen EU-Kommissionen"),
    ("Haus", "Neut", "Haus Hauses Haus Haus", "Häuser Häuser Häusern Häuser"),
    ("krank<ADJ>Haus", "Neut", "Krankenhaus Krankenhauses Krankenhaus Krankenhaus",
     "Krankenhäuser Krankenhäuser Krankenhäusern Krankenhäuser"),
    ("Kind", "Neut", "Kind Kindes Kind Kind", "Kinder Kinder Kindern Kinder"),
    ("Land", "Neut", "Land Landes Land Land", "Länder Länder Ländern Länder"),
    ("Wirt", "Masc", "Wirt Wirtes Wirt Wirt", "Wirte Wirte Wirten Wirte"),
    ("Land<NN>Wirt", "Masc", "Landwirt Landwirtes Landwirt Landwirt",
     "Landwirte Landwirte Landwirten Landwirte"),
    ("Jahr", "Neut", "Jahr Jahres Jahr Jahr", "Jahre Jahre Jahren Jahre"),
    ("Wechsel", "Masc", "Wechsel Wechsels Wechsel Wechsel",
     "Wechsel Wechsel Wechseln Wechsel"),
    ("Jahr<NN>Wechsel", "Masc",
     "Jahreswechsel Jahreswechsels Jahreswechsel Jahreswechsel",
     "Jahreswechsel Jahreswechsel Jahreswechseln Jahreswechsel"),
    ("Regierung", "Fem", "Regierung Regierung Regierung Regierung",
     "Regierungen Regierungen Regierungen Regierungen"),
    ("Zeitung", "Fem", "Zeitung Zeitung Zeitung Zeitung", "Zeitungen Zeitungen Zeitungen Zeitungen"),
    ("Stadt", "Fem", "Stadt Stadt Stadt Stadt", "Städte Städte Städten Städte"),
    ("Rat", "Masc", "Rat Rates Rat Rat", "Räte Räte Räten Räte"),
    ("Stadt<NN>Rat", "Masc", "Stadtrat Stadtrates Stadtrat Stadtrat",
     "Stadträte Stadträte Stadträten Stadträte"),
    ("Bürger", "Masc", "Bürger Bürgers Bürger Bürger", "Bürger Bürger Bürgern Bürger"),
    ("Wirtschaft", "Fem", "Wirtschaft Wirtschaft Wirtschaft Wirtschaft",
     "Wirtschaften Wirtschaften Wirtschaften Wirtschaften"),
    ("Unternehmen", "Neut", "Unternehmen Unternehmens Unternehmen Unternehmen",
     "Unternehmen Unternehmen Unternehmen Unternehmen"),
    ("Platz", "Masc", "Platz Platzes Platz Platz", "Plätze Plätze Plätzen Plätze"),
    ("Arbeit<NN>Platz", "Masc",
     "Arbeitsplatz Arbeitsplatzes Arbeitsplatz Arbeitsplatz",
     "Arbeitsplätze Arbeitsplätze Arbeitsplätzen Arbeitsplätze"),
    ("Arbeit", "Fem", "Arbeit Arbeit Arbeit Arbeit", "Arbeiten Arbeiten Arbeiten Arbeiten"),
    ("Patient", "Masc", "Patient Patienten Patienten Patienten",
     "Patienten Patienten Patienten Patienten"),
    ("Ergebnis", "Neut", "Ergebnis Ergebnisses Ergebnis Ergebnis",
     "Ergebnisse Ergebnisse Ergebnissen Ergebnisse"),
    ("Behandlung", "Fem", "Behandlung Behandlung Behandlung Behandlung",
     "Behandlungen Behandlungen Behandlungen Behandlungen"),
    ("Ultraschall<NN>Behandlung", "Fem",
     "Ultraschallbehandlung Ultraschallbehandlung Ultraschallbehandlung Ultraschallbehandlung",
     "Ultraschallbehandlungen Ultraschallbehandlungen Ultraschallbehandlungen Ultraschallbehandlungen"),
    ("Gerät", "Neut", "Gerät Gerätes Gerät Gerät", "Geräte Geräte Geräten Geräte"),
    ("Wertpapier", "Neut", "Wertpapier Wertpapieres Wertpapier Wertpapier",
     "Wertpapiere Wertpapiere Wertpapieren Wertpapiere"),
    ("Konto", "Neut", "Konto Kontos Konto Konto", "Konten Konten Konten Konten"),
    ("Wertpapier<NN>Konto", "Neut",
     "Wertpapierkonto Wertpapierkontos Wertpapierkonto Wertpapierkonto",
     "Wertpapierkonten Wertpapierkonten Wertpapierkonten Wertpapierkonten"),
    ("Quecksilber", "Neut", "Quecksilber Quecksilbers Quecksilber Quecksilber",
     "Quecksilber Quecksilber Quecksilbern Quecksilber"),
    ("Verein", "Masc", "Verein Vereines Verein Verein", "Vereine Vereine Vereinen Vereine"),
    ("Sicherheit", "Fem", "Sicherheit Sicherheit Sicherheit Sicherheit",
     "Sicherheiten Sicherheiten Sicherheiten Sicherheiten"),
    ("Erkenntnis", "Fem", "Erkenntnis Erkenntnis Erkenntnis Erkenntnis",
     "Erkenntnisse Erkenntnisse Erkenntnissen Erkenntnisse"),
]

# definite article by (gender or "Pl", case)
ARTICLE = {
    ("Masc", "Nom"): "der", ("Masc", "Gen"): "des", ("Masc", "Dat"): "dem", ("Masc", "Acc"): "den",
    ("Fem", "Nom"): "die", ("Fem", "Gen"): "der", ("Fem", "Dat"): "der", ("Fem", "Acc"): "die",
    ("Neut", "Nom"): "das", ("Neut", "Gen"): "des", ("Neut", "Dat"): "dem", ("Neut", "Acc"): "das",
    ("Pl", "Nom"): "die", ("Pl", "Gen"): "der", ("Pl", "Dat"): "den", ("Pl", "Acc"): "die",
}

# adjective stem; weak endings after the definite article
ADJECTIVES = ["groß", "klein", "neu", "alt", "wichtig", "wirtschaftlich", "europäisch",
              "stark", "jung", "öffentlich", "politisch", "deutsch", "gefährlich", "sicher",
              "klinisch", "relevant", "freundlich", "schnell"]


def weak_ending(gender, case):
    if gender == "Pl":
        return "en"
    if case == "Nom" or (case == "Acc" and gender in ("Fem", "Neut")):
        return "e"
    return "en"


# lemma, 3rd singular, 3rd plural
VERBS = [
    ("verdoppeln", "verdoppelt", "verdoppeln"), ("fordern", "fordert", "fordern"),
    ("unterstützen", "unterstützt", "unterstützen"), ("prüfen", "prüft", "prüfen"),
    ("kritisieren", "kritisiert", "kritisieren"), ("planen", "plant", "planen"),
    ("sehen", "sieht", "sehen"), ("finden", "findet", "finden"),
    ("erhöhen", "erhöht", "erhöhen"), ("senken", "senkt", "senken"),
    ("beschließen", "beschließt", "beschließen"), ("brauchen", "braucht", "brauchen"),
    ("kaufen", "kauft", "kaufen"), ("verkaufen", "verkauft", "verkaufen"),
    ("schützen", "schützt", "schützen"), ("untersuchen", "untersucht", "untersuchen"),
]

MODALS = [("wollen", "will", "wollen"), ("müssen", "muss", "müssen"), ("können", "kann", "können")]

PREPOSITIONS = [("für", "Acc"), ("gegen", "Acc"), ("ohne", "Acc"), ("in", "Dat"),
                ("mit", "Dat"), ("von", "Dat"), ("nach", "Dat"), ("bei", "Dat")]

# sentence-initial adverbs; they never occur elsewhere, so their casing is unique
ADVERBS = ["Heute", "Nun", "Dann", "Jetzt", "Zudem", "Trotzdem", "Deshalb", "Morgen"]

NAMES = ["Berlin", "Brüssel", "Prag", "Wien", "Hamburg"]


class Sentence:
    def __init__(self):
        self.tokens = []  # (surface, lemma, tag); lemma None = passthrough

    def add(self, surface, lemma=None, tag=None):
        self.tokens.append((surface, lemma, tag))


def noun_phrase(rng, s, case, number=None, with_adj=None):
    lemma, gender, sg, pl = rng.choice(NOUNS)
    number = number or rng.choice(["Sg", "Pl"])
    forms = (sg if number == "Sg" else pl).split()
    g = gender if number == "Sg" else "Pl"
    art_gender = gender if number == "Sg" else "NoGend"
    s.add(ARTICLE[(g, case)], "die<Def>", f"<+ART><{art_gender}><{case}><{number}><St>")
    if with_adj if with_adj is not None else rng.random() < 0.5:
        adj = rng.choice(ADJECTIVES)
        s.add(adj + weak_ending(g, case), f"{adj}<Pos>",
              f"<+ADJ><{art_gender}><{case}><{number}><Wk>")
    s.add(forms[CASES.index(case)], lemma, f"<+NN><{gender}><{case}><{number}><NA>")
    return number


def prep_phrase(rng, s):
    prep, case = rng.choice(PREPOSITIONS)
    s.add(prep, prep, f"[APPR-{case}]")
    noun_phrase(rng, s, case)
    if rng.random() < 0.3:
        noun_phrase(rng, s, "Gen", with_adj=False)


def finite(verb, number):
    lemma, sg, pl = verb
    return (sg if number == "Sg" else pl), lemma, f"<+V><3><{number}><Pres><Ind>"


def sentence(rng):
    s = Sentence()
    kind = rng.randrange(4)
    verb = rng.choice(VERBS)
    if kind == 0:
        # NP V NP PP .
        number = noun_phrase(rng, s, "Nom")
        s.add(*finite(verb, number))
        noun_phrase(rng, s, "Acc")
        if rng.random() < 0.7:
            prep_phrase(rng, s)
    elif kind == 1:
        # ADV V NP NP .
        adv = rng.choice(ADVERBS)
        s.add(adv, adv.lower(), "<+ADV>")
        number = rng.choice(["Sg", "Pl"])
        s.add(*finite(verb, number))
        noun_phrase(rng, s, "Nom", number)
        noun_phrase(rng, s, "Acc")
    elif kind == 2:
        # NAME: NP MODAL NP PP V-inf .
        s.add(rng.choice(NAMES))
        s.add(":")
        number = noun_phrase(rng, s, "Nom")
        modal = rng.choice(MODALS)
        s.add(*finite(modal, number))
        noun_phrase(rng, s, "Acc")
        prep_phrase(rng, s)
        s.add(verb[0], verb[0], "<+V><Inf>")
    else:
        # NP V NP , ADV im Jahr NUMBER .
        number = noun_phrase(rng, s, "Nom")
        s.add(*finite(verb, number))
        noun_phrase(rng, s, "Acc")
        s.add(",")
        s.add("im")
        s.add("Jahr", "Jahr", "<+NN><Neut><Dat><Sg><NA>")
        s.add(str(rng.randrange(1990, 2031)))
    s.add(".")
    return s


def check_unique(sentences):
    seen = {}
    for s in sentences:
        for surface, lemma, tag in s.tokens:
            if lemma is None:
                continue
            prev = seen.setdefault((lemma, tag), surface)
            if prev != surface:
                raise SystemExit(f"variant for {lemma} {tag}: {prev} / {surface}")


def write_text(path, sentences):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for s in sentences:
            f.write(" ".join(t[0] for t in s.tokens) + "\n")


def write_conll(path, sentences):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for i, s in enumerate(sentences):
            if i:
                f.write("\n")
            for surface, lemma, tag in s.tokens:
                f.write(f"{surface}\t{lemma or '_'}\t{tag or '_'}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "sample"))
    ap.add_argument("--seed", type=int, default=20260)
    ap.add_argument("--count", type=int, default=1000)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    sentences = [sentence(rng) for _ in range(args.count)]
    check_unique(sentences)
    os.makedirs(args.out, exist_ok=True)
    write_text(os.path.join(args.out, "de.1000.txt"), sentences)
    write_conll(os.path.join(args.out, "de.1000.conll"), sentences)
    write_conll(os.path.join(args.out, "de.200.conll"), sentences[:200])


if __name__ == "__main__":
    main()
