#!/usr/bin/env python3
# Copyright 2026 The asnkit Authors
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
"""Writes the small synthetic demo treebank shipped in data/.

Four centuries (14-17) of Early New High German flavoured sentences built
from a handful of templates. Vocabulary is drawn with Zipf weights so the
aggregated networks get heavy-tailed degrees. "MV mögen" heads the ability
construction in the first two centuries and "MV können" takes over after
that, mirroring the mögen/können shift. The output is a pure function of
the seed.
"""

import argparse
import random
from pathlib import Path

NOUNS = ["haus", "herr", "weg", "land", "kind", "tag", "wort", "stat", "got", "man",
         "frouwe", "künig", "ritter", "burc", "walt", "brief", "gelt", "zit", "ende", "rât",
         "vater", "muoter", "bruoder", "schif", "wazzer", "berc", "tor", "buoch", "name", "sêle"]
ADJS = ["alt", "lanc", "guot", "klein", "grôz", "hôch", "schoene", "rîche", "arm", "junc", "wîs", "starc"]
ARTS = ["der", "ein"]
VERBS = ["sehen", "sagen", "gân", "tuon", "helfen", "singen", "vinden", "geben", "nemen", "komen",
         "sprechen", "schrîben", "lesen", "bringen", "varn", "rîten", "minnen", "dienen"]
PARTS = ["gesehen", "gesaget", "getân", "gegeben", "genomen", "geschriben", "gebrâht", "gevunden"]
PRONS = ["ich", "er", "wir", "si", "du", "ez"]
PREPS = ["in", "ze", "mit", "von", "ûf", "nâch"]
ADVS = ["nû", "dô", "ouch", "gerne", "sêre", "niht"]
DIALECTS = ["bav", "alem", "md"]


def zipf(rng, items, s=1.1):
    weights = [1.0 / (k + 1) ** s for k in range(len(items))]
    return rng.choices(items, weights=weights)[0]


class Sentence:
    def __init__(self):
        self.tokens = []  # (surface, lemma, role, head)

    def add(self, lemma, role, head, surface=None):
        self.tokens.append([surface or lemma, lemma, role, head])
        return len(self.tokens)


def noun_phrase(rng, s, head):
    n = s.add(zipf(rng, NOUNS), "N", head)
    if rng.random() < 0.6:
        s.add(rng.choice(ARTS), "AR", n)
    if rng.random() < 0.4:
        s.add(zipf(rng, ADJS), "AJ", n)
    if rng.random() < 0.15:
        p = s.add(rng.choice(PREPS), "PR", n)
        noun_phrase(rng, s, p)
    return n


def ability(rng, s, modal):
    m = s.add(modal, "MV", 0)
    s.add(zipf(rng, PRONS), "PP", m)
    v = s.add(zipf(rng, VERBS), "IV", m)
    if rng.random() < 0.5:
        noun_phrase(rng, s, v)
    if rng.random() < 0.2:
        s.add(rng.choice(ADVS), "AD", v)


def future(rng, s):
    w = s.add("werden", "AX", 0)
    s.add(zipf(rng, PRONS), "PP", w)
    v = s.add(zipf(rng, VERBS), "IV", w)
    if rng.random() < 0.6:
        noun_phrase(rng, s, v)


def perfect(rng, s):
    h = s.add("hân", "AX", 0)
    s.add(zipf(rng, PRONS), "PP", h)
    p = s.add(zipf(rng, PARTS), "PCPS", h)
    noun_phrase(rng, s, p)


def main_clause(rng, s):
    v = s.add(zipf(rng, VERBS), "V", 0)
    noun_phrase(rng, s, v)
    if rng.random() < 0.5:
        p = s.add(rng.choice(PREPS), "PR", v)
        noun_phrase(rng, s, p)
    if rng.random() < 0.3:
        c = s.add("daz", "SC", v)
        sub = s.add(zipf(rng, VERBS), "V", c)
        s.add(zipf(rng, PRONS), "PP", sub)
        if rng.random() < 0.5:
            noun_phrase(rng, s, sub)


def sentence(rng, century):
    s = Sentence()
    phase = century - 14
    r = rng.random()
    # share of the ability construction and who heads it
    if r < 0.22:
        p_konnen = [0.02, 0.08, 0.75, 0.85][phase]
        ability(rng, s, "können" if rng.random() < p_konnen else "mögen")
        target = None
    elif r < 0.40:
        future(rng, s)
        target = "werden"
    elif r < 0.55:
        perfect(rng, s)
        target = None
    else:
        main_clause(rng, s)
        target = None
    # a few words with unknown meaning
    if rng.random() < 0.04 and len(s.tokens) > 2:
        i = rng.randrange(1, len(s.tokens))
        if s.tokens[i][2] in ("AJ", "AD", "AR"):
            s.tokens[i][1] = "!"
            s.tokens[i][2] = "_"
    return s, target


def write_century(rng, century, sentences, path):
    lines = []
    previous = {}
    docs = 6
    for k in range(sentences):
        s, target = sentence(rng, century)
        header = {
            "century": str(century),
            "doc_id": f"demo{century}_{k % docs + 1}",
            "dialect": DIALECTS[(k % docs) % len(DIALECTS)],
            "target": target or "_",
        }
        for key in ("century", "doc_id", "dialect", "target"):
            if previous.get(key) != header[key]:
                lines.append(f"# {key} = {header[key]}")
        previous = header
        lines.append(f"# sent_id = c{century}s{k + 1}")
        for i, (surface, lemma, role, head) in enumerate(s.tokens, start=1):
            lines.append(f"{i}\t{surface}\t{lemma}\t{role}\t{head}\t_")
        lines.append("")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="data", type=Path)
    parser.add_argument("--seed", default=20260101, type=int)
    parser.add_argument("--sentences", default=160, type=int, help="sentences per century")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for century in range(14, 18):
        rng = random.Random(args.seed * 100 + century)
        write_century(rng, century, args.sentences, args.out / f"demo_c{century}.tsv")


if __name__ == "__main__":
    main()
