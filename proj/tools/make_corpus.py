#!/usr/bin/env python3
#
# Copyright 2026 The VForge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Writes the bundled synthetic news text (CC0) under data/.

  data/corpus/part-NN.txt   n-gram training text, >= 100k words in total
  data/articles/aNNN.txt    100 short news articles, >= 3 negations each
  data/questions.tsv        one question per article for the qa pipeline

The output is a pure function of the seeds below.
"""

import argparse
import pathlib
import random
import re

PLACES = [
    "Marlow", "Eastbrook", "Halden", "Port Avery", "Westfield", "Carrow",
    "Lindale", "Brackenford", "Ostria", "New Tarvin", "Redcliff", "Sommerby",
    "Kessington", "Alder Bay", "Greyhaven", "Northmere", "Dunmore", "Pellham",
    "Rivenwood", "Stonebridge", "Ashcombe", "Fairhaven", "Wexley", "Caldera",
]
BODIES = [
    "city council", "transport authority", "health ministry", "school board",
    "water utility", "port commission", "planning committee", "police department",
    "housing agency", "energy regulator", "county court", "farmers union",
    "teachers union", "chamber of commerce", "environment agency", "hospital trust",
]
COMPANIES = [
    "Norvale Mining", "Brightline Foods", "Keystone Freight", "Alder Systems",
    "Harbor Mutual", "Tessera Labs", "Orchard Retail", "Summit Cement",
    "Bluewater Shipping", "Lattice Networks", "Crescent Pharma", "Ironleaf Motors",
]
FIRST = [
    "Maria", "James", "Aisha", "Daniel", "Elena", "Tomas", "Priya", "Samuel",
    "Grace", "Viktor", "Nadia", "Oliver", "Fatima", "Lucas", "Hannah", "Kenji",
    "Sofia", "Ibrahim", "Clara", "Mateo", "Ingrid", "Rafael", "Leila", "Arthur",
]
LAST = [
    "Okafor", "Lindqvist", "Moreau", "Castillo", "Brennan", "Hadley", "Novak",
    "Ferreira", "Kowalski", "Ashworth", "Mensah", "Takeda", "Rahman", "Delacroix",
    "Whitlock", "Petrov", "Sandoval", "Quinlan", "Holt", "Abernathy",
]
ROLES = [
    "mayor", "spokesperson", "chief executive", "director", "analyst",
    "chairwoman", "chairman", "economist", "minister", "inspector",
    "professor", "union leader", "council member", "project manager",
]
TOPICS = [
    ("budget", "the annual budget", "spending"),
    ("bridge", "the river bridge", "repairs"),
    ("school", "the new school", "enrolment"),
    ("hospital", "the regional hospital", "waiting times"),
    ("factory", "the old factory site", "jobs"),
    ("rail", "the rail link", "timetables"),
    ("harbor", "the harbor expansion", "shipping traffic"),
    ("housing", "the housing plan", "rents"),
    ("water", "the water supply", "prices"),
    ("election", "the local election", "turnout"),
    ("festival", "the summer festival", "ticket sales"),
    ("mine", "the copper mine", "safety rules"),
    ("wind farm", "the offshore wind farm", "power output"),
    ("library", "the central library", "opening hours"),
    ("airport", "the regional airport", "flight numbers"),
]
VERBS_PAST = [
    "approved", "rejected", "delayed", "announced", "reviewed", "criticized",
    "welcomed", "questioned", "funded", "postponed", "endorsed", "suspended",
    "extended", "examined", "defended", "proposed", "cancelled", "confirmed",
]
ADJ = [
    "significant", "modest", "sharp", "gradual", "unexpected", "steady",
    "limited", "broad", "temporary", "permanent", "costly", "careful",
    "rapid", "slow", "clear", "uncertain", "public", "private", "formal",
]
NOUNS = [
    "plan", "report", "decision", "proposal", "contract", "review", "study",
    "agreement", "policy", "budget", "investigation", "survey", "schedule",
    "estimate", "warning", "statement", "audit", "forecast", "vote", "deal",
]
RESIDENT = [
    "residents", "commuters", "shop owners", "parents", "nurses", "farmers",
    "drivers", "students", "pensioners", "workers", "visitors", "tenants",
]
TIME = [
    "on Monday", "on Tuesday", "on Wednesday", "on Thursday", "on Friday",
    "last week", "this month", "earlier this year", "late on Sunday",
    "after a long meeting", "during the morning session", "by the end of March",
]
MODALS = ["will", "would", "could", "should", "can", "must", "did", "does", "is", "was"]
NEG_CLAUSES = [
    "{who} said the {noun} was not final",
    "there was no sign of a {adj} change in {issue}",
    "officials could not confirm how many {res} would be affected",
    "the {body} did not respond to a request for comment",
    "{who} said there was no reason to expect {adj} delays",
    "the {noun} does not cover {topic}",
    "no decision on {topic} has been made",
    "{res} were not told about the {noun} in advance",
    "the company would not say whether {issue} would rise",
    "it is not clear when {topic} will reopen",
    "{who} said the town had no money for {topic}",
    "the {body} has not published the {noun}",
    "there is no plan to change {issue} before the summer",
    "{who} insisted that {res} were not at risk",
    "the {noun} was not expected to pass without changes",
    "no one was hurt, according to the {body}",
]
PLAIN_CLAUSES = [
    "the {body} {verb} the {adj} {noun} {time}",
    "{who} said the {noun} would affect {issue} in {place}",
    "{res} in {place} gathered outside the offices of the {body} {time}",
    "{company} {verb} a {adj} {noun} covering {topic}",
    "the {noun} follows a {adj} rise in {issue} across the region",
    "figures published {time} showed {issue} up by {pct} percent",
    "{who} told reporters that {topic} remained a priority",
    "the {body} expects to publish a {adj} {noun} {time}",
    "critics argued that the {noun} favoured {company}",
    "{res} said they had waited {num} weeks for an answer",
    "the cost of {topic} has risen to {money} million",
    "{who} described the {noun} as a {adj} step for {place}",
    "a spokesperson for {company} said talks were continuing",
    "local newspapers reported {adj} interest among {res}",
    "the {body} met {num} times to discuss {topic}",
    "{company} employs about {thousands} people in {place}",
    "the {noun} was drafted with help from {company}",
    "{who} said {res} deserved a {adj} explanation",
]


class Writer:
    def __init__(self, rng):
        self.rng = rng

    def pick(self, xs):
        return xs[self.rng.randrange(len(xs))]

    def person(self):
        r = self.rng
        name = f"{self.pick(FIRST)} {self.pick(LAST)}"
        role = self.pick(ROLES)
        if r.random() < 0.5:
            return f"{name}, the {role} of {self.pick(PLACES)},"
        return f"{role} {name}" if r.random() < 0.5 else name

    def fill(self, template, place, topic):
        r = self.rng
        return template.format(
            who=self.person(), noun=self.pick(NOUNS), adj=self.pick(ADJ),
            issue=topic[2], topic=topic[1], body=self.pick(BODIES),
            res=self.pick(RESIDENT), verb=self.pick(VERBS_PAST),
            time=self.pick(TIME), place=place, company=self.pick(COMPANIES),
            pct=r.randint(2, 40), num=r.randint(2, 12),
            money=r.randint(3, 900), thousands=r.randint(2, 40) * 100)

    def sentence(self, place, topic, negated):
        r = self.rng
        pool = NEG_CLAUSES if negated else PLAIN_CLAUSES
        s = self.fill(self.pick(pool), place, topic)
        if r.random() < 0.3:
            s += ", and " + self.fill(self.pick(PLAIN_CLAUSES), place, topic)
        if r.random() < 0.12:
            s = f"\"{s[0].upper()}{s[1:]},\" {self.person().rstrip(',')} said"
        s = s.replace(",,", ",").replace(", said", " said")
        s = re.sub(r"\b([Aa]) ([aeiou])", r"\1n \2", s)
        return s[0].upper() + s[1:] + "."

    def article(self, min_sent, max_sent, min_neg):
        r = self.rng
        place = self.pick(PLACES)
        topic = self.pick(TOPICS)
        n = r.randint(min_sent, max_sent)
        neg_slots = set(r.sample(range(n), min(n, max(min_neg, r.randint(min_neg, min_neg + 3)))))
        sents = [self.sentence(place, topic, i in neg_slots) for i in range(n)]
        lead = (f"{place.upper()} - The {self.pick(BODIES)} {self.pick(VERBS_PAST)} "
                f"{topic[1]} {self.pick(TIME)}, a move that {self.pick(MODALS)} "
                f"shape {topic[2]} for {self.pick(RESIDENT)}.")
        paras, cur = [], [lead]
        for s in sents:
            cur.append(s)
            if len(cur) >= r.randint(2, 4):
                paras.append(" ".join(cur))
                cur = []
        if cur:
            paras.append(" ".join(cur))
        return place, topic, "\n\n".join(paras) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--corpus-words", type=int, default=120000)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "corpus").mkdir(parents=True, exist_ok=True)
    (out / "articles").mkdir(parents=True, exist_ok=True)

    w = Writer(random.Random(20261016))
    words, part, buf = 0, 0, []
    while words < args.corpus_words:
        _, _, text = w.article(10, 30, 2)
        buf.append(text)
        words += len(text.split())
        if sum(len(t.split()) for t in buf) >= 20000 or words >= args.corpus_words:
            (out / "corpus" / f"part-{part:02d}.txt").write_text("\n".join(buf))
            part, buf = part + 1, []

    w = Writer(random.Random(7))
    rows = ["id\tquestion\tgold_answer"]
    for i in range(100):
        place, topic, text = w.article(8, 24, 3)
        aid = f"a{i:03d}"
        (out / "articles" / f"{aid}.txt").write_text(text)
        first = text.split("\n")[0].split(". ")[0].rstrip(".") + "."
        rows.append(f"{aid}\tWhat happened to {topic[1]} in {place}?\t{first}")
    (out / "questions.tsv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
