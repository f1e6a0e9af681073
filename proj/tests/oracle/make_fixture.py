#!/usr/bin/env python3
"""Generates the committed 200-article synthetic corpus fixture.

The corpus is built from a closed keyword vocabulary whose canonical forms
are pinned by the stemming golden set in the unit tests, so the golden
generator (gen_goldens.py) can map variants to canonical forms with a plain
dictionary instead of re-implementing the stemmer.

The per-window concept weights are chosen so the trend report exercises all
four verdicts:
  condition:  pain stable, chronic pain up, low back pain down,
              abdominal pain exits, postoperative pain enters,
              neuropathic pain appears only in the middle windows
  management: machine learning enters at the top, pain management steady,
              opioid and analgesia slide

Run from anywhere; writes tests/fixtures/corpus200.csv and
tests/fixtures/category_map.csv. Deterministic (fixed seed).
"""

import csv
import random
from collections import Counter
from pathlib import Path

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# canonical form -> raw variants (as they appear in export files)
VOCAB = {
    "pain": ["pain", "pains", "painful", "painfulness", "pained"],
    "chronic pain": ["chronic pain", "chronic pains"],
    "low back pain": ["low back pain", "low back pains"],
    "pain manag": ["pain management", "pain managements", "pain managers"],
    "neuropath pain": ["neuropathic pain", "neuropathic pains"],
    "opioid": ["opioid", "opioids", "opioide", "opioides"],
    "postop pain": ["postop pain", "postoperative pain"],
    "analgesia": ["analgesia"],
    "qualiti life": ["quality life", "quality of life"],
    "abdomin pain": ["abdominal pain", "abdominal pains"],
    "machin learn": ["machine learning", "machine-learning"],
    "covid pandem": ["covid-19 pandemic"],
}

CATEGORIES = {
    "pain": "condition",
    "chronic pain": "condition",
    "low back pain": "condition",
    "neuropath pain": "condition",
    "abdomin pain": "condition",
    "postop pain": "condition",
    "opioid": "management",
    "analgesia": "management",
    "pain manag": "management",
    "machin learn": "management",
    # qualiti life and covid pandem stay uncategorized on purpose
}

WINDOWS = [(2002, 2006), (2007, 2011), (2012, 2016), (2017, 2021)]

# per-article inclusion probability of each concept per window; 0 = absent
WEIGHTS = {
    "pain":           [0.70, 0.70, 0.70, 0.70],
    "low back pain":  [0.42, 0.36, 0.32, 0.28],
    "chronic pain":   [0.28, 0.34, 0.42, 0.52],
    "abdomin pain":   [0.20, 0.14, 0.08, 0.00],
    "postop pain":    [0.00, 0.10, 0.14, 0.16],
    "neuropath pain": [0.00, 0.20, 0.20, 0.00],
    "opioid":         [0.55, 0.48, 0.40, 0.36],
    "analgesia":      [0.34, 0.28, 0.20, 0.12],
    "pain manag":     [0.22, 0.22, 0.22, 0.22],
    "machin learn":   [0.00, 0.00, 0.14, 0.55],
    "qualiti life":   [0.16, 0.16, 0.16, 0.16],
    "covid pandem":   [0.00, 0.00, 0.00, 0.18],
}

ARTICLES_PER_WINDOW = 50
DUPLICATE_ROWS = 10

TOPICS = [
    "a cohort study", "a randomized trial", "a systematic review",
    "clinical observations", "a registry analysis", "patient-reported outcomes",
    "a longitudinal survey", "an exploratory analysis", "a case series",
    "a cross-sectional study",
]


def draw_concepts(rng, probabilities):
    """Each concept enters the article independently; empty draws retried."""
    while True:
        chosen = [c for c in sorted(probabilities)
                  if probabilities[c] > 0 and rng.random() < probabilities[c]]
        if chosen:
            return chosen


def render(rng, concept):
    return rng.choice(VOCAB[concept])


def main():
    rng = random.Random(20220814)
    articles = []  # (title, year, [concepts])
    serial = 1
    for wi, (start, end) in enumerate(WINDOWS):
        window_probs = {c: w[wi] for c, w in WEIGHTS.items()}
        for _ in range(ARTICLES_PER_WINDOW):
            concepts = draw_concepts(rng, window_probs)
            year = rng.randint(start, end)
            shown = [VOCAB[c][0].lower() for c in sorted(concepts)[:2]]
            title = "Study %03d on %s: %s" % (
                serial, " and ".join(shown), rng.choice(TOPICS))
            articles.append((title, year, concepts))
            serial += 1

    # sanity-check the designed rank story before freezing the fixture
    def doc_freq(wi):
        start, end = WINDOWS[wi]
        freq = Counter()
        for _, year, concepts in articles:
            if start <= year <= end:
                freq.update(concepts)
        return freq

    def ranks(freq, category):
        members = [(c, n) for c, n in freq.items() if CATEGORIES.get(c) == category]
        members.sort(key=lambda p: (-p[1], p[0]))
        return {c: i + 1 for i, (c, n) in enumerate(members)}, dict(members)

    first, _ = ranks(doc_freq(0), "condition")
    last, _ = ranks(doc_freq(3), "condition")
    assert first["pain"] == 1 and last["pain"] == 1, (first, last)
    assert first["low back pain"] == 2 and last["chronic pain"] == 2, (first, last)
    assert first["chronic pain"] == 3 and last["low back pain"] == 3, (first, last)
    assert "abdomin pain" in first and "abdomin pain" not in last
    assert "postop pain" not in first and "postop pain" in last
    assert "neuropath pain" not in first and "neuropath pain" not in last
    assert "neuropath pain" in doc_freq(1) and "neuropath pain" in doc_freq(2)

    m_first, _ = ranks(doc_freq(0), "management")
    m_last, _ = ranks(doc_freq(3), "management")
    assert m_first == {"opioid": 1, "analgesia": 2, "pain manag": 3}, m_first
    assert m_last == {"machin learn": 1, "opioid": 2, "pain manag": 3, "analgesia": 4}, m_last

    # frequent pairs must exist so the rule report has content at the
    # fixture's support floor
    pair_freq = Counter()
    for _, year, concepts in articles:
        cs = sorted(concepts)
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                pair_freq[(cs[i], cs[j])] += 1
    assert pair_freq.most_common(1)[0][1] >= 12, pair_freq.most_common(3)

    # render rows: each concept as a random variant spelling
    rows = []
    for title, year, concepts in articles:
        variants = [render(rng, c) for c in concepts]
        rows.append((title, year, "; ".join(variants)))

    # duplicate some rows with re-rendered spellings; same title+year merges
    dupes = rng.sample(range(len(articles)), DUPLICATE_ROWS)
    for i in dupes:
        title, year, concepts = articles[i]
        variants = [render(rng, c) for c in concepts]
        rows.append((title, year, ";".join(variants)))
    rng.shuffle(rows)

    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    with open(FIXTURE_DIR / "corpus200.csv", "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["title", "year", "keywords"])
        for title, year, field in rows:
            writer.writerow([title, year, field])

    with open(FIXTURE_DIR / "category_map.csv", "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["keyword", "category"])
        # written as raw variants: the loader must normalize them
        named = {
            "pain": "Pains",
            "chronic pain": "Chronic Pain",
            "low back pain": "Low back pain",
            "neuropath pain": "neuropathic pains",
            "abdomin pain": "Abdominal Pain",
            "postop pain": "Postoperative Pain",
            "opioid": "Opioids",
            "analgesia": "Analgesia",
            "pain manag": "Pain Management",
            "machin learn": "Machine Learning",
        }
        for canonical, variant in sorted(named.items()):
            writer.writerow([variant, CATEGORIES[canonical]])

    print("articles:", len(articles), "rows written:", len(rows))


if __name__ == "__main__":
    main()
