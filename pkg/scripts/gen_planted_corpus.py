#!/usr/bin/env python3
"""Regenerate tests/data/planted_corpus.jsonl.

A 1,000-sample synthetic corpus with known per-bucket defect counts:

    100 short-reference, 100 short-summary, 50 identity, 100 low-CR,
    200 fully-extractive, 50 exact-duplicate, 50 reference-duplicate,
    50 summary-duplicate, 300 clean  ->  300 valid (30.00%)

Every sample carries a "planted" extra key naming its intended bucket.
Duplicate groups use disjoint clean partners, so the bucket counts are
stable under any corpus order; the file is shuffled with a fixed seed.
Sample ids are omitted so the loader's 0-based line-index default kicks
in.
"""

import json
import random
from pathlib import Path

SEED = 73

REF_WORDS = [
    "bericht", "entscheidung", "haushalt", "förderung", "verkehr",
    "schule", "projekt", "bürger", "sitzung", "antrag", "debatte",
    "gesetz", "region", "planung", "umwelt", "energie", "wohnung",
    "kultur", "sport", "gesundheit",
]
SUM_WORDS = [
    "ergebnis", "beschluss", "überblick", "analyse", "bewertung",
    "einigung", "prognose", "reform", "strategie", "zukunft",
]


def main():
    rng = random.Random(SEED)

    def ref_body(n):
        return " ".join(rng.choices(REF_WORDS, k=n))

    def sum_body(n):
        return " ".join(rng.choices(SUM_WORDS, k=n))

    clean = []
    for i in range(300):
        clean.append(
            {
                "reference": f"Bericht {i:04d} " + ref_body(28),
                "summary": f"Kurzfassung {i:04d} " + sum_body(7),
                "planted": "clean",
            }
        )

    records = list(clean)

    for j in range(100):
        records.append(
            {
                "reference": f"Kurz {j:03d}.",
                "summary": f"Ausreichend lange Zusammenfassung {j:03d}.",
                "planted": "minlen_ref",
            }
        )

    for j in range(100):
        records.append(
            {
                "reference": f"Bericht kurzsumm {j:03d} " + ref_body(28),
                "summary": f"Mini {j:03d}",
                "planted": "minlen_summary",
            }
        )

    for j in range(50):
        text = f"Identischer Inhalt {j:03d} " + ref_body(10)
        records.append(
            {"reference": text, "summary": text, "planted": "identity"}
        )

    for j in range(100):
        # 20 reference tokens over 18 summary tokens: CR = 1.11 < 1.25
        records.append(
            {
                "reference": f"Langtext {j:03d} " + ref_body(18),
                "summary": f"Fastgleich {j:03d} " + sum_body(16),
                "planted": "min_cr",
            }
        )

    for j in range(200):
        tokens = ["Quelltext", f"{j:03d}"] + ref_body(24).split()
        records.append(
            {
                "reference": " ".join(tokens),
                "summary": " ".join(tokens[4:12]),
                "planted": "fully_extractive",
            }
        )

    for j in range(50):
        records.append(
            {
                "reference": clean[j]["reference"],
                "summary": clean[j]["summary"],
                "planted": "dup_exact",
            }
        )

    for j in range(50):
        records.append(
            {
                "reference": clean[50 + j]["reference"],
                "summary": f"Alternative Sicht {j:03d} " + sum_body(6),
                "planted": "dup_reference",
            }
        )

    for j in range(50):
        records.append(
            {
                "reference": f"Neuer Quelltext {j:03d} " + ref_body(28),
                "summary": clean[100 + j]["summary"],
                "planted": "dup_summary",
            }
        )

    assert len(records) == 1000
    rng.shuffle(records)

    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "planted_corpus.jsonl"
    with open(out, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} samples to {out}")


if __name__ == "__main__":
    main()
