"""Regenerate the bundled synthetic two-cluster grade dataset.

Two tight groups of five-grade distributions (30 students each) around a
B-heavy centre and a bimodal A/D centre. Writes src/emd1d/data/two_clusters.csv.
"""

import csv
from pathlib import Path

import numpy as np

CENTRES = {
    "Alpha": (2, 18, 7, 2, 1),
    "Beta": (12, 3, 4, 10, 1),
}
PER_CLUSTER = 6
SEED = 20131


def jitter(centre, rng, moves=2):
    counts = list(centre)
    for _ in range(moves):
        src = rng.integers(len(counts))
        if counts[src] == 0:
            continue
        dst = min(max(src + rng.choice([-1, 1]), 0), len(counts) - 1)
        counts[src] -= 1
        counts[dst] += 1
    return counts


def main():
    rng = np.random.default_rng(SEED)
    out = Path(__file__).resolve().parents[1] / "src" / "emd1d" / "data" / "two_clusters.csv"
    rows = []
    rid = 1
    for division, centre in CENTRES.items():
        for k in range(PER_CLUSTER):
            rows.append([rid, division, 100 + k, 2020 + k % 3, *jitter(centre, rng)])
            rid += 1
    with out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "division", "course", "year", "g1", "g2", "g3", "g4", "g5"])
        w.writerows(rows)
    print(f"wrote {len(rows)} records to {out}")


if __name__ == "__main__":
    main()
