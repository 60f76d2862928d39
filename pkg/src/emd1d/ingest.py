"""Reading grade-distribution CSV files and rendering exact rationals as decimals.

Expected header: ``id,division,course,year,g1,...,gn`` with grade columns ordered
best to worst, so column distance is the ground distance.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .emd import to_prob_vector

META_COLUMNS = ("id", "division", "course", "year")


class DataError(ValueError):
    """Malformed input data; the CLI maps it to exit code 1."""


@dataclass(frozen=True)
class DistributionRecord:
    id: int
    division: str
    course: str
    year: str
    counts: tuple

    @property
    def label(self) -> str:
        return f"{self.division} {self.course} {self.year}".strip()

    @property
    def enrollment(self) -> int:
        return sum(self.counts)

    def probabilities(self) -> tuple[Fraction, ...]:
        return to_prob_vector(self.counts)


def parse_distribution_csv(path, n: int | None = None) -> list[DistributionRecord]:
    path = Path(path)
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    rows = [(i, r) for i, r in enumerate(rows, start=1) if any(c.strip() for c in r)]
    if not rows:
        raise DataError(f"{path}: no records")
    (hline, header), body = rows[0], rows[1:]
    header = [h.strip().lower() for h in header]
    if tuple(header[:4]) != META_COLUMNS:
        raise DataError(f"line {hline}: header must start with {','.join(META_COLUMNS)}")
    n_grades = len(header) - 4
    if n_grades < 2:
        raise DataError(f"line {hline}: need at least 2 grade columns")
    if n is not None and n_grades != n:
        raise DataError(f"line {hline}: expected {n} grade columns, found {n_grades}")
    if not body:
        raise DataError(f"{path}: no records")

    records = []
    for lineno, row in body:
        if len(row) != len(header):
            raise DataError(f"line {lineno}: expected {len(header)} fields, found {len(row)}")
        try:
            rid = int(row[0])
            counts = tuple(int(c) for c in row[4:])
        except ValueError as exc:
            raise DataError(f"line {lineno}: {exc}") from None
        if any(c < 0 for c in counts):
            raise DataError(f"line {lineno}: negative count")
        if sum(counts) == 0:
            raise DataError(f"line {lineno}: zero enrollment")
        records.append(
            DistributionRecord(rid, row[1].strip(), row[2].strip(), row[3].strip(), counts)
        )
    return records


def render_decimal(x, digits: int) -> str:
    """Fixed-point text for an exact rational, rounded half to even.

    >>> render_decimal(Fraction(1, 3), 4)
    '0.3333'
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = Fraction(x)
    scaled = round(x * 10**digits)  # Fraction.__round__ is half-to-even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
