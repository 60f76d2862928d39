"""One-dimensional Earth Mover's Distance on ``{1, ..., n}`` with ground metric ``|i - j|``.

Compositions are plain tuples of non-negative ints and joint matrices are tuples of
row tuples. The closed form is the sum of absolute prefix sums of ``mu - nu``; the
brute-force transport minimum (:func:`emd_oracle`) is kept as an independent check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

Composition = tuple  # tuple[int, ...]
JointMatrix = tuple  # tuple[tuple[int, ...], ...]

PROB_TOL = 1e-12


class OracleCapExceeded(ValueError):
    pass


def compositions(s: int, n: int) -> Iterator[Composition]:
    """All weak compositions of ``s`` into ``n`` parts, lexicographically descending."""
    if n < 1 or s < 0:
        return
    if n == 1:
        yield (s,)
        return
    for first in range(s, -1, -1):
        for rest in compositions(s - first, n - 1):
            yield (first,) + rest


def validate_composition(parts: Sequence[int], s: int | None = None) -> Composition:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in composition {parts}")
    if s is not None and sum(parts) != s:
        raise ValueError(f"composition {parts} does not sum to {s}")
    return parts


def cost(i: int, j: int) -> int:
    """Ground cost between 1-indexed positions."""
    return abs(i - j)


def cost_matrix(p: int, q: int) -> list[list[int]]:
    return [[abs(i - j) for j in range(1, q + 1)] for i in range(1, p + 1)]


def transport_cost(J: Sequence[Sequence[int]]) -> int:
    return sum(x * abs(i - j) for i, row in enumerate(J) for j, x in enumerate(row))


def _pad(mu: Sequence, nu: Sequence) -> tuple[list, list]:
    n = max(len(mu), len(nu))
    return list(mu) + [0] * (n - len(mu)), list(nu) + [0] * (n - len(nu))


def _prefix_abs_sum(diff) -> object:
    total = 0
    run = 0
    for d in diff:
        run += d
        total += abs(run)
    return total


def emd_discrete(mu: Sequence[int], nu: Sequence[int]) -> int:
    """Discrete EMD between two compositions of the same total.

    The shorter composition is zero-padded on the right.

    >>> emd_discrete((0, 19, 8, 2, 1), (12, 2, 5, 11, 0))
    26
    """
    mu = validate_composition(mu)
    nu = validate_composition(nu)
    if sum(mu) != sum(nu):
        raise ValueError("margins differ")
    a, b = _pad(mu, nu)
    return _prefix_abs_sum(x - y for x, y in zip(a, b))


def _check_prob(w: Sequence) -> None:
    if any(x < 0 for x in w):
        raise ValueError("probability vector has a negative weight")
    total = sum(w)
    if all(isinstance(x, (int, Fraction)) for x in w):
        if total != 1:
            raise ValueError(f"weights sum to {total}, not 1")
    elif abs(total - 1) > PROB_TOL:
        raise ValueError(f"weights sum to {total!r}, not 1 within {PROB_TOL}")


def to_prob_vector(counts: Sequence[int]) -> tuple[Fraction, ...]:
    """Exact probability vector ``counts / sum(counts)``."""
    total = sum(counts)
    if total <= 0:
        raise ValueError("cannot normalize an empty distribution")
    return tuple(Fraction(c, total) for c in counts)


def emd_continuous(mu: Sequence, nu: Sequence):
    """EMD between two probability vectors of equal length (exact for Fractions)."""
    if len(mu) != len(nu):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(nu)}")
    _check_prob(mu)
    _check_prob(nu)
    return _prefix_abs_sum(x - y for x, y in zip(mu, nu))


def emd_unit_normalized(mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Discrete EMD scaled by ``1 / (s (n - 1))`` so the diameter is 1."""
    n = len(mu)
    if len(nu) != n:
        raise ValueError("unit normalization needs equal part counts")
    s = sum(mu)
    if n < 2 or s == 0:
        raise ValueError("normalization undefined for n < 2 or s = 0")
    return Fraction(emd_discrete(mu, nu), s * (n - 1))


# ---------------------------------------------------------------------------
# brute-force transport oracle
# ---------------------------------------------------------------------------


def joint_matrices(mu: Sequence[int], nu: Sequence[int]) -> Iterator[JointMatrix]:
    """Every non-negative integer matrix with row sums ``mu`` and column sums ``nu``.

    Rows are filled one at a time; a partial fill is pruned when the remaining
    row mass cannot fit into the remaining column capacity.
    """
    p, q = len(mu), len(nu)

    def fill_row(i: int, cap: list[int], rows: list[tuple[int, ...]]):
        if i == p:
            if not any(cap):
                yield tuple(rows)
            return
        if sum(mu[i:]) != sum(cap):
            return
        for row in _bounded_compositions(mu[i], cap):
            new_cap = [c - r for c, r in zip(cap, row)]
            rows.append(row)
            yield from fill_row(i + 1, new_cap, rows)
            rows.pop()

    yield from fill_row(0, list(nu), [])


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    if total > sum(caps):
        return
    for x in range(min(total, caps[0]), -1, -1):
        for rest in _bounded_compositions(total - x, caps[1:]):
            yield (x,) + rest


def emd_oracle(
    mu: Sequence[int], nu: Sequence[int], max_s: int = 6, max_cells: int = 16
) -> int:
    """Exact ``min <J, C>`` over all integer transport plans, by enumeration."""
    mu = validate_composition(mu)
    nu = validate_composition(nu)
    if sum(mu) != sum(nu):
        raise ValueError("margins differ")
    if sum(mu) > max_s or len(mu) * len(nu) > max_cells:
        raise OracleCapExceeded(
            f"oracle cap exceeded: s={sum(mu)} (max {max_s}), "
            f"cells={len(mu) * len(nu)} (max {max_cells})"
        )
    return min(transport_cost(J) for J in joint_matrices(mu, nu))


# ---------------------------------------------------------------------------
# chain support, repair move, and the word bijection
# ---------------------------------------------------------------------------


def support(J: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(J) for j, x in enumerate(row) if x > 0]


def comparable(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return (a[0] <= b[0] and a[1] <= b[1]) or (b[0] <= a[0] and b[1] <= a[1])


def is_chain(J: Sequence[Sequence[int]]) -> bool:
    # support is in row-major order, so a chain means columns never decrease
    cols = [j for _, j in support(J)]
    return all(a <= b for a, b in zip(cols, cols[1:]))


def _first_incomparable(J) -> tuple[tuple[int, int], tuple[int, int]] | None:
    supp = support(J)
    for a, b in itertools.combinations(supp, 2):
        if not comparable(a, b):
            return a, b
    return None


def _uncross(J: Sequence[Sequence[int]]) -> tuple[JointMatrix, int]:
    M = [list(row) for row in J]
    if any(x < 0 for row in M for x in row):
        raise ValueError("joint matrix has a negative entry")
    moves = 0
    while (pair := _first_incomparable(M)) is not None:
        (r1, c1), (r2, c2) = pair  # row-major order: r1 < r2 and c1 > c2
        m = min(M[r1][c1], M[r2][c2])
        M[r1][c1] -= m
        M[r2][c2] -= m
        M[r1][c2] += m
        M[r2][c1] += m
        moves += 1
    return tuple(tuple(r) for r in M), moves


def chain_repair(J: Sequence[Sequence[int]]) -> JointMatrix:
    """Uncross the support of ``J`` until it is a chain; margins kept, cost never rises.

    Each move takes the first incomparable support pair ``(i', j')``, ``(i, j)``
    (row-major scan) with ``i' < i`` and ``j' > j`` and shifts ``m = min`` of the
    two entries onto the corners ``(i', j)`` and ``(i, j')``. The potential
    ``sum J_ij * i * j`` strictly increases, so the loop terminates.
    """
    return _uncross(J)[0]


def count_repair_moves(J: Sequence[Sequence[int]]) -> int:
    """Number of uncrossing moves :func:`chain_repair` performs on ``J``."""
    return _uncross(J)[1]


def word(mu: Sequence[int]) -> tuple[int, ...]:
    """Weakly increasing word with ``mu[k-1]`` copies of ``k``.

    >>> word((3, 0, 2, 1, 0))
    (1, 1, 1, 3, 3, 4)
    """
    return tuple(k for k, m in enumerate(mu, start=1) for _ in range(m))


def rsk_phi(mu: Sequence[int], nu: Sequence[int]) -> JointMatrix:
    """Chain-supported plan pairing the sorted words of ``mu`` and ``nu``."""
    mu = validate_composition(mu)
    nu = validate_composition(nu)
    if sum(mu) != sum(nu):
        raise ValueError("margins differ")
    J = [[0] * len(nu) for _ in mu]
    for u, v in zip(word(mu), word(nu)):
        J[u - 1][v - 1] += 1
    return tuple(tuple(r) for r in J)


def rsk_phi_inverse(J: Sequence[Sequence[int]]) -> tuple[Composition, Composition]:
    if not is_chain(J):
        raise ValueError("not a chain matrix")
    rows = tuple(sum(r) for r in J)
    cols = tuple(sum(c) for c in zip(*J)) if J else ()
    return rows, cols


def count_compositions(s: int, n: int) -> int:
    return math.comb(s + n - 1, n - 1)
