"""Generating functions for the distribution of discrete EMD over pairs of compositions.

``h_series(p, q, S)`` holds, for each ``s <= S``, the polynomial
``sum z**EMD(mu, nu)`` over ``(mu, nu)`` in C(s, p) x C(s, q). It is built from

    H[p,q] = (H[p-1,q] + H[p,q-1] - H[p-1,q-1]) / (1 - z**|p-q| t),  H[1,1] = 1/(1-t).

The numerator polynomials ``W`` (of ``H(1, t)``) and ``N`` (of ``dH/dz`` at ``z=1``)
satisfy polynomial recursions of the same shape, which give total and mean EMD for
any ``s`` without touching the full series.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numerics import (
    TPoly,
    ZTSeries,
    binomial,
    series_div_one_minus_zt,
)

_ONE_MINUS_T = TPoly([1, -1])
_T = TPoly([0, 1])

# lru_cache is thread-safe for reads; the lock keeps each (p, q, S) computed once.
_h_lock = threading.RLock()


@lru_cache(maxsize=4096)
def _h_series(p: int, q: int, S: int) -> ZTSeries:
    if p <= 0 or q <= 0:
        return ZTSeries.zero(S)
    if p == 1 and q == 1:
        return series_div_one_minus_zt(ZTSeries.one(S), 0)
    numer = _h_series(p - 1, q, S) + _h_series(p, q - 1, S) - _h_series(p - 1, q - 1, S)
    return series_div_one_minus_zt(numer, abs(p - q))


def h_series(p: int, q: int, S: int) -> ZTSeries:
    """Truncated ``H_{p,q}(z, t)``; zero series for a non-positive index."""
    if S < 0:
        raise ValueError("truncation must be non-negative")
    with _h_lock:
        # fill smaller indices first so recursion depth stays O(1) per call
        for total in range(2, p + q + 1):
            for i in range(max(1, total - q), min(p, total - 1) + 1):
                _h_series(i, total - i, S)
        return _h_series(p, q, S)


@dataclass(frozen=True)
class EmdHistogram:
    """Exact count of ordered composition pairs at each EMD value."""

    s: int
    n: int
    counts: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def mean(self) -> Fraction:
        return Fraction(sum(k * c for k, c in self.counts.items()), self.total)

    def unit_normalized_mean(self) -> Fraction:
        if self.n < 2 or self.s < 1:
            raise ValueError("normalization undefined for n < 2 or s = 0")
        return self.mean() / (self.s * (self.n - 1))

    def rows(self) -> list[tuple[int, int]]:
        """``(value, count)`` for every value ``0..s(n-1)`` including zero counts."""
        top = self.s * (self.n - 1)
        return [(k, self.counts.get(k, 0)) for k in range(top + 1)]


def histogram(s: int, n: int) -> EmdHistogram:
    if s < 0 or n < 1:
        raise ValueError("need s >= 0 and n >= 1")
    poly = h_series(n, n, s).coeffs[s]
    return EmdHistogram(s, n, {k: c for k, c in enumerate(poly) if c})


@lru_cache(maxsize=None)
def w_poly(p: int, q: int) -> TPoly:
    """Numerator of ``H_{p,q}(1, t)`` over ``(1 - t)**(p + q - 1)``."""
    if p <= 0 or q <= 0:
        return TPoly()
    if p == 1 and q == 1:
        return TPoly([1])
    return w_poly(p - 1, q) + w_poly(p, q - 1) - _ONE_MINUS_T * w_poly(p - 1, q - 1)


@lru_cache(maxsize=None)
def n_poly(p: int, q: int) -> TPoly:
    """Numerator of ``dH_{p,q}/dz`` at ``z = 1`` over ``(1 - t)**(p + q)``."""
    if p <= 0 or q <= 0 or (p == 1 and q == 1):
        return TPoly()
    rec = n_poly(p - 1, q) + n_poly(p, q - 1) - _ONE_MINUS_T * n_poly(p - 1, q - 1)
    return rec + abs(p - q) * _T * w_poly(p, q)


def sum_emd(p: int, q: int, s: int) -> int:
    """Total discrete EMD over all pairs in C(s, p) x C(s, q).

    Coefficient of ``t**s`` in ``N_{p,q}(t) / (1 - t)**(p + q)``.
    """
    if p < 1 or q < 1 or s < 0:
        raise ValueError("need p, q >= 1 and s >= 0")
    m = p + q - 1
    total = Fraction(0)
    for i, c in enumerate(n_poly(p, q).coeffs):
        if i > s:
            break
        total += c * binomial(s - i + m, m)
    assert total.denominator == 1
    return int(total)


def pair_count(p: int, q: int, s: int) -> int:
    return binomial(s + p - 1, p - 1) * binomial(s + q - 1, q - 1)


def mean_emd_discrete(p: int, q: int, s: int) -> Fraction:
    """Exact mean of discrete EMD over C(s, p) x C(s, q)."""
    return Fraction(sum_emd(p, q, s), pair_count(p, q, s))


def mean_emd_unit_normalized(n: int, s: int) -> Fraction:
    if n < 2 or s < 1:
        raise ValueError("normalization undefined for n < 2 or s = 0")
    return mean_emd_discrete(n, n, s) / (s * (n - 1))


def check_palindromic_unimodal(P: TPoly) -> tuple[bool, bool]:
    """Test palindromy and unimodality over the span of nonzero coefficients.

    An internal zero between nonzero coefficients counts as a failure of
    unimodality.
    """
    cs = list(P.coeffs)
    nz = [i for i, c in enumerate(cs) if c != 0]
    if not nz:
        return True, True
    span = cs[nz[0] : nz[-1] + 1]
    palindromic = span == span[::-1]
    if any(c == 0 for c in span):
        return palindromic, False
    i = 0
    while i + 1 < len(span) and span[i] <= span[i + 1]:
        i += 1
    while i + 1 < len(span) and span[i] >= span[i + 1]:
        i += 1
    return palindromic, i == len(span) - 1
