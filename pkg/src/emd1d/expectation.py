"""Limiting expected EMD on the product of uniform probability simplices.

Two exact routes to ``M_{p,q}``: the three-term rational recursion
(:func:`m_value`) and the factorial-weighted value of ``N_{p,q}(1)``
(:func:`m_value_via_n`). Monte Carlo on the simplex is the third, stochastic,
check.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .genfun import n_poly


_m_table: dict[tuple[int, int], Fraction] = {}


def m_value(p: int, q: int) -> Fraction:
    """Exact ``M_{p,q}``; zero when either index is non-positive."""
    if p <= 0 or q <= 0:
        return Fraction(0)
    if (p, q) not in _m_table:
        for a in range(1, p + 1):
            for b in range(1, q + 1):
                if (a, b) in _m_table:
                    continue
                if a == b == 1:
                    _m_table[a, b] = Fraction(0)
                    continue
                up = _m_table.get((a - 1, b), Fraction(0))
                left = _m_table.get((a, b - 1), Fraction(0))
                _m_table[a, b] = ((a - 1) * up + (b - 1) * left + abs(a - b)) / Fraction(a + b - 1)
    return _m_table[p, q]


def m_value_via_n(p: int, q: int) -> Fraction:
    """``(p-1)! (q-1)! / (p+q-1)! * N_{p,q}(1)``."""
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    scale = Fraction(math.factorial(p - 1) * math.factorial(q - 1), math.factorial(p + q - 1))
    return scale * n_poly(p, q)(1)


def m_tilde(n: int) -> Fraction:
    """Limiting mean of the unit-normalized EMD, ``M_{n,n} / (n - 1)``."""
    if n < 2:
        raise ValueError("m_tilde needs n >= 2")
    return m_value(n, n) / (n - 1)


def sample_uniform_simplex(n: int, seed) -> np.ndarray:
    """One uniform point on the (n-1)-simplex: normalized i.i.d. standard exponentials.

    ``seed`` goes straight to :func:`numpy.random.default_rng` (PCG64).
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    e = rng.standard_exponential(n)
    return e / e.sum()


def _emd_rows(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # the last prefix sum is 0 up to rounding, so it is dropped
    return np.abs(np.cumsum(x - y, axis=1)[:, :-1]).sum(axis=1)


def monte_carlo_mean_emd(
    n: int, trials: int, seed: int, batch_size: int = 100_000
) -> tuple[float, float]:
    """Sample mean and standard error of EMD over independent uniform pairs.

    Batch ``k`` draws from the ``k``-th child of ``SeedSequence(seed)``, so the
    triple ``(seed, trials, batch_size)`` fixes the result. The standard error is
    NaN for a single trial.
    """
    if n < 2 or trials < 1 or batch_size < 1:
        raise ValueError("need n >= 2, trials >= 1, batch_size >= 1")
    n_batches = -(-trials // batch_size)
    children = np.random.SeedSequence(seed).spawn(n_batches)
    total = 0.0
    total_sq = 0.0
    remaining = trials
    for child in children:
        b = min(batch_size, remaining)
        remaining -= b
        rng = np.random.default_rng(child)
        x = rng.standard_exponential((b, n))
        y = rng.standard_exponential((b, n))
        x /= x.sum(axis=1, keepdims=True)
        y /= y.sum(axis=1, keepdims=True)
        d = _emd_rows(x, y)
        total += float(d.sum())
        total_sq += float((d * d).sum())
    mean = total / trials
    if trials == 1:
        return mean, float("nan")
    var = max(total_sq - trials * mean * mean, 0.0) / (trials - 1)
    return mean, math.sqrt(var / trials)
