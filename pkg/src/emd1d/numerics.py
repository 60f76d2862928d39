"""Exact arithmetic substrate: rational polynomials in t and truncated series in (z, t).

Rationals are :class:`fractions.Fraction` throughout. Two polynomial types live here:

* :class:`TPoly` -- dense univariate polynomial in ``t`` with rational coefficients.
* :class:`ZTSeries` -- a power series in ``t`` truncated at degree ``S`` whose
  coefficients are dense integer polynomials in ``z`` (plain tuples of ints).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
ZPoly = tuple  # tuple[int, ...]; index k holds the coefficient of z**k


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the out-of-range convention ``C(n, k) = 0``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# TPoly
# ---------------------------------------------------------------------------


class TPoly:
    """Immutable dense polynomial in ``t`` over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if len(cs) == 1 and cs[0] == 0:
            cs = []
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1) -> "TPoly":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, t: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def _coerce(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TPoly([other])
        return NotImplemented

    def __add__(self, other) -> "TPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return TPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "TPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TPoly":
        return (-self) + other

    def __mul__(self, other) -> "TPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return TPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TPoly({[str(c) for c in self._coeffs]})"


def poly_add(a: TPoly, b: TPoly) -> TPoly:
    return a + b


def poly_sub(a: TPoly, b: TPoly) -> TPoly:
    return a - b


def poly_mul(a: TPoly, b: TPoly) -> TPoly:
    return a * b


# ---------------------------------------------------------------------------
# Integer polynomials in z and truncated (z, t) series
# ---------------------------------------------------------------------------


def _ztrim(c: Sequence[int]) -> ZPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def zpoly_add(a: ZPoly, b: ZPoly, sign: int = 1) -> ZPoly:
    n = max(len(a), len(b))
    return _ztrim(
        (a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)
    )


def zpoly_shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by ``z**k``."""
    if not a:
        return a
    return (0,) * k + tuple(a)


class ZTSeries:
    """Series ``sum_s c_s(z) t**s`` kept for ``s = 0..truncation``.

    Arithmetic between series of different truncation raises ``ValueError``.
    """

    __slots__ = ("truncation", "coeffs")

    def __init__(self, truncation: int, coeffs: Iterable[Sequence[int]] = ()):
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        cs = [_ztrim(c) for c in coeffs][: truncation + 1]
        cs += [()] * (truncation + 1 - len(cs))
        self.truncation = truncation
        self.coeffs: tuple[ZPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls, truncation: int) -> "ZTSeries":
        return cls(truncation)

    @classmethod
    def one(cls, truncation: int) -> "ZTSeries":
        return cls(truncation, [(1,)])

    def _check(self, other: "ZTSeries") -> None:
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other: "ZTSeries") -> "ZTSeries":
        self._check(other)
        return ZTSeries(self.truncation, (zpoly_add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ZTSeries") -> "ZTSeries":
        self._check(other)
        return ZTSeries(
            self.truncation, (zpoly_add(a, b, -1) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZTSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.truncation, self.coeffs))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def at_z(self, z: Rational) -> list:
        """Substitute a value for ``z``; returns the t-coefficients."""
        return [sum(c * z**k for k, c in enumerate(poly)) for poly in self.coeffs]

    def __repr__(self) -> str:
        return f"ZTSeries(S={self.truncation}, {list(self.coeffs)})"


def series_mul_scalar_zpow(x: ZTSeries, a: int, shift_t: int = 0) -> ZTSeries:
    """Multiply by ``z**a * t**shift_t`` and re-truncate."""
    if a < 0 or shift_t not in (0, 1):
        raise ValueError("need a >= 0 and shift_t in {0, 1}")
    shifted = [()] * shift_t + [zpoly_shift(c, a) for c in x.coeffs]
    return ZTSeries(x.truncation, shifted)


def series_div_one_minus_zt(x: ZTSeries, a: int) -> ZTSeries:
    """Divide by ``1 - z**a t`` via ``y_s = x_s + z**a y_{s-1}``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    out: list[ZPoly] = []
    prev: ZPoly = ()
    for c in x.coeffs:
        prev = zpoly_add(c, zpoly_shift(prev, a))
        out.append(prev)
    return ZTSeries(x.truncation, out)
