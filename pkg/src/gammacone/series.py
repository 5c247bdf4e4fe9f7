"""Truncated power series with exact rational coefficients, and the zigzag
generating function checks.

``tan(x/2 + pi/4)`` equals ``sec x + tan x``; its coefficients are the
Euler up/down numbers over ``n!``, produced here by the boustrophedon
triangle without touching floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RationalSeries",
    "zigzag_numbers",
    "zigzag_series",
    "zigzag_series_via_integral",
    "sin_series",
    "check_a_series",
    "family_series",
    "evaluate_family_series",
    "SeriesRow",
]


@dataclass(frozen=True)
class RationalSeries:
    """Coefficients ``c[0..N]`` of a power series truncated after ``x**N``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @classmethod
    def from_poly(cls, coeffs, order: int) -> "RationalSeries":
        c = list(coeffs)[: order + 1]
        return cls(tuple(c) + (Fraction(0),) * (order + 1 - len(c)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def _lift(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            return other
        return RationalSeries.from_poly([other], self.order)

    def _common(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        other = self._lift(other)
        n = self._common(other)
        return RationalSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return RationalSeries(tuple(c * other for c in self.coeffs))
        n = self._common(other)
        return RationalSeries(
            tuple(sum((self[i] * other[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1))
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalSeries):
            return self * (Fraction(1) / Fraction(other))
        if other[0] == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        n = self._common(other)
        q: list[Fraction] = []
        for k in range(n + 1):
            acc = self[k] - sum((q[i] * other[k - i] for i in range(k)), Fraction(0))
            q.append(acc / other[0])
        return RationalSeries(tuple(q))

    def integral(self) -> "RationalSeries":
        """Antiderivative vanishing at 0; the top coefficient is dropped to keep order N."""
        c = [Fraction(0)] + [self[k] / (k + 1) for k in range(self.order)]
        return RationalSeries(tuple(c))

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries.from_poly(self.coeffs, order)

    def scaled(self) -> list[Fraction]:
        """``n! * c[n]``, the exponential-generating-function values."""
        return [self[k] * math.factorial(k) for k in range(self.order + 1)]


def zigzag_numbers(n_max: int) -> list[int]:
    """Euler up/down numbers ``E_0..E_n_max`` from the boustrophedon triangle."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [0]
        for k in range(n):
            nxt.append(nxt[-1] + row[n - 1 - k])
        row = nxt
        out.append(row[-1])
    return out


def zigzag_series(order: int) -> RationalSeries:
    """Taylor coefficients of ``tan(x/2 + pi/4)`` up to ``x**order``."""
    e = zigzag_numbers(order)
    return RationalSeries(tuple(Fraction(e[k], math.factorial(k)) for k in range(order + 1)))


def sin_series(order: int) -> RationalSeries:
    c = []
    for k in range(order + 1):
        c.append(Fraction(0) if k % 2 == 0 else Fraction((-1) ** (k // 2), math.factorial(k)))
    return RationalSeries(tuple(c))


def zigzag_series_via_integral(order: int) -> RationalSeries:
    """``1 + integral_0^x dt / (1 - sin t)`` by formal division and integration."""
    one = RationalSeries.from_poly([1], order + 1)
    inv = one / (one - sin_series(order + 1))
    return (inv.integral() + 1).truncate(order)


@dataclass(frozen=True)
class SeriesRow:
    n: int
    direct: int | None
    series: Fraction

    @property
    def match(self) -> bool | None:
        if self.direct is None:
            return None
        return self.series == self.direct

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "direct": None if self.direct is None else str(self.direct),
            "series": str(self.series),
            "match": self.match,
        }


def _principal_number(family: str, n: int) -> int:
    from .graph import named_family
    from .order import principal_decomposition
    from .principal import principal_number_formula

    g = named_family(family, n)
    return principal_number_formula(g, principal_decomposition(g))


def check_a_series(n_max: int = 9):
    """Compare ``n! [x^n] tan(x/2 + pi/4)`` with the principal number of ``path(n)``.

    Returns ``(all_passed, rows)``.
    """
    if n_max > 9:
        raise ValueError("n_max is capped at 9 for the direct side")
    s = zigzag_series(n_max).scaled()
    rows = [SeriesRow(n, _principal_number("path", n), s[n]) for n in range(1, n_max + 1)]
    return all(r.match for r in rows), rows


def family_series(family: str, order: int) -> RationalSeries:
    """Right-hand sides of the published A/D/E generating functions."""
    t = zigzag_series(order)
    x = RationalSeries.from_poly([0, 1], order)
    x2 = x * x
    fam = family.upper()
    if fam == "A":
        return t - 1
    if fam == "D":
        return (2 * x - 1) * t + 2 - 2 * x2
    if fam == "E":
        return (Fraction(1, 2) * x2 - 2 * x + 3) * t - 3 * x2 - x - 3
    raise ValueError(f"unknown family {family!r}")


_FAMILY_START = {"A": 1, "D": 4, "E": 4}


def evaluate_family_series(family: str, n_max: int = 9) -> list[SeriesRow]:
    """Both sides per ``n``; no equality is asserted.

    The direct side uses this library's encodings of ``D(n)`` and ``E(n)``;
    it is ``None`` where the encoding is undefined.
    """
    fam = family.upper()
    if n_max > 9:
        raise ValueError("n_max is capped at 9")
    s = family_series(fam, n_max).scaled()
    start = {"A": 1, "D": 3, "E": 4}[fam]
    rows = []
    for n in range(start, n_max + 1):
        direct = _principal_number("path" if fam == "A" else fam, n) if n >= _FAMILY_START[fam] else None
        rows.append(SeriesRow(n, direct, s[n]))
    return rows
