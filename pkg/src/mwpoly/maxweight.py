"""Maximum-weight polynomials: degree m, weight m, with m odd.

MW(m, l) is x^m + ... + x^{l+1} + x^{l-1} + ... + x + 1, i.e. every
coefficient 0..m set except the one at x^l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .gf2poly import PolyGF2

__all__ = [
    "MaxWeightPoly",
    "construct",
    "times_x_plus_1",
    "reciprocal_mw",
    "gcd_obstruction",
    "enumerate_mw",
    "all_ones",
    "as_maxweight",
]


def all_ones(d: int) -> PolyGF2:
    """x^{d-1} + ... + x + 1, which is (x^d + 1)/(x + 1)."""
    return PolyGF2((1 << d) - 1)


def _check_m(m: int) -> None:
    if m < 3 or m % 2 == 0:
        raise ValueError(f"maximum-weight degree must be odd and >= 3, got m={m}")


@dataclass(frozen=True, order=True)
class MaxWeightPoly:
    m: int
    l: int  # noqa: E741

    def __post_init__(self):
        _check_m(self.m)
        if not 1 <= self.l <= self.m - 1:
            raise ValueError(f"missing-term index must lie in 1..{self.m - 1}, got l={self.l}")

    @cached_property
    def poly(self) -> PolyGF2:
        """The expanded polynomial."""
        return PolyGF2(((1 << (self.m + 1)) - 1) ^ (1 << self.l))

    def expand(self) -> PolyGF2:
        return self.poly

    def __str__(self):
        return f"mw:{self.m},{self.l}"


def construct(m: int, l: int) -> MaxWeightPoly:  # noqa: E741
    return MaxWeightPoly(m, l)


def times_x_plus_1(p: MaxWeightPoly) -> PolyGF2:
    """(x+1)·MW(m,l) = x^{m+1} + x^{l+1} + x^l + 1."""
    return PolyGF2.from_exponents(p.m + 1, p.l + 1, p.l, 0)


def reciprocal_mw(p: MaxWeightPoly) -> MaxWeightPoly:
    return MaxWeightPoly(p.m, p.m - p.l)


def gcd_obstruction(p: MaxWeightPoly) -> PolyGF2 | None:
    """Explicit proper factor x^{d-1}+...+1 when d = gcd(m, l) > 1, else None.

    With m = d*m1 and l = d*l1, (x+1)f = x^{l+1}(x^{d(m1-l1)}+1) + (x^{d*l1}+1),
    and x^d+1 divides both brackets, so (x^d+1)/(x+1) divides f.
    """
    d = math.gcd(p.m, p.l)
    if d == 1:
        return None
    return all_ones(d)


def enumerate_mw(m: int) -> list[MaxWeightPoly]:
    """All MW(m, l) for l = 1..m-1."""
    _check_m(m)
    return [MaxWeightPoly(m, l) for l in range(1, m)]


def as_maxweight(f) -> MaxWeightPoly | None:
    """Recognise an expanded polynomial as MW(m, l), or return None."""
    if isinstance(f, MaxWeightPoly):
        return f
    f = PolyGF2(f)
    m = f.degree
    if m < 3 or m % 2 == 0 or f.weight != m:
        return None
    missing = ((1 << (m + 1)) - 1) ^ f.bits
    l = missing.bit_length() - 1  # noqa: E741
    if not 1 <= l <= m - 1:
        return None
    return MaxWeightPoly(m, l)
