"""Trinomial multiples of a polynomial, and the sweeps built on them.

Every trinomial multiple is canonicalised to constant term 1. Since f(0) = 1
means x does not divide f, x^c (x^a + x^b + 1) is a multiple of f exactly when
x^a + x^b + 1 is, so nothing is lost.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .gf2poly import PolyGF2, _bits, _divmod, _mul, reciprocal
from .maxweight import MaxWeightPoly, enumerate_mw

log = logging.getLogger(__name__)

__all__ = [
    "TrinomialHit",
    "SweepReport",
    "trinomial_multiples",
    "verify_table1",
    "corollary1_sweep",
    "TABLE1",
    "table1_expected",
    "table1_divisors",
    "compare_with_table1",
]


@dataclass(frozen=True, order=True)
class TrinomialHit:
    """g = f*h with g a trinomial x^a + x^b + 1. Checked on construction."""

    g: PolyGF2 = field(compare=True)
    f: PolyGF2 = field(compare=True)
    h: PolyGF2 = field(compare=True)

    def __post_init__(self):
        g, f, h = _bits(self.g), _bits(self.f), _bits(self.h)
        if g.bit_count() != 3 or not g & 1:
            raise ValueError(f"g = {self.g} is not a trinomial with constant term 1")
        if _mul(f, h) != g:
            raise ValueError(f"f*h != g for g={self.g}, f={self.f}, h={self.h}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.g.bits, self.f.bits)

    def reciprocal(self) -> TrinomialHit:
        return TrinomialHit(reciprocal(self.g), reciprocal(self.f), reciprocal(self.h))

    def as_dict(self) -> dict:
        return {
            "g": str(self.g),
            "f": str(self.f),
            "h": str(self.h),
            "deg_g": self.g.degree,
            "weight_h": self.h.weight,
        }


def _as_poly(f) -> PolyGF2:
    if isinstance(f, MaxWeightPoly):
        return f.poly
    return PolyGF2(_bits(f))


def trinomial_multiples(f, max_deg: int) -> list[TrinomialHit]:
    """All x^a + x^b + 1 with 0 < b < a <= max_deg divisible by f, sorted by (a, b).

    Walks r_k = x^k mod f for k = 1..max_deg and looks up r_k ^ 1 in a
    residue -> exponents index of the earlier k.
    """
    fp = _as_poly(f)
    fb = fp.bits
    m = fp.degree
    if m < 1:
        raise ValueError("divisor must have degree >= 1")
    if not fb & 1:
        raise ValueError("divisor must have nonzero constant term")
    if max_deg < m:
        raise ValueError(f"max_deg={max_deg} is below deg f={m}")

    top = 1 << m
    seen: dict[int, list[int]] = {}
    pairs = []
    r = 1
    for a in range(1, max_deg + 1):
        r <<= 1
        if r & top:
            r ^= fb
        for b in seen.get(r ^ 1, ()):
            pairs.append((a, b))
        seen.setdefault(r, []).append(a)

    hits = []
    for a, b in sorted(pairs):
        g = (1 << a) | (1 << b) | 1
        q, rem = _divmod(g, fb)
        if rem:
            raise AssertionError(f"residue index produced a non-multiple x^{a}+x^{b}+1")
        hits.append(TrinomialHit(PolyGF2(g), fp, PolyGF2(q)))
    return hits


# (g, f, h) rows of the published exception table
TABLE1 = (
    ("x^5+x^4+1", "x^3+x+1", "x^2+x+1"),
    ("x^6+x^4+1", "x^3+x^2+1", "x^3+x^2+1"),
    ("x^9+x^7+1", "x^5+x^3+x^2+x+1", "x^4+x+1"),
    ("x^7+x^5+1", "x^5+x^4+x^3+x+1", "x^2+x+1"),
    ("x^8+x^5+1", "x^5+x^4+x^3+x^2+1", "x^3+x^2+1"),
    ("x^14+x^13+1", "x^7+x^6+x^5+x^4+x^3+x+1", "x^7+x^5+x^2+x+1"),
    ("x^13+x^10+1", "x^7+x^6+x^5+x^4+x^3+x^2+1", "x^6+x^5+x^3+x^2+1"),
)


def table1_expected() -> list[TrinomialHit]:
    """Published rows together with their reciprocal images, deduplicated on (g, f)."""
    rows = {}
    for g, f, h in TABLE1:
        hit = TrinomialHit(PolyGF2.parse(g), PolyGF2.parse(f), PolyGF2.parse(h))
        for x in (hit, hit.reciprocal()):
            rows.setdefault(x.key, x)
    return _ordered(rows.values())


def _ordered(hits) -> list[TrinomialHit]:
    return sorted(hits, key=lambda t: (t.f.degree, t.f.bits, t.g.degree, t.g.bits))


def verify_table1() -> list[TrinomialHit]:
    """Exhaustive search over every MW(m, l), m in {3, 5, 7}, up to degree 2m."""
    rows = {}
    for m in (3, 5, 7):
        for p in enumerate_mw(m):
            for hit in trinomial_multiples(p, 2 * m):
                rows.setdefault(hit.key, hit)
    return _ordered(rows.values())


def compare_with_table1(hits) -> tuple[list[TrinomialHit], list[TrinomialHit]]:
    """(missing, extra): published rows not found, and found rows not published."""
    expected = {h.key: h for h in table1_expected()}
    found = {h.key: h for h in hits}
    missing = [expected[k] for k in expected.keys() - found.keys()]
    extra = [found[k] for k in found.keys() - expected.keys()]
    return _ordered(missing), _ordered(extra)


def table1_divisors() -> set[PolyGF2]:
    """Every divisor f named in the table, plus reciprocals."""
    return {h.f for h in table1_expected()}


@dataclass
class SweepReport:
    m_min: int
    m_max: int
    checked: list[tuple[int, int]]
    hits: list[tuple[int, int, TrinomialHit]]
    elapsed: float

    @property
    def total(self) -> int:
        return len(self.checked)

    @property
    def falsified(self) -> bool:
        return bool(self.hits)

    def as_dict(self) -> dict:
        # elapsed time is left out so repeated runs serialise identically
        return {
            "m_min": self.m_min,
            "m_max": self.m_max,
            "total": self.total,
            "hit_count": len(self.hits),
            "checked": [list(p) for p in self.checked],
            "hits": [dict(m=m, l=l, **h.as_dict()) for m, l, h in self.hits],
        }


def _sweep_one(ml: tuple[int, int], mutate=None):
    m, l = ml
    f = MaxWeightPoly(m, l).poly
    if mutate is not None:
        f = PolyGF2(mutate(m, l, f))
    return ml, trinomial_multiples(f, 2 * m)


def corollary1_sweep(m_min: int, m_max: int, jobs: int = 1, mutate=None) -> SweepReport:
    """Search every MW(m, l) with odd m in [m_min, m_max] for trinomial multiples
    of degree <= 2m. Any hit falsifies the claim and is reported verbatim.

    `mutate(m, l, f)` replaces each divisor before the search; tests use it to
    confirm the sweep reports hits when they exist. It must be picklable when
    jobs > 1.
    """
    if m_min <= 7:
        raise ValueError(f"m_min must exceed 7, got {m_min}")
    start = time.perf_counter()
    pairs = [(m, l) for m in range(m_min, m_max + 1) if m % 2 for l in range(1, m)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, pairs, [mutate] * len(pairs), chunksize=8))
    else:
        results = [_sweep_one(p, mutate) for p in pairs]
    hits = []
    for (m, l), found in sorted(results, key=lambda r: r[0]):
        for h in found:
            log.warning("hit for MW(%d,%d): %s = (%s)(%s)", m, l, h.g, h.f, h.h)
            hits.append((m, l, h))
    elapsed = time.perf_counter() - start
    log.info("checked %d pairs in %.3fs, %d hits", len(pairs), elapsed, len(hits))
    return SweepReport(m_min, m_max, pairs, hits, elapsed)
