"""Window codes of shift-register sequences and their orthogonal-array strength.

Two independent routes to the strength of C_n^f:

* direct: count, for every t-subset of columns, how often each t-bit pattern
  occurs among the rows;
* dual: the dual code consists of the length-n coefficient vectors of multiples
  of f with degree < n, and the strength equals its minimum weight minus one.

Rows are packed ints; bit j of a row is column j+1 (coefficient of x^j on the
dual side).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .classify import is_primitive, is_squarefree, period
from .gf2poly import PolyGF2, _bits, _mul
from .lfsr import generate, impulse_seed
from .maxweight import MaxWeightPoly

__all__ = [
    "WindowCode",
    "StrengthReport",
    "DualResult",
    "build_code",
    "strength_direct",
    "strength_dual",
    "strength_report",
    "DUAL_ENUM_BOUND",
]

DUAL_ENUM_BOUND = 28
# subsets processed per numpy batch in the direct count
_BATCH_CELLS = 1 << 23


def _poly(f) -> PolyGF2:
    return f.poly if isinstance(f, MaxWeightPoly) else PolyGF2(_bits(f))


@dataclass(frozen=True)
class WindowCode:
    f: PolyGF2
    n: int
    rho: int
    rows: tuple[int, ...]  # sorted, distinct, includes 0

    def __len__(self):
        return len(self.rows)

    def matrix(self) -> np.ndarray:
        """Rows as a (len, n) uint8 array; column j holds bit j."""
        r = np.array(self.rows, dtype=object)
        cols = [(r >> j) & 1 for j in range(self.n)]
        return np.stack(cols, axis=1).astype(np.uint8)


def _check_dual_domain(f: PolyGF2) -> None:
    if f.degree < 1:
        raise ValueError("f must have degree >= 1")
    if not f.bits & 1:
        raise ValueError("f(0) must be 1")
    if not is_squarefree(f):
        raise ValueError(f"{f} is not squarefree; the duality needs distinct roots")


def build_code(f, n: int, seed=None) -> WindowCode:
    """All cyclic length-n windows over one period of the sequence, plus zero.

    Non-primitive f is accepted only when the seed's windows are all distinct
    (one full cycle of length rho); otherwise the window set is not the code
    the duality describes and a ValueError is raised.
    """
    f = _poly(f)
    _check_dual_domain(f)
    m = f.degree
    rho = period(f)
    if rho is None:
        raise ValueError(f"period of {f} exceeds the stepping cap")
    if not 2 <= n <= rho:
        raise ValueError(f"window length n={n} must lie in 2..{rho}")
    if seed is None:
        seed = impulse_seed(m)
    if not any(seed):
        raise ValueError("seed must be nonzero")
    seq = generate(f, seed, rho + n - 1)
    a = seq.packed
    mask = (1 << n) - 1
    windows = [(a >> i) & mask for i in range(rho)]
    distinct = set(windows)
    if len(distinct) != rho and not is_primitive(f):
        raise ValueError(
            f"seed yields {len(distinct)} distinct windows, expected rho={rho}; "
            "its minimal polynomial is likely a proper divisor of f"
        )
    distinct.add(0)
    return WindowCode(f, n, rho, tuple(sorted(distinct)))


def _balanced(cols: np.ndarray, t: int) -> bool:
    """True iff every t-subset of columns sees every pattern equally often.

    `cols` is the code transposed: one contiguous uint8 row per column.
    """
    n, nrows = cols.shape
    if nrows % (1 << t):
        return False
    want = nrows >> t
    batch = max(1, _BATCH_CELLS // nrows)
    subsets = itertools.combinations(range(n), t)
    while True:
        chunk = list(itertools.islice(subsets, batch))
        if not chunk:
            return True
        idx = np.array(chunk, dtype=np.intp)
        dtype = np.uint8 if t <= 8 else np.uint32
        codes = cols[idx[:, 0]].astype(dtype)  # (subsets, rows)
        for j in range(1, t):
            codes |= cols[idx[:, j]].astype(dtype) << j
        for pattern in range(1 << t):
            if not np.all(np.count_nonzero(codes == pattern, axis=1) == want):
                return False


def strength_direct(code: WindowCode, t_max: int = 4) -> int:
    """Largest t <= t_max for which the rows form an orthogonal array of strength t."""
    cols = np.ascontiguousarray(code.matrix().T)
    t = 0
    for s in range(1, min(t_max, code.n) + 1):
        if not _balanced(cols, s):
            break
        t = s
    return t


@dataclass(frozen=True)
class DualResult:
    strength: int
    min_weight: int
    cofactor: PolyGF2
    witness: PolyGF2

    def __iter__(self):
        return iter((self.strength, self.min_weight, self.witness))


def strength_dual(f, n: int) -> DualResult:
    """Minimum weight over the nonzero multiples f*h with deg h < n - m.

    h runs through 1, 2, 3, ... in numeric order. Going from h-1 to h flips the
    low k+1 bits, so the product changes by f*(2^{k+1}-1), one XOR from a
    table. The smallest h of minimum weight is the witness. The scan stops at
    the floor: 3, or 2 when the period of f is below n.

    For n <= m the dual is {0} and the code is all of GF(2)^n; that case
    returns strength n and the conventional minimum weight n+1, with zero
    witness.
    """
    f = _poly(f)
    _check_dual_domain(f)
    m = f.degree
    k = n - m
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        return DualResult(n, n + 1, PolyGF2(0), PolyGF2(0))
    if k > DUAL_ENUM_BOUND:
        raise ValueError(f"n - m = {k} exceeds the enumeration bound {DUAL_ENUM_BOUND}")
    rho = period(f)
    floor = 2 if rho is not None and rho < n else 3
    fb = f.bits
    table = [_mul(fb, (1 << (j + 1)) - 1) for j in range(k)]
    prod = fb
    best_w, best_h = prod.bit_count(), 1
    end = 1 << k
    h = 2
    while best_w > floor and h < end:
        prod ^= table[((h - 1) ^ h).bit_length() - 1]
        w = prod.bit_count()
        if w < best_w:
            best_w, best_h = w, h
        h += 1
    witness = PolyGF2(_mul(fb, best_h))
    if witness.weight != best_w:
        raise AssertionError("incremental product drifted from f*h")
    return DualResult(best_w - 1, best_w, PolyGF2(best_h), witness)


@dataclass(frozen=True)
class StrengthReport:
    f: PolyGF2
    n: int
    t_max: int
    strength_direct: int | None
    strength_dual: int | None
    dual_min_weight: int | None
    witness: PolyGF2 | None
    cofactor: PolyGF2 | None = None

    @property
    def agree(self) -> bool:
        """Direct and dual strengths match, allowing for the direct count
        stopping at t_max."""
        if self.strength_direct is None or self.strength_dual is None:
            return True
        return self.strength_direct == min(self.strength_dual, self.t_max, self.n)

    def as_dict(self) -> dict:
        d = {"f": str(self.f), "n": self.n}
        if self.strength_direct is not None:
            d["strength_direct"] = self.strength_direct
            d["t_max"] = self.t_max
        if self.strength_dual is not None:
            d["strength_dual"] = self.strength_dual
            d["dual_min_weight"] = self.dual_min_weight
            d["witness"] = str(self.witness)
            # 1-indexed positions b_j of the witness codeword
            d["witness_support"] = [j + 1 for j in range(self.n) if self.witness.coeff(j)]
            d["cofactor"] = str(self.cofactor)
        return d


def strength_report(f, n: int, method: str = "both", t_max: int = 4, seed=None) -> StrengthReport:
    if method not in ("direct", "dual", "both"):
        raise ValueError(f"unknown method {method!r}")
    f = _poly(f)
    direct = None
    if method in ("direct", "both"):
        direct = strength_direct(build_code(f, n, seed), t_max)
    if method == "direct":
        return StrengthReport(f, n, t_max, direct, None, None, None)
    dual = strength_dual(f, n)
    return StrengthReport(f, n, t_max, direct, dual.strength, dual.min_weight,
                          dual.witness, dual.cofactor)
