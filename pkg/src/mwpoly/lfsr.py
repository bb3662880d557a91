"""Shift-register sequences and the three-term identity for maximum-weight taps.

For characteristic polynomial f = x^m + sum c_i x^i the sequence obeys
a_{n+m} = sum_{i<m} c_i a_{n+i}. Streams are stored packed in an int with
bit i holding a_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .classify import is_primitive
from .gf2poly import PolyGF2, _bits
from .maxweight import MaxWeightPoly

log = logging.getLogger(__name__)

__all__ = [
    "LfsrSequence",
    "NotPrimitive",
    "generate",
    "impulse_seed",
    "seed_from_int",
    "three_term_identity_holds",
    "prop2_check",
]


class NotPrimitive(ValueError):
    """The identity check needs a primitive characteristic polynomial."""


def impulse_seed(m: int) -> list[int]:
    """a_0 = ... = a_{m-2} = 0, a_{m-1} = 1."""
    return [0] * (m - 1) + [1]


def seed_from_int(v: int, m: int) -> list[int]:
    """Bit i of v becomes a_i."""
    if v >> m:
        raise ValueError(f"seed 0x{v:X} has more than {m} bits")
    return [(v >> i) & 1 for i in range(m)]


@dataclass(frozen=True)
class LfsrSequence:
    characteristic: PolyGF2
    seed: tuple[int, ...]
    packed: int
    length: int

    @property
    def m(self) -> int:
        return self.characteristic.degree

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(self.length))]
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.packed >> i) & 1

    def bits(self) -> list[int]:
        return [(self.packed >> i) & 1 for i in range(self.length)]

    def bitstring(self) -> str:
        return "".join(map(str, self.bits()))

    def hex(self) -> str:
        return f"0x{self.packed:X}"


def generate(f, seed, length: int) -> LfsrSequence:
    f = PolyGF2(_bits(f.poly if isinstance(f, MaxWeightPoly) else f))
    m = f.degree
    if m < 1:
        raise ValueError("characteristic polynomial must have degree >= 1")
    seed = tuple(int(b) & 1 for b in seed)
    if len(seed) != m:
        raise ValueError(f"seed has length {len(seed)}, expected {m}")
    if length < m:
        raise ValueError(f"length {length} is shorter than the degree {m}")
    taps = f.bits ^ (1 << m)
    state = sum(b << i for i, b in enumerate(seed))
    packed = state
    # state holds a_n..a_{n+m-1} with a_n in bit 0
    for k in range(m, length):
        b = (state & taps).bit_count() & 1
        state = (state >> 1) | (b << (m - 1))
        packed |= b << k
    return LfsrSequence(f, seed, packed, length)


def three_term_identity_holds(seq: LfsrSequence, m: int, l: int, horizon: int) -> bool:  # noqa: E741
    """Check a_{n+m} = a_{n-1} + a_{n-1+l} + a_{n+l} for n = 1..horizon."""
    if len(seq) < horizon + m + 1:
        raise ValueError("sequence too short for the requested horizon")
    a = seq.packed
    for n in range(1, horizon + 1):
        lhs = (a >> (n + m)) & 1
        rhs = ((a >> (n - 1)) ^ (a >> (n - 1 + l)) ^ (a >> (n + l))) & 1
        if lhs != rhs:
            log.debug("identity fails at n=%d for m=%d l=%d", n, m, l)
            return False
    return True


def _log_n0(seq: LfsrSequence, m: int, l: int) -> None:  # noqa: E741
    # a_{-1} comes from running the recurrence backwards; c_0 = 1 makes that possible
    f = seq.characteristic.bits
    a = seq.packed
    prev = (a >> (m - 1)) & 1
    for i in range(1, m):
        if (f >> i) & 1:
            prev ^= (a >> (i - 1)) & 1
    rhs = prev ^ ((a >> (l - 1)) & 1) ^ ((a >> l) & 1)
    log.debug("n=0 case (a_{-1}=%d by back-stepping): identity %s",
              prev, "holds" if rhs == ((a >> m) & 1) else "fails")


def prop2_check(p: MaxWeightPoly, seed=None, horizon: int | None = None) -> bool:
    """Generate the MW(m, l) stream and test the three-term identity.

    Raises NotPrimitive for a non-primitive MW(m, l), matching the hypothesis
    under which the identity is claimed.
    """
    m, l = p.m, p.l  # noqa: E741
    if seed is None:
        seed = impulse_seed(m)
    if horizon is None:
        horizon = 4 * m
    if horizon < m + 2:
        raise ValueError(f"horizon must be at least m+2 = {m + 2}")
    if not any(seed):
        raise ValueError("seed must be nonzero")
    if not is_primitive(p.poly):
        raise NotPrimitive(f"MW({m},{l}) = {p.poly} is not primitive")
    seq = generate(p.poly, seed, horizon + m + 1)
    _log_n0(seq, m, l)
    return three_term_identity_holds(seq, m, l, horizon)
