"""Dense polynomials over GF(2).

A polynomial b_n x^n + ... + b_1 x + b_0 is stored as the nonnegative integer
b_n 2^n + ... + b_1 2 + b_0, so bit i holds the coefficient of x^i. Python
integers are arbitrary precision, which gives multi-word storage for free.

Addition is XOR, multiplication is carry-less shift-and-XOR, and the zero
polynomial has degree -1.
"""

from __future__ import annotations

import re

__all__ = [
    "PolyGF2",
    "PolySpecError",
    "add",
    "mul",
    "divrem",
    "gcd",
    "powmod_x",
    "reciprocal",
    "weight",
    "derivative",
    "parse",
]


class PolySpecError(ValueError):
    """Malformed polynomial text, with the offending token and its offset."""

    def __init__(self, message: str, token: str = "", offset: int = 0):
        super().__init__(f"{message}: {token!r} at offset {offset}")
        self.token = token
        self.offset = offset


class PolyGF2:
    """Immutable polynomial over GF(2) backed by an integer bitset."""

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if isinstance(bits, PolyGF2):
            bits = bits._bits
        if bits < 0:
            raise ValueError("coefficient bitset must be nonnegative")
        object.__setattr__(self, "_bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("PolyGF2 is immutable")

    def __reduce__(self):
        return (PolyGF2, (self._bits,))

    @classmethod
    def from_exponents(cls, *exponents: int) -> PolyGF2:
        """Sum of x^e over the given exponents; repeats cancel."""
        v = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            v ^= 1 << e
        return cls(v)

    @classmethod
    def parse(cls, s: str) -> PolyGF2:
        return parse(s)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self) -> int:
        return self._bits.bit_length() - 1

    @property
    def weight(self) -> int:
        return self._bits.bit_count()

    def exponents(self) -> list[int]:
        """Exponents of the nonzero terms, highest first."""
        v = self._bits
        return [i for i in range(v.bit_length() - 1, -1, -1) if (v >> i) & 1]

    def coeff(self, i: int) -> int:
        return (self._bits >> i) & 1 if i >= 0 else 0

    def is_zero(self) -> bool:
        return self._bits == 0

    def hex(self) -> str:
        return f"0x{self._bits:X}"

    def __bool__(self):
        return self._bits != 0

    def __int__(self):
        return self._bits

    def __index__(self):
        return self._bits

    def __eq__(self, other):
        if isinstance(other, PolyGF2):
            return self._bits == other._bits
        if isinstance(other, int):
            return self._bits == other
        return NotImplemented

    def __hash__(self):
        return hash(("PolyGF2", self._bits))

    def __lt__(self, other):
        return self._bits < PolyGF2(other)._bits

    def __str__(self):
        if not self._bits:
            return "0"
        terms = []
        for e in self.exponents():
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("x")
            else:
                terms.append(f"x^{e}")
        return "+".join(terms)

    def __repr__(self):
        return f"PolyGF2({self})"

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__
    __xor__ = __add__

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def __lshift__(self, k: int):
        return PolyGF2(self._bits << k)

    def __rshift__(self, k: int):
        return PolyGF2(self._bits >> k)


def _bits(a) -> int:
    if isinstance(a, PolyGF2):
        return a.bits
    if isinstance(a, int) and a >= 0:
        return a
    raise TypeError(f"expected PolyGF2 or nonnegative int, got {type(a).__name__}")


def _mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        # skip runs of zero bits in one shift
        low = (b & -b).bit_length() - 1
        a <<= low
        b >>= low
        c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, d: int) -> tuple[int, int]:
    if d == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = d.bit_length()
    q = 0
    shift = a.bit_length() - n
    while shift >= 0:
        q |= 1 << shift
        a ^= d << shift
        shift = a.bit_length() - n
    return q, a


def _mod(a: int, d: int) -> int:
    n = d.bit_length()
    shift = a.bit_length() - n
    while shift >= 0:
        a ^= d << shift
        shift = a.bit_length() - n
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _powmod_x(e: int, f: int) -> int:
    # deg f >= 1, so multiplying a residue by x needs at most one reduction step
    top = 1 << (f.bit_length() - 1)
    r = 1
    for bit in bin(e)[2:]:
        r = _mod(_mul(r, r), f)
        if bit == "1":
            r <<= 1
            if r & top:
                r ^= f
    return r


def add(a, b) -> PolyGF2:
    """Add polynomials a and b (coefficient-wise XOR)."""
    return PolyGF2(_bits(a) ^ _bits(b))


def mul(a, b) -> PolyGF2:
    """Carry-less product of a and b."""
    return PolyGF2(_mul(_bits(a), _bits(b)))


def divrem(a, d) -> tuple[PolyGF2, PolyGF2]:
    """Return (q, r) with a = q*d + r and deg r < deg d.

    Raises ZeroDivisionError when d is the zero polynomial.
    """
    q, r = _divmod(_bits(a), _bits(d))
    return PolyGF2(q), PolyGF2(r)


def gcd(a, b) -> PolyGF2:
    """Greatest common divisor by Euclidean remainders."""
    a, b = _bits(a), _bits(b)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return PolyGF2(_gcd(a, b))


def powmod_x(e: int, f) -> PolyGF2:
    """x^e mod f by square-and-multiply. Requires deg f >= 1."""
    f = _bits(f)
    if f.bit_length() < 2:
        raise ValueError("modulus must have degree >= 1")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return PolyGF2(_powmod_x(e, f))


def reciprocal(f) -> PolyGF2:
    """x^deg(f) * f(1/x): the coefficient sequence reversed over 0..deg f."""
    v = _bits(f)
    if v == 0:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    n = v.bit_length()
    return PolyGF2(int(format(v, f"0{n}b")[::-1], 2))


def weight(f) -> int:
    """Number of nonzero coefficients."""
    return _bits(f).bit_count()


def derivative(f) -> PolyGF2:
    """Formal derivative; over GF(2) only odd-degree terms survive, shifted down."""
    v = _bits(f)
    odd = v & int("10" * ((v.bit_length() + 1) // 2 + 1), 2)
    return PolyGF2(odd >> 1)


_TERM = re.compile(r"\s*(?:(x)(?:\s*\^\s*(\d+))?|(\d+))\s*")


def parse(s: str) -> PolyGF2:
    """Parse "x^5+x^4+1" style text or "0x31" style hex.

    Terms may appear in any order; repeated terms cancel.
    """
    text = s.strip()
    if text[:2].lower() == "0x":
        digits = text[2:]
        try:
            if not digits or digits.startswith(("-", "+", "_")):
                raise ValueError
            return PolyGF2(int(digits, 16))
        except ValueError:
            raise PolySpecError("bad hex literal", s, s.find(text)) from None
    if not text:
        raise PolySpecError("empty polynomial", s, 0)
    v = 0
    pos = 0
    n = len(s)
    while True:
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            tok = s[pos:].split("+")[0].strip() or s[pos:pos + 1]
            raise PolySpecError("unexpected token", tok, pos)
        if m.group(1):
            v ^= 1 << (int(m.group(2)) if m.group(2) is not None else 1)
        else:
            c = int(m.group(3))
            if c not in (0, 1):
                raise PolySpecError("coefficient must be 0 or 1", m.group(3), m.start(3))
            v ^= c
        pos = m.end()
        if pos == n:
            break
        if s[pos] != "+":
            raise PolySpecError("expected '+'", s[pos], pos)
        pos += 1
        if pos == n:
            raise PolySpecError("dangling '+'", "+", pos - 1)
    return PolyGF2(v)
