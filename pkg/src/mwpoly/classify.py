"""Irreducibility, primitivity and period of polynomials over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass

from .factor import FactorizationIncomplete, factorize, factorize_mersenne
from .gf2poly import PolyGF2, _bits, _gcd, _mod, _mul, _powmod_x, derivative

__all__ = [
    "ClassifyReport",
    "Unverifiable",
    "DEFAULT_PERIOD_CAP",
    "is_irreducible",
    "is_primitive",
    "is_squarefree",
    "period",
    "classify",
    "factorize_mersenne",
]

DEFAULT_PERIOD_CAP = 1 << 22

ORDER_COMPUTATION = "order-computation"
BRUTE_FORCE = "brute-force-stepping"


class Unverifiable(RuntimeError):
    """Primitivity could not be decided because 2^m - 1 did not factor."""


def _need_degree(f: int) -> int:
    m = f.bit_length() - 1
    if m < 1:
        raise ValueError("polynomial must have degree >= 1")
    return m


def _x_pow_2k(f: int, k: int) -> int:
    """x^(2^k) mod f by k squarings."""
    r = _mod(2, f)
    for _ in range(k):
        r = _mod(_mul(r, r), f)
    return r


def is_irreducible(f) -> bool:
    """Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/q)) - x, f) = 1 for
    each prime q dividing m."""
    f = _bits(f)
    m = _need_degree(f)
    x = _mod(2, f)
    if _x_pow_2k(f, m) != x:
        return False
    for q, _ in factorize(m):
        if _gcd(f, _x_pow_2k(f, m // q) ^ x) != 1:
            return False
    return True


def is_squarefree(f) -> bool:
    """gcd(f, f') = 1. Over GF(2) a zero derivative means f is a square."""
    f = _bits(f)
    d = derivative(f).bits
    if d == 0:
        return f.bit_length() <= 1
    return _gcd(f, d) == 1


def _order_of_x(f: int, m: int) -> int:
    """Multiplicative order of x in GF(2)[x]/(f) for irreducible f."""
    n = (1 << m) - 1
    order = n
    for q, e in factorize_mersenne(m) if m <= 64 else factorize(n):
        for _ in range(e):
            if _powmod_x(order // q, f) == 1:
                order //= q
            else:
                break
    return order


def _period_by_stepping(f: int, cap: int) -> int | None:
    top = 1 << (f.bit_length() - 1)
    r = 1
    for e in range(1, cap + 1):
        r <<= 1
        if r & top:
            r ^= f
        if r == 1:
            return e
    return None


def _check_period_domain(f: int) -> int:
    m = _need_degree(f)
    if not f & 1:
        raise ValueError("f(0) = 0: x divides f, so no period exists")
    return m


def period(f, cap: int = DEFAULT_PERIOD_CAP) -> int | None:
    """Least e >= 1 with f | x^e - 1, or None if brute force passes `cap`."""
    return _period_with_method(_bits(f), cap)[0]


def _period_with_method(f: int, cap: int) -> tuple[int | None, str]:
    m = _check_period_domain(f)
    if is_irreducible(f):
        try:
            return _order_of_x(f, m), ORDER_COMPUTATION
        except FactorizationIncomplete:
            pass
    return _period_by_stepping(f, cap), BRUTE_FORCE


def is_primitive(f) -> bool:
    """Irreducible with x of order exactly 2^m - 1.

    Raises Unverifiable if 2^m - 1 cannot be factored (m > 64 or a stubborn
    cofactor); that is not the same as returning False.
    """
    f = _bits(f)
    m = _check_period_domain(f)
    if not is_irreducible(f):
        return False
    n = (1 << m) - 1
    try:
        primes = [q for q, _ in factorize_mersenne(m)]
    except (ValueError, FactorizationIncomplete) as exc:
        raise Unverifiable(f"cannot factor 2^{m}-1: {exc}") from exc
    return all(_powmod_x(n // q, f) != 1 for q in primes)


@dataclass(frozen=True)
class ClassifyReport:
    input: PolyGF2
    irreducible: bool
    primitive: bool | None
    period: int | None
    method: str | None

    def __post_init__(self):
        if self.primitive and not self.irreducible:
            raise AssertionError("primitive implies irreducible")

    def as_dict(self) -> dict:
        return {
            "input": str(self.input),
            "degree": self.input.degree,
            "weight": self.input.weight,
            "irreducible": self.irreducible,
            "primitive": self.primitive,
            "period": self.period,
            "method": self.method,
        }


def classify(f, cap: int = DEFAULT_PERIOD_CAP) -> ClassifyReport:
    """Full report. `primitive` is None when undecidable; `period` and
    `method` are None when f(0) = 0."""
    f = PolyGF2(_bits(f))
    irreducible = is_irreducible(f)
    if f.bits & 1:
        per, method = _period_with_method(f.bits, cap)
        try:
            primitive = is_primitive(f)
        except Unverifiable:
            primitive = None
    else:
        per = method = None
        # x itself is irreducible with x | f, so it is never primitive
        primitive = False
    return ClassifyReport(f, irreducible, primitive, per, method)
