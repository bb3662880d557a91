"""Integer factorization for Mersenne numbers 2^m - 1, m <= 64.

Trial division by primes below 2^20, then Pollard rho (Brent's variant) on
whatever cofactor is left, with Miller-Rabin deciding primality.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

TRIAL_BOUND = 1 << 20
MR_ROUNDS = 40
# deterministic for n < 3.3e24, which covers every 64-bit cofactor
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorizationIncomplete(ArithmeticError):
    """A cofactor could not be split within the iteration budget."""


@lru_cache(maxsize=1)
def _small_primes(bound: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, bound, i)))
    return tuple(i for i in range(bound) if sieve[i])


def is_probable_prime(n: int, rounds: int = MR_ROUNDS) -> bool:
    """Miller-Rabin. Fixed witnesses make it exact below 3.3e24; random ones
    top the total up to `rounds` for anything larger."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(n)
    bases = list(_MR_BASES)
    bases += [rng.randrange(2, n - 1) for _ in range(max(0, rounds - len(bases)))]
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_rho(n: int, max_iter: int = 1 << 22, seed: int = 1) -> int | None:
    """Return a nontrivial factor of composite odd n, or None on give-up."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    for _ in range(16):
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        it = 0
        while g == 1 and it < max_iter:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            it += r
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        c = stack.pop()
        if c < TRIAL_BOUND * TRIAL_BOUND or is_probable_prime(c):
            # below 2^40 trial division already stripped every factor < 2^20
            counts[c] = counts.get(c, 0) + 1
            continue
        d = pollard_rho(c)
        if d is None:
            raise FactorizationIncomplete(f"could not split cofactor {c}")
        stack += [d, c // d]
    return sorted(counts.items())


@lru_cache(maxsize=None)
def _factorize_mersenne(m: int) -> tuple[tuple[int, int], ...]:
    return tuple(factorize((1 << m) - 1))


def factorize_mersenne(m: int) -> list[tuple[int, int]]:
    """Factorization of 2^m - 1 for 1 <= m <= 64."""
    if not 1 <= m <= 64:
        raise ValueError(f"Mersenne factoring supported for 1 <= m <= 64, got {m}")
    return list(_factorize_mersenne(m))
