"""Exact modular and p-adic arithmetic primitives.

Everything here is integer-exact: valuations of factorials and falling
factorials (Legendre's formula), binomial coefficients mod p (Lucas'
theorem), the period p^m attached to a rank r, and a deterministic
prime sieve. Python integers are unbounded, so none of these operations
can overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PrimePower",
    "legendre_valuation",
    "falling_valuation",
    "binomial_mod_p",
    "period_for_rank",
    "primes_up_to",
    "is_prime",
]


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^m."""

    p: int
    m: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.q != self.p**self.m:
            raise ValueError(f"q={self.q} is not {self.p}^{self.m}")


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n!, i.e. sum of floor(n/p^j) over j >= 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def falling_valuation(n: int, i: int, p: int) -> int:
    """Exponent of p in the falling factorial n*(n-1)*...*(n-i+1).

    The empty product (i = 0) has valuation 0. Requires n >= i >= 0.
    """
    if i < 0:
        raise ValueError(f"i must be nonnegative, got {i}")
    if n < i:
        raise ValueError(f"falling factorial needs n >= i, got n={n}, i={i}")
    return legendre_valuation(n, p) - legendre_valuation(n - i, p)


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem: the product of base-p digit binomials.

    Out-of-range k (k < 0 or k > n) gives 0.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    if k < 0 or k > n:
        return 0
    result = 1
    while n > 0 and result:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return 0
        result = result * math.comb(nd, kd) % p
    return result


def period_for_rank(p: int, r: int) -> PrimePower:
    """Smallest power p^m with r <= p^m; governs periodicity in the second
    tensor factor for rank r. m = 0 exactly when r = 1."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    m, q = 0, 1
    while q < r:
        m += 1
        q *= p
    return PrimePower(p, m, q)


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by the sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i in range(2, bound + 1) if sieve[i]]


def is_prime(n: int) -> bool:
    """Deterministic primality test: trial division by sieved primes."""
    if n < 2:
        return False
    for q in primes_up_to(math.isqrt(n)):
        if n % q == 0:
            return False
    return True
