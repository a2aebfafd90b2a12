"""Survey layer: deviation tables and the census of deviation vectors.

For fixed r, only finitely many deviation vectors occur as s and the
prime p range over all valid values. The table lists one vector per
residue class: small primes (p < 2r-3, where the period p^m may exceed
p) get classes 0..p^m/2 with duality supplying the rest, and a single
generic row covers every large prime p' >= 2r-3 (classes 0..r-2, plus
the standard vector at class r-1). The census enumerates all vectors by
sweeping full periods for every prime up to a configurable bound
(default 3r) and keeps a witness (s, p) for each vector found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, period_for_rank, primes_up_to
from .fastpath import class_representative, jordan_partition
from .partitions import DeviationVector, standard_deviation_vector

__all__ = [
    "TableRow",
    "DeviationTable",
    "DeviationCensus",
    "deviation_table",
    "enumerate_deviation_vectors",
    "check_bound",
    "GENERIC_PRIME",
]

# Marker for the table row valid for every prime >= 2r-3.
GENERIC_PRIME = None


@dataclass(frozen=True)
class TableRow:
    """One table cell: prime (None = any large prime), residue class of s
    modulo the period, and the deviation vector."""

    p: int | None
    residue: int
    epsilon: DeviationVector


@dataclass(frozen=True)
class DeviationTable:
    r: int
    rows: tuple[TableRow, ...]


@dataclass(frozen=True)
class DeviationCensus:
    """All deviation vectors for rank r over primes up to prime_bound,
    each with one witnessing (s, p)."""

    r: int
    vectors: tuple[DeviationVector, ...]
    witnesses: dict[tuple[int, ...], tuple[int, int]]
    prime_bound: int

    @property
    def n(self) -> int:
        return len(self.vectors)


def _smallest_prime_at_least(n: int) -> int:
    candidate = max(n, 2)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def deviation_table(r: int) -> DeviationTable:
    """Deviation vectors of rank r, one row per (prime, residue class)."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    rows: list[TableRow] = []
    for p in primes_up_to(2 * r - 4):
        q = period_for_rank(p, r).q
        for residue in range(q // 2 + 1):
            s = class_representative(residue, r, q)
            rows.append(TableRow(p, residue, jordan_partition(r, s, p).epsilon))
    generic = _smallest_prime_at_least(max(2 * r - 3, 2))
    for residue in range(r - 1):
        s = class_representative(residue, r, generic)
        rows.append(TableRow(GENERIC_PRIME, residue, jordan_partition(r, s, generic).epsilon))
    rows.append(TableRow(GENERIC_PRIME, r - 1, standard_deviation_vector(r)))
    return DeviationTable(r, tuple(rows))


def enumerate_deviation_vectors(r: int, prime_bound: int | None = None) -> DeviationCensus:
    """Census of every deviation vector of rank r.

    Sweeps one full period of s for each prime p <= prime_bound and adds
    the standard vector (the answer for all primes beyond the bound).
    The default bound 3r reproduces the known counts; raise it to
    double-check stability.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if prime_bound is None:
        prime_bound = 3 * r
    if prime_bound < 3 * r:
        raise ValueError(f"prime_bound must be at least 3r = {3 * r}, got {prime_bound}")
    witnesses: dict[tuple[int, ...], tuple[int, int]] = {}
    for p in primes_up_to(prime_bound):
        q = period_for_rank(p, r).q
        for s in range(r, r + q):
            eps = jordan_partition(r, s, p).epsilon
            witnesses.setdefault(eps.entries, (s, p))
    # The standard vector, witnessed at a prime large enough for the
    # residue criterion to hold at s = r - 1 + p.
    p_std = _smallest_prime_at_least(2 * r - 2)
    s_std = r - 1 + p_std
    eps_std = jordan_partition(r, s_std, p_std).epsilon
    if eps_std != standard_deviation_vector(r):
        raise AssertionError(f"witness ({s_std},{p_std}) for rank {r} is not standard")
    witnesses.setdefault(eps_std.entries, (s_std, p_std))
    vectors = tuple(
        DeviationVector(entries) for entries in sorted(witnesses, reverse=True)
    )
    return DeviationCensus(r, vectors, witnesses, prime_bound)


def check_bound(census: DeviationCensus) -> bool:
    """True when the census respects the 2^(r-1) ceiling."""
    return census.n <= 2 ** (census.r - 1)
