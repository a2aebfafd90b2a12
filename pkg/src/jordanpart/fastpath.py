"""Symmetry reductions, closed forms, and the dispatching front door.

Deviation vectors are periodic in s with period q = p^m (the smallest
p-power >= r) and dual under s -> -s mod q, where duality acts as the
negative-reverse involution. On top of that sit exact closed forms for
the residue classes s = 0, +-1, +-2 (mod q), a residue criterion mod p
for the standard partition, a largest-part formula, and scaling: when
p^k divides both r and s the answer is the p^k-multiple of the reduced
one. The dispatcher chains swap -> p-multiple -> periodicity/duality ->
closed form, and falls back to the delta recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import binomial_mod_p, is_prime, period_for_rank
from .delta import recurrence_partition
from .oracle import DEFAULT_ORACLE_CEILING, oracle_partition
from .partitions import (
    DeviationVector,
    JordanRecord,
    Partition,
    deviation,
    k_multiple,
    negative_reverse,
    standard_deviation_vector,
    standard_partition,
    validate_jordan_record,
)

__all__ = [
    "Reduction",
    "InapplicableMethodError",
    "canonicalize",
    "closed_form",
    "largest_part",
    "p_multiple_reduce",
    "class_representative",
    "jordan_partition",
]


class InapplicableMethodError(Exception):
    """A forced method override cannot handle the given parameters."""


@dataclass(frozen=True)
class Reduction:
    """One applied symmetry step, mapping (r, s) parameters."""

    kind: str  # swap-r-s | periodicity | duality | p-multiple
    source: tuple[int, int]
    target: tuple[int, int]

    KINDS = ("swap-r-s", "periodicity", "duality", "p-multiple")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown reduction kind {self.kind!r}")

    def render(self) -> str:
        return f"{self.kind}:({self.source[0]},{self.source[1]})->({self.target[0]},{self.target[1]})"


def class_representative(residue: int, r: int, q: int) -> int:
    """Smallest s >= r with s = residue (mod q)."""
    a = residue % q
    if a >= r:
        return a
    return a + ((r - a + q - 1) // q) * q


def canonicalize(r: int, s: int, p: int) -> tuple[int, bool, tuple[Reduction, ...]]:
    """Reduce s to the representative s* of its canonical residue class.

    The canonical class of a = s mod q is min(a, q - a): classes above
    q/2 are folded down by duality, in which case the caller must
    negative-reverse the deviation vector computed at s*. Returns
    (s*, dual_flag, reduction steps). Requires r <= s.
    """
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    q = period_for_rank(p, r).q
    a = s % q
    b = (q - a) % q
    dual = b < a
    cls = b if dual else a
    steps: list[Reduction] = []
    s_periodic = class_representative(a, r, q)
    if s_periodic != s:
        steps.append(Reduction("periodicity", (r, s), (r, s_periodic)))
    s_star = s_periodic
    if dual:
        s_star = class_representative(cls, r, q)
        steps.append(Reduction("duality", (r, s_periodic), (r, s_star)))
    return s_star, dual, tuple(steps)


def closed_form(r: int, s: int, p: int) -> tuple[DeviationVector, str] | None:
    """Deviation vector when a closed form applies, with the method name.

    Covers s = 0 (uniform), +-1, +-2 (mod q = p^m), and the residue
    criterion mod p under which the partition is standard: s avoiding
    0, +-1, ..., +-(r-2). Returns None when no closed form applies.
    """
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    q = period_for_rank(p, r).q
    a = s % q
    if a == 0:
        return DeviationVector((0,) * r), "uniform"
    if a == 1:
        return DeviationVector((r - 1,) + (-1,) * (r - 1)), "closed-form"
    if a == q - 1:
        return DeviationVector((1,) * (r - 1) + (1 - r,)), "closed-form"
    if r >= 2 and a == 2:
        if r % p == 0:
            return DeviationVector((r - 2, r - 2) + (-2,) * (r - 2)), "closed-form"
        return DeviationVector((r - 1, r - 3) + (-2,) * (r - 2)), "closed-form"
    if r >= 2 and a == q - 2:
        if r % p == 0:
            return DeviationVector((2,) * (r - 2) + (2 - r, 2 - r)), "closed-form"
        return DeviationVector((2,) * (r - 2) + (3 - r, 1 - r)), "closed-form"
    forbidden = {t % p for t in range(-(r - 2), r - 1)}
    if s % p not in forbidden:
        return standard_deviation_vector(r), "standard"
    return None


def largest_part(r: int, s: int, p: int) -> tuple[int, int]:
    """Largest part and its multiplicity: (r+s-k, k) for the minimal k >= 1
    with C(r+s-1-k, r-1) nonzero mod p."""
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    for k in range(1, r + 1):
        if binomial_mod_p(r + s - 1 - k, r - 1, p) != 0:
            return r + s - k, k
    raise AssertionError(f"no k <= {r} found for ({r},{s},{p}); largest part >= s forces one")


def p_multiple_reduce(r: int, s: int, p: int) -> tuple[int, int, int] | None:
    """(r/p^k, s/p^k, p^k) for the largest p^k dividing both r and s;
    None when p divides at most one of them."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    k = 0
    while r % p == 0 and s % p == 0:
        r //= p
        s //= p
        k += 1
    return (r, s, p**k) if k else None


def _epsilon_via_reductions(
    r: int, s: int, p: int, reductions: list[Reduction]
) -> tuple[Partition, str]:
    """Core of the dispatcher for prime p and r <= s: apply p-multiple,
    periodicity and duality, then a closed form or the recurrence."""
    work_r, work_s, factor = r, s, 1
    reduced = p_multiple_reduce(r, s, p)
    if reduced is not None:
        work_r, work_s, factor = reduced
        reductions.append(Reduction("p-multiple", (r, s), (work_r, work_s)))
    s_star, dual, steps = canonicalize(work_r, work_s, p)
    reductions.extend(steps)
    found = closed_form(work_r, s_star, p)
    if found is not None:
        eps_star, method = found
    else:
        eps_star = deviation(recurrence_partition(work_r, s_star, p), s_star)
        method = "recurrence"
    eps_work = negative_reverse(eps_star) if dual else eps_star
    lam_work = Partition(tuple(work_s + e for e in eps_work.entries))
    lam = k_multiple(lam_work, factor) if factor > 1 else lam_work
    return lam, method


def jordan_partition(
    r: int,
    s: int,
    p: int,
    method: str = "auto",
    oracle_ceiling: int = DEFAULT_ORACLE_CEILING,
) -> JordanRecord:
    """Jordan partition of the tensor product of unipotent Jordan blocks
    of sizes r and s over a field of characteristic p (0 allowed).

    `method` selects the engine: "auto" applies every reduction and the
    cheapest applicable engine; "oracle", "recurrence" and "closed" force
    one engine and raise InapplicableMethodError when it cannot run.
    """
    if r < 1 or s < 1:
        raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
    if p != 0 and not is_prime(p):
        raise ValueError(f"p must be 0 or prime, got {p}")
    if method not in ("auto", "oracle", "recurrence", "closed"):
        raise ValueError(f"unknown method {method!r}")

    reductions: list[Reduction] = []
    if r > s:
        reductions.append(Reduction("swap-r-s", (r, s), (s, r)))
        r, s = s, r

    if p == 0:
        if method in ("oracle", "recurrence"):
            raise InapplicableMethodError(f"method {method!r} needs a prime p, got 0")
        lam = standard_partition(r, s)
        used = "char-zero"
    elif method == "oracle":
        lam = oracle_partition(r, s, p, ceiling=oracle_ceiling)
        used = "oracle"
    elif method == "recurrence":
        lam = recurrence_partition(r, s, p)
        used = "recurrence"
    elif method == "closed":
        s_star, dual, steps = canonicalize(r, s, p)
        reductions.extend(steps)
        found = closed_form(r, s_star, p)
        if found is None:
            raise InapplicableMethodError(f"no closed form applies to ({r},{s},{p})")
        eps_star, used = found
        eps = negative_reverse(eps_star) if dual else eps_star
        lam = Partition(tuple(s + e for e in eps.entries))
    else:
        lam, used = _epsilon_via_reductions(r, s, p, reductions)

    m = period_for_rank(p, r).m if p else 0
    rec = JordanRecord(
        r=r,
        s=s,
        p=p,
        m=m,
        lam=lam,
        epsilon=deviation(lam, s),
        method=used,
        reductions=tuple(reductions),
    )
    validate_jordan_record(rec)
    return rec
