"""Cross-validation harness: engines against each other, symmetries
against theorems, over a parameter grid.

Each check is phrased against the engine that cannot trivially satisfy
it: equivalence pits the brute-force oracle against the recurrence and
the dispatcher; periodicity, duality, scaling, the uniform and standard
criteria are checked on the bare recurrence (which applies no
reductions); the largest-part formula is checked against the oracle's
partition. Grid cells fan out over a thread pool when requested; the
report order is independent of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .arith import period_for_rank
from .delta import recurrence_partition
from .fastpath import class_representative, jordan_partition, largest_part
from .oracle import DEFAULT_ORACLE_CEILING, oracle_partition
from .partitions import deviation, k_multiple, negative_reverse, standard_partition

__all__ = ["Mismatch", "VerifyReport", "verify_grid", "ORACLE_SCALING_DIM"]

# Scaled cells up to this dimension get the brute-force scaling check on
# top of the recurrence-based one.
ORACLE_SCALING_DIM = 300


@dataclass(frozen=True)
class Mismatch:
    check: str
    r: int
    s: int
    p: int
    left: str
    right: str


@dataclass(frozen=True)
class VerifyReport:
    r_max: int
    s_max: int
    primes: tuple[int, ...]
    cells: int
    checks: tuple[tuple[str, int], ...]  # (check name, cells examined)
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_cell(cell: tuple[int, int, int], ceiling: int) -> tuple[list[tuple[str, int]], list[Mismatch]]:
    r, s, p = cell
    counts: list[tuple[str, int]] = []
    bad: list[Mismatch] = []

    def miss(check: str, left: str, right: str) -> None:
        bad.append(Mismatch(check, r, s, p, left, right))

    lam_oracle = oracle_partition(r, s, p, ceiling=ceiling)
    lam_rec = recurrence_partition(r, s, p)
    record = jordan_partition(r, s, p)

    counts.append(("engine-equivalence", 1))
    if lam_oracle != lam_rec:
        miss("engine-equivalence:oracle-vs-recurrence", lam_oracle.render(), lam_rec.render())
    if lam_oracle != record.lam:
        miss("engine-equivalence:oracle-vs-dispatcher", lam_oracle.render(), record.lam.render())

    eps = deviation(lam_rec, s)
    q = period_for_rank(p, r).q

    counts.append(("periodicity", 1))
    eps_shift = deviation(recurrence_partition(r, s + q, p), s + q)
    if eps_shift != eps:
        miss("periodicity", eps.render(), eps_shift.render())

    counts.append(("duality", 1))
    s_dual = class_representative(-s, r, q)
    eps_dual = deviation(recurrence_partition(r, s_dual, p), s_dual)
    if eps_dual != negative_reverse(eps):
        miss("duality", negative_reverse(eps).render(), eps_dual.render())

    counts.append(("p-multiple-scaling", 1))
    lam_scaled = recurrence_partition(p * r, p * s, p)
    if lam_scaled != k_multiple(lam_rec, p):
        miss("p-multiple-scaling", k_multiple(lam_rec, p).render(), lam_scaled.render())
    if p * r * p * s <= min(ORACLE_SCALING_DIM, ceiling):
        lam_scaled_oracle = oracle_partition(p * r, p * s, p, ceiling=ceiling)
        if lam_scaled_oracle != k_multiple(lam_rec, p):
            miss("p-multiple-scaling:oracle", k_multiple(lam_rec, p).render(), lam_scaled_oracle.render())

    counts.append(("uniform-iff", 1))
    if eps.is_zero() != (s % q == 0):
        miss("uniform-iff", f"eps_zero={eps.is_zero()}", f"s%q={s % q}")

    counts.append(("standard-criterion", 1))
    forbidden = {t % p for t in range(-(r - 2), r - 1)}
    if s % p not in forbidden and lam_rec != standard_partition(r, s):
        miss("standard-criterion", standard_partition(r, s).render(), lam_rec.render())

    counts.append(("largest-part", 1))
    lam1, mult = largest_part(r, s, p)
    if lam_oracle.parts[0] != lam1 or lam_oracle.multiplicity(lam1) != mult:
        miss(
            "largest-part",
            f"({lam1},{mult})",
            f"({lam_oracle.parts[0]},{lam_oracle.multiplicity(lam_oracle.parts[0])})",
        )

    counts.append(("bounds", 1))
    if not (s <= lam_oracle.parts[0] <= r + s - 1) or any(abs(e) > r - 1 for e in eps.entries):
        miss("bounds", f"[{s},{r + s - 1}] / |e|<={r - 1}", f"{lam_oracle.render()} {eps.render()}")

    return counts, bad


def verify_grid(
    r_max: int,
    s_max: int,
    primes: tuple[int, ...],
    ceiling: int = DEFAULT_ORACLE_CEILING,
    threads: int = 1,
) -> VerifyReport:
    """Run every check over the grid 1 <= r <= min(s, r_max), s <= s_max,
    p in primes, skipping cells whose r*s exceeds the ceiling."""
    if r_max < 1 or s_max < 1:
        raise ValueError("r_max and s_max must be positive")
    cells = [
        (r, s, p)
        for p in sorted(primes)
        for s in range(1, s_max + 1)
        for r in range(1, min(r_max, s) + 1)
        if r * s <= ceiling
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: _check_cell(c, ceiling), cells))
    else:
        results = [_check_cell(c, ceiling) for c in cells]
    totals: dict[str, int] = {}
    mismatches: list[Mismatch] = []
    for counts, bad in results:
        for name, n in counts:
            totals[name] = totals.get(name, 0) + n
        mismatches.extend(bad)
    return VerifyReport(
        r_max=r_max,
        s_max=s_max,
        primes=tuple(sorted(primes)),
        cells=len(cells),
        checks=tuple(sorted(totals.items())),
        mismatches=tuple(mismatches),
    )
