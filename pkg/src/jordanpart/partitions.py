"""Partitions, deviation vectors, and the result envelope.

A Jordan partition for parameters (r, s) has exactly r parts summing to
r*s; its deviation vector is the partition minus the constant vector
(s, ..., s) and always sums to zero. Both are immutable values with a
canonical text rendering "(a,b,...)" used by the CLI and golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Partition",
    "DeviationVector",
    "JordanRecord",
    "deviation",
    "negative_reverse",
    "k_multiple",
    "standard_partition",
    "uniform_partition",
    "standard_deviation_vector",
    "validate_jordan_record",
]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("partition must have at least one part")
        if any(x < 1 for x in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def render(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True)
class DeviationVector:
    """Weakly decreasing integer vector summing to zero."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("deviation vector must be nonempty")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"entries must be weakly decreasing: {self.entries}")
        if sum(self.entries) != 0:
            raise ValueError(f"entries must sum to zero: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def render(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def deviation(lam: Partition, s: int) -> DeviationVector:
    """Deviation of a partition from the uniform vector (s, ..., s)."""
    return DeviationVector(tuple(x - s for x in lam.parts))


def negative_reverse(eps: DeviationVector) -> DeviationVector:
    """The involution (e_1, ..., e_r) -> (-e_r, ..., -e_1)."""
    return DeviationVector(tuple(-e for e in reversed(eps.entries)))


def k_multiple(lam: Partition, k: int) -> Partition:
    """Scale part sizes and multiplicities by k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out: list[int] = []
    for x in lam.parts:
        out.extend([k * x] * k)
    return Partition(tuple(out))


def standard_partition(r: int, s: int) -> Partition:
    """(s+r-1, s+r-3, ..., s-r+1): the characteristic-zero answer."""
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    return Partition(tuple(r + s + 1 - 2 * i for i in range(1, r + 1)))


def uniform_partition(r: int, s: int) -> Partition:
    """r copies of s."""
    if r < 1 or s < 1:
        raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
    return Partition((s,) * r)


def standard_deviation_vector(r: int) -> DeviationVector:
    """(r-1, r-3, ..., -(r-1)): deviation of the standard partition."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return DeviationVector(tuple(r + 1 - 2 * i for i in range(1, r + 1)))


@dataclass(frozen=True)
class JordanRecord:
    """Result envelope for one computed Jordan partition.

    r <= s after normalization; p = 0 means characteristic zero; m is the
    period exponent for (p, r) (0 when p = 0). `reductions` lists the
    symmetry steps that were applied before the terminal `method` ran.
    """

    r: int
    s: int
    p: int
    m: int
    lam: Partition
    epsilon: DeviationVector
    method: str
    reductions: tuple = field(default_factory=tuple)

    METHODS = ("oracle", "recurrence", "closed-form", "standard", "uniform", "char-zero")

    def __post_init__(self) -> None:
        if self.method not in self.METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if tuple(x - self.s for x in self.lam.parts) != self.epsilon.entries:
            raise ValueError("lambda and epsilon are inconsistent")


def validate_jordan_record(rec: JordanRecord) -> None:
    """Check the invariants every Jordan partition must satisfy:
    r parts, total rs, s <= lambda_1 <= r+s-1, |epsilon_i| <= r-1."""
    r, s = rec.r, rec.s
    if len(rec.lam) != r:
        raise AssertionError(f"expected {r} parts, got {len(rec.lam)}: {rec.lam.render()}")
    if rec.lam.total != r * s:
        raise AssertionError(f"parts must sum to {r * s}, got {rec.lam.total}")
    lam1 = rec.lam.parts[0]
    if not s <= lam1 <= r + s - 1:
        raise AssertionError(f"largest part {lam1} outside [{s}, {r + s - 1}]")
    if any(abs(e) > r - 1 for e in rec.epsilon.entries):
        raise AssertionError(f"deviation entries exceed r-1={r - 1}: {rec.epsilon.render()}")
