"""Valuations of the coefficient-matrix determinants and the recurrence.

For r <= s there is a sequence of integer determinants delta_0, ...,
delta_r (delta_0 = delta_r = 1) whose vanishing pattern mod p determines
the Jordan partition. After cancellation the determinant is a ratio of
falling factorials,

    delta_i = prod_{t=s}^{r+s-1-i} t^(i_) / prod_{t=i}^{r-1} t^(i_)

(t^(i_) the falling factorial of length i), so its p-adic valuation is a
difference of Legendre sums and the integer itself is never formed. The
partition then comes out of a reverse-order recurrence: walking i from r
down to 1, a part is r+s-2i+d(i) when delta_i is nonzero mod p (d(i) the
gap down to the next nonzero delta), and repeats the previous part when
delta_i vanishes.

The i x i determinant itself, reduced mod p, is kept as an independent
cross-check of the valuation formula (entries are Lucas binomials, the
determinant is done by elimination over F_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import binomial_mod_p, falling_valuation, is_prime
from .partitions import Partition

__all__ = [
    "DeltaSequence",
    "delta_valuation",
    "delta_sequence",
    "delta_det_mod_p",
    "recurrence_partition",
]


def _check_params(r: int, s: int, p: int) -> None:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r > s:
        raise ValueError(f"need r <= s, got r={r}, s={s}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class DeltaSequence:
    """p-adic valuations of delta_0 .. delta_r for fixed (r, s, p)."""

    r: int
    s: int
    p: int
    valuations: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.valuations) != self.r + 1:
            raise ValueError("need one valuation per index 0..r")
        if self.valuations[0] != 0 or self.valuations[-1] != 0:
            raise ValueError("delta_0 and delta_r are 1, their valuations must be 0")
        if any(v < 0 for v in self.valuations):
            raise ValueError("valuations of integers are nonnegative")

    def nonzero_mod_p(self, i: int) -> bool:
        return self.valuations[i] == 0


def delta_valuation(r: int, s: int, p: int, i: int) -> int:
    """nu_p(delta_i) via Legendre sums; 0 at the endpoints i = 0 and i = r."""
    _check_params(r, s, p)
    if not 0 <= i <= r:
        raise ValueError(f"need 0 <= i <= {r}, got i={i}")
    num = sum(falling_valuation(t, i, p) for t in range(s, r + s - i))
    den = sum(falling_valuation(t, i, p) for t in range(i, r))
    val = num - den
    if val < 0:
        raise AssertionError(f"delta_{i}({r},{s}) got negative valuation {val}")
    return val


@lru_cache(maxsize=65536)
def _valuations(r: int, s: int, p: int) -> tuple[int, ...]:
    return tuple(delta_valuation(r, s, p, i) for i in range(r + 1))


def delta_sequence(r: int, s: int, p: int) -> DeltaSequence:
    """All valuations nu_p(delta_i) for i = 0..r."""
    _check_params(r, s, p)
    return DeltaSequence(r, s, p, _valuations(r, s, p))


def delta_det_mod_p(r: int, s: int, p: int, i: int) -> int:
    """delta_i mod p straight from its i x i binomial matrix, whose (j, k)
    entry is C(s+r-2i, s-i+j-k); independent of the valuation route."""
    _check_params(r, s, p)
    if not 0 <= i <= r:
        raise ValueError(f"need 0 <= i <= {r}, got i={i}")
    if i == 0:
        return 1
    n = s + r - 2 * i
    mat = np.empty((i, i), dtype=np.int64)
    for j in range(i):
        for k in range(i):
            mat[j, k] = binomial_mod_p(n, s - i + j - k, p)
    return _det_mod_p(mat, p)


def _det_mod_p(mat: np.ndarray, p: int) -> int:
    """Determinant over F_p by elimination, tracking pivots and row swaps."""
    mat = mat % p
    n = mat.shape[0]
    det = 1
    for col in range(n):
        pivots = np.nonzero(mat[col:, col])[0]
        if pivots.size == 0:
            return 0
        piv = col + int(pivots[0])
        if piv != col:
            mat[[col, piv]] = mat[[piv, col]]
            det = -det
        pivot = int(mat[col, col])
        det = det * pivot % p
        if col + 1 < n:
            inv = pow(pivot, p - 2, p)
            factors = mat[col + 1 :, col] * inv % p
            mat[col + 1 :] = (mat[col + 1 :] - np.outer(factors, mat[col])) % p
    return det % p


def recurrence_partition(r: int, s: int, p: int) -> Partition:
    """Jordan partition from the delta vanishing pattern alone."""
    seq = delta_sequence(r, s, p)
    nonzero = [seq.nonzero_mod_p(i) for i in range(r + 1)]
    return _partition_from_pattern(r, s, nonzero)


def _partition_from_pattern(r: int, s: int, nonzero: list[bool]) -> Partition:
    """Reverse-order recurrence on the vanishing pattern of delta_0..delta_r.

    With every delta nonzero this collapses to parts r+s+1-2i, the
    characteristic-zero (standard) answer.
    """
    if len(nonzero) != r + 1 or not nonzero[0] or not nonzero[r]:
        raise ValueError("pattern must cover 0..r with delta_0 and delta_r nonzero")
    lam = [0] * (r + 2)  # 1-indexed; lam[r+1] unused sentinel
    for i in range(r, 0, -1):
        if nonzero[i]:
            d = 1
            while not nonzero[i - d]:
                d += 1
            lam[i] = r + s - 2 * i + d
        else:
            lam[i] = lam[i + 1]
    out = Partition(tuple(lam[1 : r + 1]))
    if out.total != r * s:
        raise AssertionError(f"recurrence output {out.render()} does not sum to {r * s}")
    return out
