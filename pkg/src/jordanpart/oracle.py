"""Ground-truth brute force over F_p.

Realizes the rs-dimensional algebra F_p[x, y] / (x^r, y^s) with monomial
basis x^i y^j (0 <= i < r, 0 <= j < s) and the nilpotent multiplication
operator v -> v*(x+y). The tensor product of two unipotent Jordan blocks
induces a similar transformation, so the Jordan partition can be read
off the rank profile of the nilpotent operator's powers: the
multiplicity of part t is ranks[t-1] - 2*ranks[t] + ranks[t+1].

Vectors are sparse dicts mapping (i, j) -> nonzero residue mod p. The
rank profile is computed by repeatedly applying the sparse operator to a
spanning set and row-reducing over F_p (dense elimination, numpy).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import is_prime
from .partitions import Partition

__all__ = [
    "ResourceGuardError",
    "DEFAULT_ORACLE_CEILING",
    "MonomialAlgebra",
    "RankProfile",
    "rank_profile",
    "partition_from_ranks",
    "oracle_partition",
]

AlgebraVector = dict[tuple[int, int], int]

DEFAULT_ORACLE_CEILING = 20_000


class ResourceGuardError(Exception):
    """A brute-force computation exceeded the configured size ceiling."""


class MonomialAlgebra:
    """F_p[x, y] / (x^r, y^s) with the monomial basis x^i y^j."""

    def __init__(self, r: int, s: int, p: int):
        if r < 1 or s < 1:
            raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.r = r
        self.s = s
        self.p = p
        self.dim = r * s

    def monomial(self, i: int, j: int, coeff: int = 1) -> AlgebraVector:
        if not (0 <= i < self.r and 0 <= j < self.s):
            raise ValueError(f"monomial x^{i} y^{j} out of range")
        c = coeff % self.p
        return {(i, j): c} if c else {}

    def apply_nilpotent(self, v: AlgebraVector) -> AlgebraVector:
        """Multiply by x + y: x^i y^j -> x^{i+1} y^j + x^i y^{j+1}, with
        out-of-range monomials deleted."""
        out: AlgebraVector = {}
        for (i, j), c in v.items():
            if i + 1 < self.r:
                out[(i + 1, j)] = (out.get((i + 1, j), 0) + c) % self.p
            if j + 1 < self.s:
                out[(i, j + 1)] = (out.get((i, j + 1), 0) + c) % self.p
        return {k: c for k, c in out.items() if c}

    def power_expansion(self, n: int) -> AlgebraVector:
        """(x+y)^n, i.e. sum of C(n,i) x^i y^{n-i} over the in-range i.

        Empty (zero vector) whenever n >= r + s - 1.
        """
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        out: AlgebraVector = {}
        for i in range(max(0, n - self.s + 1), min(n, self.r - 1) + 1):
            c = math.comb(n, i) % self.p
            if c:
                out[(i, n - i)] = c
        return out

    def annihilator_basis(self) -> list[AlgebraVector]:
        """Basis w_0, ..., w_{r-1} of the kernel of multiplication by x+y:
        w_i = sum_{j=0}^{i} (-1)^j x^{r-1-j} y^{s-1-i+j}. Needs r <= s."""
        if self.r > self.s:
            raise ValueError(f"need r <= s, got r={self.r}, s={self.s}")
        basis = []
        for i in range(self.r):
            w: AlgebraVector = {}
            for j in range(i + 1):
                c = (-1) ** j % self.p
                if c:
                    w[(self.r - 1 - j, self.s - 1 - i + j)] = c
            basis.append(w)
        return basis

    def vectors_to_matrix(self, vectors: list[AlgebraVector]) -> np.ndarray:
        """Stack sparse vectors as rows of a dense (len, r*s) array."""
        mat = np.zeros((len(vectors), self.dim), dtype=np.int64)
        for row, v in enumerate(vectors):
            for (i, j), c in v.items():
                mat[row, i * self.s + j] = c % self.p
        return mat


@dataclass(frozen=True)
class RankProfile:
    """Dimensions of the images of successive powers of a nilpotent
    operator: ranks[k] = dim(im N^k), ending at the first 0."""

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        rk = self.ranks
        if len(rk) < 2 or rk[0] < 1:
            raise ValueError(f"profile must start positive and reach 0: {rk}")
        if rk[-1] != 0 or any(x <= 0 for x in rk[:-1]):
            raise ValueError(f"profile must end at its first 0: {rk}")
        if any(a <= b for a, b in zip(rk, rk[1:])):
            raise ValueError(f"ranks must strictly decrease: {rk}")
        diffs = [a - b for a, b in zip(rk, rk[1:])] + [rk[-1]]
        if any(d1 < d2 for d1, d2 in zip(diffs, diffs[1:])):
            raise ValueError(f"rank differences must weakly decrease: {rk}")


def _echelon_rows(mat: np.ndarray, p: int) -> np.ndarray:
    """Row echelon form over F_p; returns only the nonzero rows."""
    mat = mat % p
    n_rows, n_cols = mat.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivots = np.nonzero(mat[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank] = mat[rank] * inv % p
        below = mat[rank + 1 :, col]
        if below.any():
            mat[rank + 1 :] = (mat[rank + 1 :] - np.outer(below, mat[rank])) % p
        rank += 1
    return mat[:rank]


def _apply_operator_batch(grids: np.ndarray, p: int) -> np.ndarray:
    """Apply multiplication by x+y to a batch of coefficient grids of
    shape (n, r, s): shift down the x axis plus shift down the y axis."""
    out = np.zeros_like(grids)
    out[:, 1:, :] += grids[:, :-1, :]
    out[:, :, 1:] += grids[:, :, :-1]
    return out % p


def rank_profile(r: int, s: int, p: int, ceiling: int = DEFAULT_ORACLE_CEILING) -> RankProfile:
    """Rank profile of multiplication by x+y on F_p[x,y]/(x^r, y^s).

    Images of successive powers are spanned by repeatedly applying the
    (sparse) operator to an echelonized spanning set, so the working set
    shrinks as the rank drops. Guarded by `ceiling` on the dimension rs.
    """
    algebra = MonomialAlgebra(r, s, p)
    dim = algebra.dim
    if dim > ceiling:
        raise ResourceGuardError(f"r*s = {dim} exceeds the oracle ceiling {ceiling}")
    ranks = [dim]
    rows = np.eye(dim, dtype=np.int64)
    while ranks[-1] > 0:
        grids = rows.reshape(-1, r, s)
        rows = _apply_operator_batch(grids, p).reshape(-1, dim)
        rows = _echelon_rows(rows, p)
        ranks.append(rows.shape[0])
    return RankProfile(tuple(ranks))


def partition_from_ranks(profile: RankProfile) -> Partition:
    """Partition whose nilpotent normal form has the given rank profile:
    part t occurs ranks[t-1] - 2*ranks[t] + ranks[t+1] times."""
    rk = list(profile.ranks) + [0]
    parts: list[int] = []
    for t in range(len(profile.ranks) - 1, 0, -1):
        mult = rk[t - 1] - 2 * rk[t] + rk[t + 1]
        parts.extend([t] * mult)
    out = Partition(tuple(sorted(parts, reverse=True)))
    if out.total != rk[0]:
        raise AssertionError(f"parts sum to {out.total}, expected {rk[0]}")
    return out


def oracle_partition(r: int, s: int, p: int, ceiling: int = DEFAULT_ORACLE_CEILING) -> Partition:
    """Jordan partition of the tensor product of unipotent blocks of sizes
    r and s over F_p, computed by brute-force linear algebra."""
    lam = partition_from_ranks(rank_profile(r, s, p, ceiling))
    if len(lam) != min(r, s) or lam.total != r * s:
        raise AssertionError(f"oracle produced invalid partition {lam.render()} for ({r},{s},{p})")
    return lam
