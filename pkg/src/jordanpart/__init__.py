"""Exact Jordan partitions of tensor products of unipotent Jordan blocks.

The Jordan canonical form of J_r (x) J_s over a field of characteristic
p splits into min(r, s) blocks whose sizes form a partition of r*s that
depends only on (r, s, p). This package computes that partition three
independent ways: a brute-force rank-profile oracle over F_p, a fast
number-theoretic recurrence driven by p-adic valuations of binomial
determinants, and closed forms behind periodicity/duality/scaling
reductions. A survey layer enumerates all deviation vectors for fixed r.
"""

from .arith import (
    PrimePower,
    binomial_mod_p,
    falling_valuation,
    is_prime,
    legendre_valuation,
    period_for_rank,
    primes_up_to,
)
from .delta import DeltaSequence, delta_det_mod_p, delta_sequence, delta_valuation, recurrence_partition
from .fastpath import (
    InapplicableMethodError,
    Reduction,
    canonicalize,
    class_representative,
    closed_form,
    jordan_partition,
    largest_part,
    p_multiple_reduce,
)
from .harness import verify_grid
from .oracle import (
    DEFAULT_ORACLE_CEILING,
    MonomialAlgebra,
    RankProfile,
    ResourceGuardError,
    oracle_partition,
    partition_from_ranks,
    rank_profile,
)
from .partitions import (
    DeviationVector,
    JordanRecord,
    Partition,
    deviation,
    k_multiple,
    negative_reverse,
    standard_deviation_vector,
    standard_partition,
    uniform_partition,
)
from .survey import (
    DeviationCensus,
    DeviationTable,
    check_bound,
    deviation_table,
    enumerate_deviation_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "PrimePower",
    "legendre_valuation",
    "falling_valuation",
    "binomial_mod_p",
    "period_for_rank",
    "primes_up_to",
    "is_prime",
    "Partition",
    "DeviationVector",
    "JordanRecord",
    "deviation",
    "negative_reverse",
    "k_multiple",
    "standard_partition",
    "uniform_partition",
    "standard_deviation_vector",
    "MonomialAlgebra",
    "RankProfile",
    "ResourceGuardError",
    "DEFAULT_ORACLE_CEILING",
    "rank_profile",
    "partition_from_ranks",
    "oracle_partition",
    "DeltaSequence",
    "delta_valuation",
    "delta_sequence",
    "delta_det_mod_p",
    "recurrence_partition",
    "Reduction",
    "InapplicableMethodError",
    "canonicalize",
    "closed_form",
    "largest_part",
    "p_multiple_reduce",
    "class_representative",
    "jordan_partition",
    "DeviationTable",
    "DeviationCensus",
    "deviation_table",
    "enumerate_deviation_vectors",
    "check_bound",
    "verify_grid",
]
