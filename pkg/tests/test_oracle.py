import pytest

from jordanpart.oracle import (
    MonomialAlgebra,
    RankProfile,
    ResourceGuardError,
    _echelon_rows,
    oracle_partition,
    partition_from_ranks,
    rank_profile,
)
from jordanpart.arith import binomial_mod_p
from jordanpart.partitions import Partition


def test_algebra_rejects_bad_parameters():
    with pytest.raises(ValueError):
        MonomialAlgebra(0, 3, 2)
    with pytest.raises(ValueError):
        MonomialAlgebra(2, 3, 4)


def test_apply_nilpotent_hand_examples():
    alg = MonomialAlgebra(2, 3, 2)
    assert alg.apply_nilpotent({}) == {}
    assert alg.apply_nilpotent({(1, 2): 1}) == {}  # top monomial dies
    one = alg.monomial(0, 0)
    xy = alg.apply_nilpotent(one)
    assert xy == {(1, 0): 1, (0, 1): 1}
    # (x+y)^2 = x^2 + 2xy + y^2 = y^2 in characteristic 2 with x^2 = 0
    assert alg.apply_nilpotent(xy) == {(0, 2): 1}


def test_power_expansion_examples():
    alg = MonomialAlgebra(2, 3, 2)
    assert alg.power_expansion(0) == {(0, 0): 1}
    assert alg.power_expansion(3) == {(1, 2): 1}  # coefficient C(3,1) = 3 is odd
    assert alg.power_expansion(2 + 3 - 1) == {}
    assert alg.power_expansion(10) == {}


@pytest.mark.parametrize("p", (2, 3, 5))
def test_power_expansion_matches_repeated_application(p):
    for r in range(1, 7):
        for s in range(r, 7):
            alg = MonomialAlgebra(r, s, p)
            vec = alg.power_expansion(0)
            for n in range(1, r + s + 1):
                vec = alg.apply_nilpotent(vec)
                assert vec == alg.power_expansion(n), (r, s, p, n)
            assert vec == {}


def test_annihilator_basis_examples():
    alg = MonomialAlgebra(2, 3, 2)
    w0, w1 = alg.annihilator_basis()
    assert w0 == {(1, 2): 1}
    assert w1 == {(1, 1): 1, (0, 2): 1}  # signs collapse mod 2
    for w in (w0, w1):
        assert alg.apply_nilpotent(w) == {}


@pytest.mark.parametrize("p", (2, 3, 5))
def test_annihilator_basis_spans_the_kernel(p):
    for r in range(1, 6):
        for s in range(r, 7):
            alg = MonomialAlgebra(r, s, p)
            basis = alg.annihilator_basis()
            assert len(basis) == r
            for w in basis:
                assert alg.apply_nilpotent(w) == {}
            mat = alg.vectors_to_matrix(basis)
            assert _echelon_rows(mat, p).shape[0] == r
            # kernel dimension equals rank drop at the first power
            profile = rank_profile(r, s, p)
            assert profile.ranks[0] - profile.ranks[1] == r


def test_rank_profile_examples():
    assert rank_profile(1, 4, 5).ranks == (4, 3, 2, 1, 0)
    assert rank_profile(2, 3, 2).ranks == (6, 4, 2, 1, 0)
    assert rank_profile(2, 2, 2).ranks == (4, 2, 0)


def test_rank_profile_validation():
    with pytest.raises(ValueError):
        RankProfile((4, 2))  # must end at 0
    with pytest.raises(ValueError):
        RankProfile((4, 4, 0))  # must strictly decrease
    with pytest.raises(ValueError):
        RankProfile((6, 3, 2, 0))  # differences must weakly decrease
    with pytest.raises(ValueError):
        RankProfile((4, 2, 0, 0))  # ends at the first 0


def test_partition_from_ranks_examples():
    assert partition_from_ranks(RankProfile((4, 3, 2, 1, 0))).parts == (4,)
    assert partition_from_ranks(RankProfile((6, 4, 2, 1, 0))).parts == (4, 2)
    assert partition_from_ranks(RankProfile((4, 2, 0))).parts == (2, 2)


def test_oracle_partition_examples():
    assert oracle_partition(2, 3, 2).parts == (4, 2)
    assert oracle_partition(3, 9, 3).parts == (9, 9, 9)
    assert oracle_partition(4, 17, 3).parts == (18, 18, 18, 14)


def test_oracle_ceiling_guard():
    with pytest.raises(ResourceGuardError):
        rank_profile(10, 11, 2, ceiling=100)
    with pytest.raises(ResourceGuardError):
        oracle_partition(10, 11, 2, ceiling=100)


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_oracle_shape_invariants(p):
    for r in range(1, 6):
        for s in range(r, 9):
            lam = oracle_partition(r, s, p)
            assert len(lam) == r
            assert lam.total == r * s
            assert s <= lam.parts[0] <= r + s - 1
            # largest part is the first vanishing power of the operator
            alg = MonomialAlgebra(r, s, p)
            assert alg.power_expansion(lam.parts[0]) == {}
            assert alg.power_expansion(lam.parts[0] - 1) != {}


@pytest.mark.parametrize("p", (2, 3, 5))
def test_largest_part_binomial_is_nonzero(p):
    # with n the largest part, C(n-1, r-1) is nonzero mod p
    for r in range(1, 6):
        for s in range(r, 9):
            lam1 = oracle_partition(r, s, p).parts[0]
            assert binomial_mod_p(lam1 - 1, r - 1, p) != 0


def test_oracle_accepts_swapped_arguments():
    # the algebra is symmetric in (r, s); parts count follows the smaller
    lam = oracle_partition(3, 2, 2)
    assert isinstance(lam, Partition)
    assert lam.parts == (4, 2)
