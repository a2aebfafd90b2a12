import pytest
from hypothesis import given, strategies as st

from jordanpart.partitions import (
    DeviationVector,
    JordanRecord,
    Partition,
    deviation,
    k_multiple,
    negative_reverse,
    standard_deviation_vector,
    standard_partition,
    uniform_partition,
    validate_jordan_record,
)


def deviation_vectors():
    # weakly decreasing, zero-sum: append the negated sum and sort
    return st.lists(st.integers(-9, 9), min_size=1, max_size=8).map(
        lambda xs: DeviationVector(tuple(sorted(xs + [-sum(xs)], reverse=True)))
    )


def partitions():
    return st.lists(st.integers(1, 30), min_size=1, max_size=8).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(())
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((3, 0))


def test_deviation_vector_validation():
    with pytest.raises(ValueError):
        DeviationVector((1, 1))  # does not sum to zero
    with pytest.raises(ValueError):
        DeviationVector((-1, 1))  # increasing


def test_deviation_examples():
    assert deviation(Partition((2, 2)), 2).entries == (0, 0)
    assert deviation(Partition((4, 2)), 3).entries == (1, -1)
    assert deviation(Partition((18, 18, 18, 14)), 17).entries == (1, 1, 1, -3)


def test_negative_reverse_examples():
    assert negative_reverse(DeviationVector((0, 0, 0))).entries == (0, 0, 0)
    assert negative_reverse(DeviationVector((3, -1, -1, -1))).entries == (1, 1, 1, -3)
    assert negative_reverse(DeviationVector((2, 0, -2))).entries == (2, 0, -2)


@given(deviation_vectors())
def test_negative_reverse_is_an_involution(eps):
    assert negative_reverse(negative_reverse(eps)) == eps


def test_k_multiple_examples():
    lam = Partition((4, 2))
    assert k_multiple(lam, 1) == lam
    assert k_multiple(lam, 2).parts == (8, 8, 4, 4)
    assert k_multiple(Partition((3,)), 3).parts == (9, 9, 9)


@given(partitions(), st.integers(1, 4), st.integers(1, 4))
def test_k_multiple_composes(lam, k1, k2):
    assert k_multiple(lam, k1 * k2) == k_multiple(k_multiple(lam, k1), k2)


@given(partitions(), st.integers(1, 5))
def test_k_multiple_shape(lam, k):
    scaled = k_multiple(lam, k)
    assert len(scaled) == k * len(lam)
    assert scaled.total == k * k * lam.total


def test_standard_partition_examples():
    assert standard_partition(1, 9).parts == (9,)
    assert standard_partition(3, 4).parts == (6, 4, 2)
    assert standard_partition(2, 3).parts == (4, 2)
    with pytest.raises(ValueError):
        standard_partition(4, 3)


def test_uniform_partition_examples():
    assert uniform_partition(1, 7).parts == (7,)
    assert uniform_partition(3, 3).parts == (3, 3, 3)
    assert uniform_partition(4, 8).parts == (8, 8, 8, 8)


@given(st.integers(1, 40), st.integers(0, 40))
def test_standard_and_uniform_deviations(r, extra):
    s = r + extra
    assert deviation(standard_partition(r, s), s) == standard_deviation_vector(r)
    assert deviation(uniform_partition(r, s), s).is_zero()


def test_render_matches_canonical_form():
    assert Partition((18, 18, 18, 14)).render() == "(18,18,18,14)"
    assert DeviationVector((1, 1, 1, -3)).render() == "(1,1,1,-3)"
    assert DeviationVector((0,)).render() == "(0)"


def test_jordan_record_consistency():
    lam = Partition((4, 2))
    eps = deviation(lam, 3)
    rec = JordanRecord(r=2, s=3, p=2, m=1, lam=lam, epsilon=eps, method="recurrence")
    validate_jordan_record(rec)
    with pytest.raises(ValueError):
        JordanRecord(r=2, s=3, p=2, m=1, lam=lam, epsilon=DeviationVector((0, 0)), method="recurrence")
    with pytest.raises(ValueError):
        JordanRecord(r=2, s=3, p=2, m=1, lam=lam, epsilon=eps, method="guesswork")


def test_validate_jordan_record_rejects_bad_shapes():
    lam = Partition((5, 1))  # sums to 6 but largest part exceeds r+s-1 = 4
    rec = JordanRecord(r=2, s=3, p=2, m=1, lam=lam, epsilon=deviation(lam, 3), method="oracle")
    with pytest.raises(AssertionError):
        validate_jordan_record(rec)
