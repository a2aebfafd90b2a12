import math

import pytest
from hypothesis import given, strategies as st

from jordanpart.arith import (
    PrimePower,
    binomial_mod_p,
    falling_valuation,
    is_prime,
    legendre_valuation,
    period_for_rank,
    primes_up_to,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def factorial_valuation_direct(n, p):
    # independent oracle: factor every term of n! separately
    total = 0
    for i in range(2, n + 1):
        while i % p == 0:
            total += 1
            i //= p
    return total


def test_legendre_examples():
    assert legendre_valuation(0, 5) == 0
    assert legendre_valuation(10, 2) == 8
    assert legendre_valuation(9, 3) == 4


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_legendre_against_direct_factorization(p):
    for n in range(0, 400):
        assert legendre_valuation(n, p) == factorial_valuation_direct(n, p)


def test_falling_examples():
    assert falling_valuation(5, 0, 3) == 0
    assert falling_valuation(6, 2, 2) == 1
    assert falling_valuation(9, 3, 3) == 2


def test_falling_rejects_n_less_than_i():
    with pytest.raises(ValueError):
        falling_valuation(2, 3, 5)


@pytest.mark.parametrize("p", PRIMES)
def test_falling_against_direct_product(p):
    for n in range(0, 40):
        for i in range(0, n + 1):
            product = math.prod(range(n - i + 1, n + 1)) if i else 1
            expect = 0
            while product % p == 0:
                expect += 1
                product //= p
            assert falling_valuation(n, i, p) == expect


def test_binomial_examples():
    assert binomial_mod_p(9, 0, 7) == 1
    assert binomial_mod_p(7, 3, 2) == 1
    assert binomial_mod_p(4, 1, 2) == 0
    assert binomial_mod_p(5, -1, 3) == 0
    assert binomial_mod_p(5, 6, 3) == 0


@pytest.mark.parametrize("p", PRIMES)
def test_binomial_against_big_integers(p):
    for n in range(0, 120):
        for k in range(0, n + 1):
            assert binomial_mod_p(n, k, p) == math.comb(n, k) % p


@given(st.integers(0, 3000), st.integers(-10, 3100), st.sampled_from(PRIMES))
def test_kummer_cross_check(n, k, p):
    residue = binomial_mod_p(n, k, p)
    if 0 <= k <= n:
        val = legendre_valuation(n, p) - legendre_valuation(k, p) - legendre_valuation(n - k, p)
        assert val >= 0
        assert (residue == 0) == (val > 0)
    else:
        assert residue == 0


def test_period_examples():
    assert period_for_rank(3, 4) == PrimePower(3, 2, 9)
    assert period_for_rank(7, 1) == PrimePower(7, 0, 1)
    assert period_for_rank(2, 3) == PrimePower(2, 2, 4)


@pytest.mark.parametrize("p", PRIMES)
def test_period_brackets_rank(p):
    for r in range(1, 300):
        pp = period_for_rank(p, r)
        assert pp.q == p**pp.m >= r
        assert (pp.m == 0) == (r == 1)
        if r >= 2:
            assert p ** (pp.m - 1) < r <= pp.q


def test_period_rejects_bad_input():
    with pytest.raises(ValueError):
        period_for_rank(2, 0)
    with pytest.raises(ValueError):
        period_for_rank(1, 4)


def test_prime_power_consistency_enforced():
    with pytest.raises(ValueError):
        PrimePower(3, 2, 8)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]


def test_is_prime_small():
    assert [n for n in range(60) if is_prime(n)] == primes_up_to(59)
    assert not is_prime(221)  # 13 * 17
    assert is_prime(223)
