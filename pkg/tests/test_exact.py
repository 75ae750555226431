import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from arboreal.exact import (
    INF,
    FactorBudget,
    bezout,
    digits,
    divisors,
    factor,
    height,
    is_perfect_square,
    is_prime,
    is_probable_prime,
    is_rational_square,
    mobius,
    rational_sqrt,
    small_primes,
    split_power,
    square_root,
    strip_support,
    support,
    valuation,
)

big = st.integers(min_value=0, max_value=10**80)


@given(big)
def test_square_of_anything_is_square(n):
    assert is_perfect_square(n * n)
    assert square_root(n * n) == n


@given(st.integers(min_value=1, max_value=10**80))
def test_square_plus_one_is_not_square(n):
    assert not is_perfect_square(n * n + 1)
    assert square_root(n * n + 1) is None


def test_negative_is_not_square():
    assert not is_perfect_square(-4)
    assert is_perfect_square(0)


def test_rational_square():
    assert rational_sqrt(Fraction(8281, 9)) == Fraction(91, 3)
    assert is_rational_square(Fraction(4, 9))
    assert not is_rational_square(Fraction(2, 9))
    assert not is_rational_square(Fraction(-4, 9))


@given(st.integers(min_value=-10**6, max_value=10**6))
def test_primality_matches_sympy(n):
    assert is_prime(n) == (n > 1 and sympy.isprime(n))


def test_primality_large():
    m127 = 2**127 - 1
    assert is_probable_prime(m127)
    assert not is_probable_prime(m127 * (2**61 - 1))
    # Strong pseudoprime to many small bases.
    assert not is_prime(3215031751)
    assert small_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(min_value=1, max_value=10**30), st.sampled_from([2, 3, 5, 7, 13]))
def test_valuation_splits(n, p):
    e, m = split_power(n, p)
    assert n == p**e * m and m % p
    assert valuation(n, p) == e


def test_valuation_edge_cases():
    assert valuation(0, 3) == INF
    assert valuation(Fraction(7, 27), 3) == -3
    assert valuation(-96, 2) == 5


@given(st.integers(min_value=-10**18, max_value=10**18).filter(lambda n: n != 0))
def test_factor_multiplies_back(n):
    fm = factor(n)
    assert fm.value == n
    assert fm.complete
    expected = sympy.factorint(abs(n))
    got = fm.as_dict()
    if fm.cofactor_status == "probable-prime":
        got[abs(fm.cofactor)] = 1
    assert got == expected


def test_factor_known_values():
    assert factor(21626).as_dict() == {2: 1, 11: 1, 983: 1}
    assert factor(4212).as_dict() == {2: 2, 3: 4, 13: 1}
    assert support(251) == {251}
    # Two 30-bit primes: within the rho budget.
    p, q = 1073741827, 1073741831
    assert factor(p * q).as_dict() == {p: 1, q: 1}


def test_factor_budget_exhaustion_is_reported():
    p, q = 2**61 - 1, 2**89 - 1
    fm = factor(p * q, FactorBudget(trial_bound=100, rho_iterations=10))
    assert fm.value == p * q
    assert not fm.complete


def test_strip_support():
    stripped, removed = strip_support(2**5 * 3**2 * 10813, [2, 3])
    assert stripped == 10813
    assert removed.as_dict() == {2: 5, 3: 2}
    with pytest.raises(ValueError):
        strip_support(0, [2])


@given(st.integers(min_value=1, max_value=5000))
def test_mobius_and_divisors(n):
    assert mobius(n) == sympy.mobius(n)
    assert divisors(n) == sympy.divisors(n)
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_bezout(a, b):
    if a == b == 0:
        with pytest.raises(ValueError):
            bezout(a, b)
        return
    g, x, y = bezout(a, b)
    assert g == math.gcd(a, b) and a * x + b * y == g


def test_height_and_digits():
    assert height(Fraction(-14, 3))[0] == 14
    assert height(0)[0] == 1
    for n in (1, 9, 10, 99, 100, 99999, 2**64, 10**400, 10**400 - 1, 10**5000):
        assert digits(n) == len(str(n))
