import math
import random

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from arboreal.exact import small_primes
from arboreal.finite_field import (
    _frobenius_rows,
    cycle_type,
    eta_from_congruences,
    factor_shape,
    fp_distinct_degree,
    fp_factor,
    fp_is_irreducible,
    fp_monic,
    fp_mul,
    fp_mulmod,
    fp_reduce,
    fp_squarefree,
    shape_check,
)
from arboreal.poly import Poly, Trinomial, iterate, trinomial_disc

X = sympy.Symbol("x")
PRIMES = [3, 5, 7, 11, 13, 17, 101, 65537]


def sympy_shape(coeffs, p):
    f = sympy.Poly(list(reversed(coeffs)), X, modulus=p)
    _, facs = f.factor_list()
    return sorted((g.degree(), m) for g, m in facs)


def product(factors, p):
    out = [1]
    for g, m in factors:
        for _ in range(m):
            out = fp_mul(out, g, p)
    return out


polys_mod = st.tuples(
    st.sampled_from(PRIMES),
    st.lists(st.integers(0, 10**6), min_size=2, max_size=12),
).map(lambda t: (t[0], [c % t[0] for c in t[1][:-1]] + [1]))


@given(polys_mod)
def test_factorisation_recombines(pf):
    p, f = pf
    facs = fp_factor(f, p, seed=1)
    assert product(facs, p) == fp_monic(f, p)
    assert all(fp_is_irreducible(g, p) for g, _ in facs)


@given(polys_mod)
def test_factor_shape_matches_sympy(pf):
    p, f = pf
    assert list(factor_shape(f, p).pattern) == sympy_shape(f, p)


@given(polys_mod, st.integers(0, 1000))
def test_factorisation_independent_of_seed(pf, seed):
    p, f = pf
    assert fp_factor(f, p, seed) == fp_factor(f, p, 0)


@given(polys_mod)
def test_frobenius_rows_brute_force(pf):
    p, f = pf
    assume(len(f) > 2)
    rows = _frobenius_rows(f, p)
    # x^(jp) by repeated multiplication by x.
    cur = [1]
    for j in range(len(f) - 1):
        assert rows[j] == cur
        for _ in range(p if p < 200 else 0):
            cur = fp_mulmod(cur, [0, 1], f, p)
        if p >= 200:
            break


@given(polys_mod)
def test_squarefree_parts(pf):
    p, f = pf
    sq = fp_squarefree(f, p)
    assert product(sq, p) == fp_monic(f, p)
    for g, _ in sq:
        assert [m for _, m in fp_factor(g, p)] == [1] * len(fp_factor(g, p))


@given(polys_mod)
def test_distinct_degree_products(pf):
    p, f = pf
    facs = fp_factor(f, p)
    if any(m > 1 for _, m in facs):
        return
    for g, k in fp_distinct_degree(fp_monic(f, p), p):
        assert all(len(h) - 1 == k for h, _ in fp_factor(g, p))


def test_small_examples():
    phi = Poly((-6, 0, 6, 1))
    assert factor_shape(phi, 13).pattern == ((1, 1), (1, 2))
    facs = fp_factor(fp_reduce(phi, 13), 13)
    assert ([4, 1], 2) in facs and ([11, 1], 1) in facs
    assert cycle_type(phi, 5) == (2, 1)
    assert cycle_type(phi, 13) is None
    assert cycle_type(Poly((-1, 0, 1)), 7) == (1, 1)
    with pytest.raises(ValueError):
        fp_factor([1, 1], 2)
    with pytest.raises(ValueError):
        cycle_type(Poly((1, 0, 7)), 7)


@given(st.sampled_from([p for p in small_primes(400) if p > 2]),
       st.lists(st.integers(0, 400), min_size=3, max_size=10))
def test_cycle_type_matches_sympy(p, c):
    f = [x % p for x in c[:-1]] + [1]
    ct = cycle_type(f, p)
    shape = sympy_shape(f, p)
    if any(m > 1 for _, m in shape):
        assert ct is None
    else:
        assert sorted(ct) == sorted(d for d, _ in shape)


def test_cycle_type_of_iterate_sums_to_degree():
    f2 = iterate(Poly((-6, 0, 6, 1)), 2)
    for p in small_primes(300)[1:]:
        ct = cycle_type(f2, p)
        assert ct is None or sum(ct) == 9


# -- ramified trinomial shape -------------------------------------------------

def test_shape_verdicts():
    t = Trinomial(3, 2, 6, -6)
    v = shape_check(t, 13)
    assert v.kind == "ramified" and v.eta == 9
    assert shape_check(t, 5).kind == "unramified"
    assert shape_check(t, 2).kind == "violated"
    assert shape_check(t, 3).reason == "p | AB"
    with pytest.raises(ValueError):
        shape_check(t, 4)


def ramified_cases(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(3, 8)
        s = rng.choice([s for s in range(1, d) if math.gcd(d, s) == 1])
        t = Trinomial(d, s, rng.choice([-1, 1]) * rng.randint(1, 300), rng.choice([-1, 1]) * rng.randint(1, 300))
        disc = trinomial_disc(t)
        bad = t.A * t.B * d * s * (d - s)
        for p in small_primes(3000)[1:]:
            if disc % p == 0 and bad % p:
                out.append((t, p))
                break
    return out


@pytest.mark.parametrize("t,p", ramified_cases(25, seed=11))
def test_ramified_shape_against_sympy(t, p):
    v = shape_check(t, p)
    assert v.kind == "ramified"
    f = fp_reduce(t.poly, p)
    # eta is a root of f and f' mod p, by direct evaluation.
    assert sum(a * pow(v.eta, i, p) for i, a in enumerate(f)) % p == 0
    shape = sympy_shape(f, p)
    assert [(deg, m) for deg, m in shape if m > 1] == [(1, 2)]
    assert v.eta == eta_from_congruences(t, p)
    assert pow(v.eta, t.d - t.s, p) == (-t.s * t.A * pow(t.d, -1, p)) % p
