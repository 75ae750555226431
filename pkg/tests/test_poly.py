import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from arboreal.errors import CapacityError, UnsupportedInput
from arboreal.poly import (
    Poly,
    Trinomial,
    _kronecker_mul,
    count_simple_roots,
    critical_points,
    disc_oracle,
    divmod_q,
    exact_div,
    from_roots,
    gcd,
    is_squarefree_modular,
    iterate,
    iterate_disc_formula,
    iterate_eval,
    rational_roots,
    resultant,
    squarefree_decomposition,
    trinomial_disc,
)

X = sympy.Symbol("x")

coeffs = st.lists(st.integers(-30, 30), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def to_sympy(f: Poly):
    return sum(sympy.Integer(a) * X**i for i, a in enumerate(f.c))


def sylvester_resultant(f: Poly, g: Poly) -> Fraction:
    """Determinant of the Sylvester matrix by fraction Gaussian elimination."""
    m, n = f.degree, g.degree
    fr, gr = list(reversed(f.c)), list(reversed(g.c))
    N = m + n
    M = []
    for i in range(n):
        M.append([Fraction(0)] * i + [Fraction(a) for a in fr] + [Fraction(0)] * (N - m - 1 - i))
    for i in range(m):
        M.append([Fraction(0)] * i + [Fraction(a) for a in gr] + [Fraction(0)] * (N - n - 1 - i))
    det = Fraction(1)
    for col in range(N):
        piv = next((r for r in range(col, N) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, N):
            if M[r][col]:
                k = M[r][col] / M[col][col]
                M[r] = [a - k * b for a, b in zip(M[r], M[col])]
    return det


@st.composite
def trinomials(draw, dmax=8, coeff=60):
    d = draw(st.integers(3, dmax))
    s = draw(st.integers(1, d - 1).filter(lambda s: math.gcd(d, s) == 1))
    A = draw(st.integers(-coeff, coeff).filter(bool))
    B = draw(st.integers(-coeff, coeff).filter(bool))
    return Trinomial(d, s, A, B)


# -- basic arithmetic -------------------------------------------------------

def test_normalisation_and_repr():
    f = Poly([Fraction(4, 2), 0, 0])
    assert f.c == (2,) and isinstance(f.c[0], int)
    assert Poly([]).is_zero()
    assert Poly((-6, 0, 6, 1)).degree == 3


@given(coeffs, coeffs)
def test_divmod_identity(a, b):
    f, g = Poly(a), Poly(b)
    q, r = divmod_q(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(coeffs, coeffs)
def test_exact_div_inverts_product(a, b):
    f, g = Poly(a), Poly(b)
    assert exact_div(f * g, g) == f


@given(st.lists(st.integers(-10**6, 10**6), min_size=48, max_size=90),
       st.lists(st.integers(-10**6, 10**6), min_size=48, max_size=90))
def test_kronecker_matches_schoolbook(a, b):
    naive = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            naive[i + j] += x * y
    assert _kronecker_mul(a, b)[: len(naive)] == naive


@given(coeffs, coeffs, st.integers(-20, 20))
def test_compose_is_evaluation(a, b, x):
    f, g = Poly(a), Poly(b)
    assert f.compose(g)(x) == f(g(x))


@given(coeffs)
def test_json_round_trip(a):
    f = Poly(a)
    assert Poly.from_json(f.to_json()) == f


@given(coeffs, coeffs)
def test_gcd_matches_sympy(a, b):
    f, g = Poly(a), Poly(b)
    h = gcd(f, g)
    expected = sympy.Poly(sympy.gcd(to_sympy(f), to_sympy(g)), X)
    assert h.degree == expected.degree()
    assert exact_div(f, h) is not None or h.degree == 0


# -- resultants and discriminants --------------------------------------------

@given(coeffs, coeffs)
def test_resultant_matches_sylvester(a, b):
    f, g = Poly(a), Poly(b)
    assume(f.degree >= 1 and g.degree >= 1)
    assert resultant(f, g) == sylvester_resultant(f, g)


@given(coeffs)
def test_disc_matches_sympy(a):
    f = Poly(a)
    assume(f.degree >= 2)
    assert disc_oracle(f) == sympy.discriminant(to_sympy(f), X)


@given(trinomials())
def test_trinomial_closed_form(t):
    assert trinomial_disc(t) == disc_oracle(t.poly)


def test_trinomial_fixed_values():
    assert trinomial_disc(Trinomial(3, 2, 6, -6)) == 4212
    assert trinomial_disc(Trinomial(3, 2, 7, -7)) == 8281 == 91**2
    assert disc_oracle(Poly((1, 0, 1))) == -4


def test_trinomial_rejects_bad_parameters():
    for args in [(2, 1, 1, 1), (3, 3, 1, 1), (3, 1, 0, 1), (3, 1, 1, 0)]:
        with pytest.raises(ValueError):
            Trinomial(*args)


PHI32 = Poly((-6, 0, 6, 1))
X2_DISC = 190846337132032268544  # disc of phi^2 for x^3 + 6x^2 - 6, via sympy


def test_iterate_discriminant_frozen():
    f2 = iterate(PHI32, 2)
    assert disc_oracle(f2) == X2_DISC
    assert iterate_disc_formula(PHI32, 2, 0) == X2_DISC
    assert sympy.discriminant(to_sympy(f2), X) == X2_DISC


@pytest.mark.parametrize("t", [0, 1, -5, Fraction(1, 2)])
@pytest.mark.parametrize("n", [1, 2])
def test_iterate_discriminant_formula(n, t):
    fn = iterate(PHI32, n) - t
    assert iterate_disc_formula(PHI32, n, t) == disc_oracle(fn)


def test_iterate_discriminant_other_maps():
    for f in [Poly((-7, 0, 7, 1)), Poly((2, 0, -9, 1)), Poly((1, 0, 1))]:
        for t in (0, 3):
            assert iterate_disc_formula(f, 2, t) == disc_oracle(iterate(f, 2) - t)


def test_iterate_degree_cap():
    assert iterate(PHI32, 2).degree == 9
    with pytest.raises(CapacityError):
        iterate(PHI32, 9)


@given(st.integers(-50, 50))
def test_iterate_eval_consistent(x):
    assert iterate(PHI32, 2)(x) == iterate_eval(PHI32, 2, x)


# -- roots and squarefreeness -----------------------------------------------

@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.lists(st.integers(1, 3), min_size=6, max_size=6))
def test_squarefree_decomposition(roots, mults):
    rs = sorted(set(roots))
    f = Poly([1])
    for r, m in zip(rs, mults):
        f = f * Poly((-r, 1)) ** m
    dec = squarefree_decomposition(f)
    prod = Poly([1])
    for g, m in dec:
        prod = prod * g**m
    assert prod.monic() == f.monic()
    assert sorted(m for g, m in dec for _ in range(g.degree)) == sorted(mults[: len(rs)])
    assert count_simple_roots(f) == sum(1 for m in mults[: len(rs)] if m == 1)
    assert is_squarefree_modular(f) == all(m == 1 for m in mults[: len(rs)])


def test_modular_squarefree_is_sound():
    assert is_squarefree_modular(iterate(PHI32, 3))
    assert not is_squarefree_modular(Poly((1, 2, 1)))


def test_rational_roots_and_critical_points():
    f = from_roots([Fraction(1, 2), -3, -3])
    assert rational_roots(f) == [(Fraction(-3), 2), (Fraction(1, 2), 1)]
    assert critical_points(PHI32) == [(Fraction(-4), 1), (Fraction(0), 1)]
    with pytest.raises(UnsupportedInput):
        critical_points(Poly((0, -2, 0, 1)))


def test_random_trinomials_fixed_seed():
    rng = random.Random(7)
    for _ in range(20):
        d = rng.randint(3, 8)
        s = rng.choice([s for s in range(1, d) if math.gcd(d, s) == 1])
        t = Trinomial(d, s, rng.randint(1, 99), -rng.randint(1, 99))
        assert trinomial_disc(t) == sympy.discriminant(to_sympy(t.poly), X)
