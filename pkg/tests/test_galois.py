from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from arboreal.errors import CapacityError
from arboreal.galois import (
    CycleTypeDistribution,
    PermGroup,
    class_cycle_distribution,
    compose,
    enumerate_group,
    exact_cycle_distribution,
    frobenius_distribution,
    identity,
    index2_candidate,
    inverse,
    perm_cycle_type,
    symmetric_group,
    total_variation,
    trivial_group,
    wreath_generators,
    wreath_order,
)
from arboreal.poly import Poly

perms9 = st.permutations(list(range(9))).map(tuple)


@given(perms9, perms9, perms9)
def test_permutation_algebra(a, b, c):
    assert compose(a, compose(b, c)) == compose(compose(a, b), c)
    assert compose(a, inverse(a)) == identity(9)
    assert perm_cycle_type(compose(compose(b, a), inverse(b))) == perm_cycle_type(a)
    assert sum(perm_cycle_type(a)) == 9


@pytest.mark.parametrize("d,n,order", [(2, 1, 2), (2, 2, 8), (3, 1, 6), (3, 2, 1296), (2, 3, 128)])
def test_wreath_orders(d, n, order):
    assert wreath_order(d, n) == order
    assert wreath_generators(d, n).order == order


def block_preserving(top_even: bool):
    """Brute force: permutations of 9 points mapping blocks {3i,3i+1,3i+2} to blocks."""
    out = set()
    for p in permutations(range(9)):
        blocks = []
        ok = True
        for b in range(3):
            imgs = {p[3 * b + j] // 3 for j in range(3)}
            if len(imgs) != 1:
                ok = False
                break
            blocks.append(imgs.pop())
        if ok and (not top_even or perm_cycle_type(tuple(blocks)) in [(1, 1, 1), (3,)]):
            out.add(p)
    return out


@pytest.fixture(scope="module")
def groups():
    W = wreath_generators(3, 2)
    H = index2_candidate()
    return W, H, exact_cycle_distribution(W), exact_cycle_distribution(H)


def test_wreath_matches_block_stabiliser(groups):
    W, H, _, _ = groups
    assert set(enumerate_group(W)) == block_preserving(False)
    assert set(enumerate_group(H)) == block_preserving(True)
    assert H.order == 648


def test_group_closure(groups):
    _, H, _, _ = groups
    elems = set(enumerate_group(H))
    sample = list(elems)[:40]
    for a in sample:
        assert inverse(a) in elems
        for b in sample:
            assert compose(a, b) in elems


def test_trivial_and_symmetric():
    assert trivial_group(5).order == 1
    dist = exact_cycle_distribution(symmetric_group(3))
    assert dist.freq == {"1+1+1": Fraction(1, 6), "2+1": Fraction(1, 2), "3": Fraction(1, 3)}


def test_caps():
    with pytest.raises(CapacityError):
        wreath_generators(3, 7)
    with pytest.raises(CapacityError):
        enumerate_group(wreath_generators(3, 3), cap=10**4)


D1296 = {
    "9": "1/9", "6+3": "2/9", "6+2+1": "1/12", "6+1+1+1": "1/36", "4+3+2": "1/12",
    "4+2+2+1": "1/8", "4+2+1+1+1": "1/24", "3+3+3": "5/81", "3+3+2+1": "1/36",
    "3+3+1+1+1": "1/108", "3+2+2+2": "1/36", "3+2+2+1+1": "1/24", "3+2+1+1+1+1": "1/36",
    "3+1+1+1+1+1+1": "1/216", "2+2+2+2+1": "1/24", "2+2+2+1+1+1": "5/144",
    "2+2+1+1+1+1+1": "1/48", "2+1+1+1+1+1+1+1": "1/144", "1+1+1+1+1+1+1+1+1": "1/1296",
}
D648 = {
    "9": "2/9", "6+3": "1/3", "3+3+3": "10/81", "3+3+2+1": "1/18", "3+3+1+1+1": "1/54",
    "3+2+2+1+1": "1/12", "3+2+1+1+1+1": "1/18", "3+1+1+1+1+1+1": "1/108",
    "2+2+2+1+1+1": "1/24", "2+2+1+1+1+1+1": "1/24", "2+1+1+1+1+1+1+1": "1/72",
    "1+1+1+1+1+1+1+1+1": "1/648",
}
TAU_STAR = Fraction(31, 72)


def test_frozen_distributions(groups):
    _, _, d1, d2 = groups
    assert {k: str(v) for k, v in d1.freq.items()} == D1296
    assert {k: str(v) for k, v in d2.freq.items()} == D648
    assert sum(d1.freq.values()) == 1 and sum(d2.freq.values()) == 1
    assert total_variation(d1, d2) == TAU_STAR


def test_class_sizes_reproduce_distribution(groups):
    W, H, d1, d2 = groups
    assert class_cycle_distribution(W).freq == d1.freq
    assert class_cycle_distribution(H).freq == d2.freq
    assert class_cycle_distribution(symmetric_group(4)).freq == exact_cycle_distribution(symmetric_group(4)).freq


def test_total_variation_properties(groups):
    _, _, d1, d2 = groups
    assert total_variation(d1, d1) == 0
    a = CycleTypeDistribution(3, {"3": Fraction(1)}, 1)
    b = CycleTypeDistribution(3, {"1+1+1": Fraction(1)}, 1)
    assert total_variation(a, b) == 1
    with pytest.raises(ValueError):
        total_variation(a, d1)


def test_distribution_json(groups):
    _, _, d1, _ = groups
    js = d1.to_json()
    assert js["fractions"]["6+3"] == "2/9"
    assert js["frequencies"]["9"] == "0.1111111111"
    assert list(js["frequencies"])[0] == "9"


def test_frobenius_x2_minus_1():
    dist = frobenius_distribution(Poly((-1, 0, 1)), 2000)
    assert set(dist.freq) == {"1+1"}
    assert dist.skipped == 1  # p = 2


def test_frobenius_parallel_deterministic():
    f = Poly((-6, 0, 6, 1))
    a = frobenius_distribution(f, 5000, jobs=1, block=300)
    b = frobenius_distribution(f, 5000, jobs=3, block=300)
    assert a.freq == b.freq and a.skipped == b.skipped


def test_frobenius_cubic_matches_s3():
    # x^3 + 6x^2 - 6 has group S3; check TV to S3 falls with the prime range.
    f = Poly((-6, 0, 6, 1))
    s3 = exact_cycle_distribution(symmetric_group(3))
    tv_small = total_variation(frobenius_distribution(f, 300), s3)
    tv_large = total_variation(frobenius_distribution(f, 30000), s3)
    assert tv_large < tv_small and tv_large < Fraction(2, 100)


def test_frobenius_index2_cubic_is_c3():
    # Square discriminant: no transposition Frobenius elements.
    dist = frobenius_distribution(Poly((-7, 0, 7, 1)), 5000)
    assert "2+1" not in dist.freq
    assert abs(float(dist.get("3")) - 2 / 3) < 0.05
