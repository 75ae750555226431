"""Small iterated wreath products on tree leaves, their exact cycle-type
distributions, and Frobenius cycle-type statistics of iterates.

A leaf of the depth-n d-ary tree is numbered by its base-d address with the
root-level digit most significant, so leaf ``i*d**(n-1) + j`` lies below the
i-th vertex of level 1.  For an iterate f^n this matches grouping the roots of
f^n by which root of f they map to.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapacityError
from .exact import small_primes
from .finite_field import cycle_type
from .poly import Poly

LEAF_CAP = 729
ORDER_CAP = 100_000

Perm = tuple  # image tuple on {0..m-1}


# --------------------------------------------------------------------------
# permutations

def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: i -> p[q[i]]."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(m: int) -> Perm:
    return tuple(range(m))


def perm_cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            out.append(n)
    return tuple(sorted(out, reverse=True))


def partition_key(parts: Iterable[int]) -> str:
    return "+".join(str(x) for x in sorted(parts, reverse=True))


# --------------------------------------------------------------------------
# groups

@dataclass
class PermGroup:
    degree: int
    generators: list[Perm]
    name: str = ""
    elements: list[Perm] | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        if self.elements is None:
            enumerate_group(self)
        return len(self.elements)


def wreath_generators(d: int, n: int, top: Sequence[Perm] | None = None,
                      cap: int = LEAF_CAP) -> PermGroup:
    """Generators of the n-fold iterated wreath product of S_d on d^n leaves.

    ``top`` replaces the generators of the root-level S_d (e.g. a 3-cycle
    alone gives the subgroup whose root action is alternating).
    """
    if d < 2 or n < 0:
        raise ValueError("need d >= 2, n >= 0")
    m = d ** n
    if m > cap:
        raise CapacityError(f"{d}^{n} = {m} leaves exceeds cap {cap}")
    if n == 0:
        return PermGroup(1, [], f"W({d},0)")
    sym = [tuple([1, 0] + list(range(2, d))), tuple(list(range(1, d)) + [0])]
    top = [check_perm(t) for t in (sym if top is None else top)]
    if any(len(t) != d for t in top):
        raise ValueError(f"top generators must act on {d} points")
    block = d ** (n - 1)
    gens = []
    # Root level: permute the d subtrees rigidly.
    for t in top:
        gens.append(tuple(t[i // block] * block + i % block for i in range(m)))
    # Lower levels: W(d, n-1) acting on subtree 0; conjugates by the root
    # action reach the other subtrees.
    if n > 1:
        sub = wreath_generators(d, n - 1, cap=cap)
        for g in sub.generators:
            gens.append(tuple(g[i] if i < block else i for i in range(m)))
    gens = [g for g in dict.fromkeys(gens) if g != identity(m)]
    return PermGroup(m, gens, f"W({d},{n})")


def wreath_order(d: int, n: int) -> int:
    return math.factorial(d) ** ((d**n - 1) // (d - 1))


def index2_candidate() -> PermGroup:
    """Depth-2 group for x^3+7x^2-7: root action cyclic of order 3, lower copies full."""
    g = wreath_generators(3, 2, top=[(1, 2, 0)])
    g.name = "W(3,2) root-restricted to C3"
    return g


def trivial_group(m: int) -> PermGroup:
    return PermGroup(m, [], "trivial")


def symmetric_group(m: int) -> PermGroup:
    if m < 2:
        return trivial_group(m)
    gens = [tuple([1, 0] + list(range(2, m))), tuple(list(range(1, m)) + [0])]
    return PermGroup(m, list(dict.fromkeys(gens)), f"S{m}")


def enumerate_group(group: PermGroup, cap: int = ORDER_CAP) -> list[Perm]:
    """All elements by breadth-first closure under right multiplication by generators."""
    if group.elements is not None:
        return group.elements
    e = identity(group.degree)
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > cap:
                    raise CapacityError(f"group order exceeds cap {cap}")
                queue.append(y)
    group.elements = out
    return out


def conjugacy_classes(group: PermGroup) -> list[tuple[Perm, int]]:
    """(representative, class size) pairs, found by closing under conjugation by generators."""
    elements = enumerate_group(group)
    gens = [(g, inverse(g)) for g in group.generators]
    remaining = set(elements)
    classes = []
    for x in elements:
        if x not in remaining:
            continue
        cls = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g, gi in gens:
                z = compose(compose(g, y), gi)
                if z not in cls:
                    cls.add(z)
                    queue.append(z)
        remaining -= cls
        classes.append((x, len(cls)))
    return classes


# --------------------------------------------------------------------------
# cycle-type distributions

@dataclass
class CycleTypeDistribution:
    degree: int
    freq: dict[str, Fraction]
    samples: int
    skipped: int = 0
    exact: bool = True

    def get(self, key: str) -> Fraction:
        return self.freq.get(key, Fraction(0))

    def to_json(self) -> dict:
        keys = sorted(self.freq, key=lambda k: [-int(x) for x in k.split("+")])
        out = {
            "degree": self.degree,
            "exact": self.exact,
            "samples": self.samples,
            "skipped": self.skipped,
            "frequencies": {k: f"{float(self.freq[k]):.10f}" for k in keys},
        }
        if self.exact:
            out["fractions"] = {k: str(self.freq[k]) for k in keys}
        return out


def _from_counts(degree, counts: Counter, skipped=0, exact=True) -> CycleTypeDistribution:
    total = sum(counts.values())
    freq = {k: Fraction(v, total) for k, v in counts.items()} if total else {}
    return CycleTypeDistribution(degree, freq, total, skipped, exact)


def exact_cycle_distribution(group: PermGroup) -> CycleTypeDistribution:
    counts = Counter(partition_key(perm_cycle_type(g)) for g in enumerate_group(group))
    return _from_counts(group.degree, counts)


def class_cycle_distribution(group: PermGroup) -> CycleTypeDistribution:
    """Same distribution, from conjugacy-class representatives weighted by class size."""
    counts = Counter()
    for rep, size in conjugacy_classes(group):
        counts[partition_key(perm_cycle_type(rep))] += size
    return _from_counts(group.degree, counts)


def _frob_block(args):
    coeffs, primes = args
    f = Poly(coeffs)
    counts, skipped = Counter(), 0
    for p in primes:
        if f.lc % p == 0:
            skipped += 1
            continue
        ct = cycle_type(f, p)
        if ct is None:
            skipped += 1
        else:
            counts[partition_key(ct)] += 1
    return counts, skipped


def frobenius_distribution(f: Poly, pmax: int, pmin: int = 2, jobs: int = 1,
                           block: int = 2000) -> CycleTypeDistribution:
    """Factor-degree statistics of f mod p over primes pmin <= p <= pmax.

    Primes dividing lc(f) or where f mod p is not squarefree are counted as skipped.
    """
    primes = [p for p in small_primes(pmax) if p >= pmin]
    chunks = [(tuple(f.c), primes[i:i + block]) for i in range(0, len(primes), block)]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_frob_block, chunks))
    else:
        parts = [_frob_block(c) for c in chunks]
    counts, skipped = Counter(), 0
    for c, s in parts:
        counts.update(c)
        skipped += s
    return _from_counts(f.degree, counts, skipped, exact=False)


def total_variation(a: CycleTypeDistribution, b: CycleTypeDistribution) -> Fraction:
    if a.degree != b.degree:
        raise ValueError(f"distributions on {a.degree} and {b.degree} points")
    keys = set(a.freq) | set(b.freq)
    return sum((abs(a.get(k) - b.get(k)) for k in keys), Fraction(0)) / 2
