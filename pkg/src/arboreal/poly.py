"""Dense univariate polynomials over Z and Q.

A single :class:`Poly` type covers both rings: coefficients are Python ints
or Fractions, stored constant term first.  Integer-valued Fractions are
normalised back to int so integer polynomials stay on the fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import CapacityError, UnsupportedInput
from .exact import divisors, factor

Coeff = Union[int, Fraction]

DEFAULT_DEGREE_CAP = 3**8


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return int(c)


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        c = [_norm(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, a: Coeff) -> "Poly":
        return cls((a,))

    @classmethod
    def monomial(cls, deg: int, a: Coeff = 1) -> "Poly":
        return cls([0] * deg + [a])

    # -- basic shape --------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self) -> Coeff:
        return self.c[-1] if self.c else 0

    def is_zero(self) -> bool:
        return not self.c

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.c)

    def __getitem__(self, i: int) -> Coeff:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({list(self.c)})"

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if a == 0:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mon and abs(a) == 1:
                coef = "-" if a < 0 else "+"
            else:
                coef = f"{'-' if a < 0 else '+'}{abs(a)}{'*' if mon else ''}"
            terms.append(coef + mon)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    # -- ring operations ----------------------------------------------------
    def __add__(self, other) -> "Poly":
        other = _lift(other)
        n = max(len(self.c), len(other.c))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.c)

    def __sub__(self, other) -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(a * other for a in self.c)
        return Poly(_mul(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        return Poly(i * self.c[i] for i in range(1, len(self.c)))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    evaluate = __call__

    def compose(self, g: "Poly") -> "Poly":
        """self(g(x))."""
        acc = Poly()
        for a in reversed(self.c):
            acc = acc * g + a
        return acc

    def scale_var(self, k: Coeff) -> "Poly":
        """self(k*x)."""
        return Poly(a * k**i for i, a in enumerate(self.c))

    # -- content ------------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational content: self = content * primitive integer poly."""
        if not self.c:
            return Fraction(0)
        den = reduce(math.lcm, (Fraction(a).denominator for a in self.c), 1)
        num = reduce(math.gcd, (int(a * den) for a in self.c), 0)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Primitive integer polynomial with positive leading coefficient."""
        if not self.c:
            return self
        p = self * (1 / self.content())
        return -p if p.lc < 0 else p

    def monic(self) -> "Poly":
        return self * Fraction(1, 1) * (Fraction(1) / Fraction(self.lc))

    # -- serialisation ------------------------------------------------------
    def to_json(self) -> list[str]:
        return [str(a) for a in self.c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in data)


def _lift(a) -> Poly:
    return a if isinstance(a, Poly) else Poly.const(a)


_KRONECKER_MIN = 48


def _mul(a: Sequence[Coeff], b: Sequence[Coeff]) -> list[Coeff]:
    if not a or not b:
        return []
    if min(len(a), len(b)) >= _KRONECKER_MIN and all(isinstance(x, int) for x in a) and all(
        isinstance(x, int) for x in b
    ):
        return _kronecker_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _kronecker_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Pack into one big integer, let CPython's Karatsuba do the work.
    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(len(a), len(b))
    k = bound.bit_length() + 2  # +1 sign headroom, +1 borrow
    n = len(a) + len(b) - 1

    def pack(c):
        v = 0
        for x in reversed(c):
            v = (v << k) + x
        return v

    prod = pack(a) * pack(b)
    out = []
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    for _ in range(n):
        r = prod & mask
        if r >= half:
            r -= 1 << k
        out.append(r)
        prod = (prod - r) >> k
    return out


# --------------------------------------------------------------------------
# division

def divmod_q(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over Q."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in f.c]
    dg, lg = g.degree, Fraction(g.lc)
    if len(r) - 1 < dg:
        return Poly(), f
    q = [Fraction(0)] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        coef = r[i] / lg
        if coef:
            q[i - dg] = coef
            for j, b in enumerate(g.c):
                r[i - dg + j] -= coef * b
    return Poly(q), Poly(r[:dg])


def exact_div(f: Poly, g: Poly) -> Poly | None:
    """q with f == q*g exactly, or None when the remainder is nonzero.

    Stays in integer arithmetic while every step divides exactly.
    """
    if g.is_zero():
        raise ZeroDivisionError("exact_div by zero polynomial")
    if f.is_integral() and g.is_integral():
        q = _exact_div_int(f.c, g.c)
        if q is not None:
            return Poly(q)
    q, r = divmod_q(f, g)
    return q if r.is_zero() else None


def _exact_div_int(f: Sequence[int], g: Sequence[int]) -> list[int] | None:
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    if len(r) - 1 < dg:
        return [] if not any(r) else None
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        if r[i] == 0:
            continue
        coef, rem = divmod(r[i], lg)
        if rem:
            return None
        q[i - dg] = coef
        for j, b in enumerate(g):
            r[i - dg + j] -= coef * b
    if any(r[:dg]):
        return None
    return q


def prem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g, in Z[x]."""
    r = list(f.c)
    dg, lg = g.degree, g.lc
    delta = len(r) - 1 - dg
    if delta < 0:
        return f
    for i in range(len(r) - 1, dg - 1, -1):
        top = r[i]
        r = [a * lg for a in r]
        if top:
            for j, b in enumerate(g.c):
                r[i - dg + j] -= top * b
        r.pop()
    # Each loop iteration multiplied by lg once; total delta + 1 times.
    return Poly(r)


def gcd(f: Poly, g: Poly) -> Poly:
    """Primitive gcd over Q (positive leading coefficient) via primitive PRS."""
    a, b = f.primitive(), g.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = prem(a, b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive()


# --------------------------------------------------------------------------
# resultants and discriminants

def resultant(f: Poly, g: Poly) -> Coeff:
    """Res(f, g) by the subresultant pseudo-remainder sequence.

    Integer inputs give an integer; rational inputs are cleared of
    denominators first and rescaled exactly.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of zero polynomial")
    if not (f.is_integral() and g.is_integral()):
        cf, cg = f.content(), g.content()
        res = _resultant_int(f * (1 / cf), g * (1 / cg))
        return _norm(Fraction(res) * cf**g.degree * cg**f.degree)
    return _resultant_int(f, g)


def _resultant_int(A: Poly, B: Poly) -> int:
    if A.degree == 0:
        return A.lc**B.degree
    if B.degree == 0:
        return B.lc**A.degree
    ca, cb = int(A.content()), int(B.content())
    A, B = A * Fraction(1, ca), B * Fraction(1, cb)
    t = ca**B.degree * cb**A.degree
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -s
    g = h = 1
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = prem(A, B)
        if R.is_zero():
            return 0
        A = B
        div = g * h**delta
        B = Poly(a // div for a in R.c)
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
    m = A.degree
    h = B.lc**m // h ** (m - 1) if m >= 1 else 1
    return s * t * h


def disc_oracle(f: Poly) -> Coeff:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f); degree-1 polynomials have disc 1."""
    if f.is_zero():
        raise ValueError("discriminant of zero polynomial")
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return _norm(Fraction(sign * resultant(f, f.derivative())) / Fraction(f.lc))


@dataclass(frozen=True)
class Trinomial:
    """x^d + A x^s + B."""

    d: int
    s: int
    A: int
    B: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("trinomial degree must be >= 3")
        if not 1 <= self.s < self.d:
            raise ValueError("need 1 <= s < d")
        if self.A == 0 or self.B == 0:
            raise ValueError("A and B must be nonzero")

    @property
    def poly(self) -> Poly:
        c = [0] * (self.d + 1)
        c[self.d] = 1
        c[self.s] += self.A
        c[0] += self.B
        return Poly(c)


def trinomial_disc(t: Trinomial) -> int:
    d, s, A, B = t.d, t.s, t.A, t.B
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    inner = d**d * B ** (d - s) + (-1) ** (d - 1) * (d - s) ** (d - s) * s**s * A**d
    return sign * B ** (s - 1) * inner


# --------------------------------------------------------------------------
# iteration

def iterate(f: Poly, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> Poly:
    if n < 1:
        raise ValueError("iterate needs n >= 1")
    if f.degree**n > degree_cap:
        raise CapacityError(f"deg f^{n} = {f.degree**n} exceeds degree cap {degree_cap}")
    g = f
    for _ in range(n - 1):
        g = f.compose(g)
    return g


def iterate_eval(f: Poly, n: int, x0: Coeff) -> Coeff:
    x = x0
    for _ in range(n):
        x = f(x)
    return _norm(x) if isinstance(x, Fraction) else x


# --------------------------------------------------------------------------
# roots and squarefree structure

def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over Q: f = unit * prod f_i^i, f_i primitive, squarefree, coprime.

    Returns [(f_i, i)] for nonconstant f_i only.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    f = f.primitive()
    if f.degree < 1:
        return []
    if is_squarefree_modular(f):
        return [(f, 1)]
    out = []
    fp = f.derivative()
    a = gcd(f, fp)
    b = exact_div(f, a)
    c = exact_div(fp, a)
    dd = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, dd)
        b_next = exact_div(b, a)
        c = exact_div(dd, a)
        if a.degree > 0:
            out.append((a.primitive(), i))
        b = b_next
        dd = c - b.derivative()
        i += 1
    return out


def is_squarefree_modular(f: Poly, tries: int = 8) -> bool:
    """Sufficient test: f mod p squarefree of full degree for some small prime p.

    False means "not certified", not "has a repeated factor".
    """
    from .finite_field import fp_gcd, fp_derivative, fp_reduce

    f = f.primitive()
    p = 1 << 20
    found = 0
    while found < tries:
        p = _next_prime(p)
        if f.lc % p == 0:
            continue
        found += 1
        fm = fp_reduce(f, p)
        if len(fp_gcd(fm, fp_derivative(fm, p), p)) == 1:
            return True
    return False


def _next_prime(n: int) -> int:
    from .exact import is_prime

    n += 1
    while not is_prime(n):
        n += 1
    return n


def count_simple_roots(f: Poly) -> int:
    """Number of roots of multiplicity exactly one in an algebraic closure."""
    for g, m in squarefree_decomposition(f):
        if m == 1:
            return g.degree
    return 0


def rational_roots(f: Poly) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity (rational root theorem per squarefree part)."""
    roots = []
    for g, m in squarefree_decomposition(f):
        k = 0
        while g[k] == 0:
            k += 1
        if k:
            roots.append((Fraction(0), m))
            g = Poly(g.c[k:])
        if g.degree < 1:
            continue
        a0, an = abs(int(g[0])), abs(int(g.lc))
        cands = {Fraction(s * p, q) for p in divisors(a0) for q in divisors(an) for s in (1, -1)}
        for r in sorted(cands):
            if g(r) == 0:
                roots.append((r, m))
    return sorted(roots)


def critical_points(f: Poly) -> list[tuple[Fraction, int]]:
    """Critical points with multiplicity; raises if f' does not split over Q."""
    fp = f.derivative()
    pts = rational_roots(fp)
    if sum(m for _, m in pts) != fp.degree:
        raise UnsupportedInput(f"critical points of {f} are not all rational")
    return pts


def iterate_disc_formula(f: Poly, n: int, t: Coeff = 0) -> Coeff:
    """Closed form of Disc(f^n - t) for monic f with rational critical points."""
    if f.lc != 1:
        raise UnsupportedInput("formula implemented for monic f")
    if n < 1:
        raise ValueError("n >= 1")
    d = f.degree
    D = d**n
    sign = -1 if ((D - 1) * (D - 2) // 2) % 2 else 1
    value = Fraction(sign * d ** (n * D))
    t = Fraction(t)
    for b, e in critical_points(f):
        x = b
        for j in range(1, n + 1):
            x = f(x)
            value *= (t - x) ** (d ** (n - j) * e)
    return _norm(value)


def from_roots(roots: Iterable[Coeff]) -> Poly:
    p = Poly.const(1)
    for r in roots:
        p = p * Poly((-r, 1))
    return p


__all__ = [
    "Poly", "Trinomial", "DEFAULT_DEGREE_CAP", "divmod_q", "exact_div", "prem", "gcd",
    "resultant", "disc_oracle", "trinomial_disc", "iterate", "iterate_eval",
    "squarefree_decomposition", "count_simple_roots", "rational_roots", "critical_points",
    "iterate_disc_formula", "from_roots", "is_squarefree_modular",
]
