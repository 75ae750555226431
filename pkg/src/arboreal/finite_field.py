"""Polynomials over GF(p): squarefree/distinct-degree/equal-degree factoring,
the ramified-trinomial shape check, and Frobenius cycle types.

Polynomials here are plain lists of ints in [0, p), constant term first,
no trailing zeros.  Keeping them as lists (not Poly) matters for the
Chebotarev sweeps, which call :func:`cycle_type` on ~10^4 primes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import bezout, is_prime
from .poly import Poly, Trinomial, trinomial_disc

FpPoly = list

MAX_PRIME = 1 << 62


def fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_reduce(f: Poly | Sequence, p: int) -> list[int]:
    coeffs = f.c if isinstance(f, Poly) else f
    out = []
    for a in coeffs:
        if isinstance(a, Fraction):
            if a.denominator % p == 0:
                raise ZeroDivisionError(f"{p} divides a denominator")
            out.append(a.numerator * pow(a.denominator, -1, p) % p)
        else:
            out.append(a % p)
    return fp_trim(out)


def fp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return fp_trim(out)


def fp_scale(a, k, p):
    k %= p
    return fp_trim([x * k % p for x in a]) if k else []


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([x % p for x in out])


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], fp_trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
        r[i] = 0
    return fp_trim(q), fp_trim(r[:db])


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_monic(a, p):
    return fp_scale(a, pow(a[-1], -1, p), p) if a else []


def fp_gcd(a, b, p):
    """Monic gcd."""
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p)


def fp_derivative(a, p):
    return fp_trim([i * a[i] % p for i in range(1, len(a))])


def fp_mulmod(a, b, m, p):
    return fp_mod(fp_mul(a, b, p), m, p)


def fp_powmod(a, e, m, p):
    result = [1]
    a = fp_mod(a, m, p)
    while e:
        if e & 1:
            result = fp_mulmod(result, a, m, p)
        e >>= 1
        if e:
            a = fp_mulmod(a, a, m, p)
    return result


def fp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def fp_compose_frobenius(h, rows, m, p):
    """h(x)^p mod m given rows[j] = x^(j p) mod m."""
    n = len(m) - 1
    out = [0] * n
    for j, hj in enumerate(h):
        if hj:
            for i, r in enumerate(rows[j]):
                out[i] += hj * r
    return fp_trim([x % p for x in out])


def _frobenius_rows(m, p):
    n = len(m) - 1
    xp = fp_powmod([0, 1], p, m, p)
    rows, cur = [[1]], [1]
    for _ in range(1, n):
        cur = fp_mulmod(cur, xp, m, p)
        rows.append(cur)
    return rows


# --------------------------------------------------------------------------
# factorisation

def fp_squarefree(f, p):
    """Squarefree factorisation of monic f: [(g, multiplicity)]."""
    out = []
    _sff(fp_monic(f, p), p, 1, out)
    # Merge equal factors that came from separate branches.
    merged: dict[tuple, int] = {}
    for g, m in out:
        merged[tuple(g)] = merged.get(tuple(g), 0) + m
    return sorted(((list(g), m) for g, m in merged.items()), key=lambda t: (t[1], len(t[0]), t[0]))


def _sff(f, p, mult, out):
    if len(f) <= 1:
        return
    df = fp_derivative(f, p)
    if not df:
        # f = g(x^p) = g(x)^p over GF(p).
        _sff([f[i] for i in range(0, len(f), p)], p, mult * p, out)
        return
    c = fp_gcd(f, df, p)
    w = fp_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = fp_gcd(w, c, p)
        z = fp_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((fp_monic(z, p), i * mult))
        i += 1
        w = y
        c = fp_divmod(c, y, p)[0]
    if len(c) > 1:
        # Remaining c is a p-th power.
        _sff([c[i] for i in range(0, len(c), p)], p, mult * p, out)


def fp_distinct_degree(f, p):
    """DDF of monic squarefree f: [(product of degree-i irreducibles, i)]."""
    out = []
    g = list(f)
    rows = _frobenius_rows(f, p)
    h = fp_mod([0, 1], f, p)
    i = 0
    while len(g) - 1 >= 2 * (i + 1):
        i += 1
        h = fp_compose_frobenius(h, rows, f, p)
        gg = fp_gcd(g, fp_sub(h, [0, 1], p), p)
        if len(gg) > 1:
            out.append((gg, i))
            g = fp_divmod(g, gg, p)[0]
    if len(g) > 1:
        out.append((fp_monic(g, p), len(g) - 1))
    return out


def fp_equal_degree(f, k, p, rng):
    """Split monic squarefree f, all of whose factors have degree k (odd p)."""
    n = len(f) - 1
    if n == k:
        return [f]
    e = (p**k - 1) // 2
    while True:
        a = fp_trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = fp_gcd(f, a, p)
        if 1 < len(g) < len(f):
            break
        b = fp_sub(fp_powmod(a, e, f, p), [1], p)
        g = fp_gcd(f, b, p)
        if 1 < len(g) < len(f):
            break
    h = fp_divmod(f, g, p)[0]
    return fp_equal_degree(g, k, p, rng) + fp_equal_degree(fp_monic(h, p), k, p, rng)


def fp_factor(f, p: int, seed: int = 0) -> list[tuple[list[int], int]]:
    """Complete factorisation of f over GF(p) into monic irreducibles with
    multiplicities (leading coefficient dropped).  Odd p only."""
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if not is_prime(p) or p >= MAX_PRIME:
        raise ValueError(f"modulus {p} must be an odd prime below 2^62")
    if isinstance(f, Poly):
        f = fp_reduce(f, p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, m in fp_squarefree(f, p):
        for h, k in fp_distinct_degree(g, p):
            for irr in fp_equal_degree(h, k, p, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return out


def fp_is_irreducible(f, p) -> bool:
    """Rabin's test for monic f."""
    n = len(f) - 1
    if n < 1:
        return False
    rows = _frobenius_rows(f, p)
    h = fp_mod([0, 1], f, p)
    powers = [h]
    for _ in range(n):
        powers.append(fp_compose_frobenius(powers[-1], rows, f, p))
    # x^(p^n) == x
    if fp_sub(powers[n], fp_mod([0, 1], f, p), p):
        return False
    for q in {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}:
        g = fp_gcd(f, fp_sub(powers[n // q], [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


@dataclass(frozen=True)
class FactorShape:
    pattern: tuple[tuple[int, int], ...]  # (degree, multiplicity), sorted
    factors: tuple[tuple[tuple[int, ...], int], ...] = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self.pattern)


def factor_shape(f, p, seed=0) -> FactorShape:
    facs = fp_factor(f, p, seed)
    pattern = tuple(sorted((len(g) - 1, m) for g, m in facs))
    return FactorShape(pattern, tuple((tuple(g), m) for g, m in facs))


# --------------------------------------------------------------------------
# trinomial shape check

@dataclass(frozen=True)
class ShapeVerdict:
    kind: str  # "ramified" | "unramified" | "violated"
    eta: int | None = None
    reason: str = ""
    shape: FactorShape | None = None


def eta_from_congruences(t: Trinomial, p: int) -> int:
    """The double root: combine eta^(d-s) = -sA/d and eta^s = -dB/((d-s)A)."""
    d, s, A, B = t.d, t.s, t.A, t.B
    u = -s * A * pow(d, -1, p) % p  # eta^(d-s)
    v = -d * B * pow((d - s) * A, -1, p) % p  # eta^s
    g, x, y = bezout(s, d - s)
    assert g == 1
    # eta = eta^(s x + (d-s) y)
    return pow(v, x, p) * pow(u, y, p) % p


def shape_check(t: Trinomial, p: int, seed: int = 0) -> ShapeVerdict:
    from math import gcd

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if gcd(t.d, t.s) != 1:
        return ShapeVerdict("violated", reason="gcd(d, s) != 1")
    disc = trinomial_disc(t)
    if disc % p:
        return ShapeVerdict("unramified")
    if (t.A * t.B) % p == 0:
        return ShapeVerdict("violated", reason="p | AB")
    if (t.d * t.s * (t.d - t.s)) % p == 0:
        return ShapeVerdict("violated", reason="p | ds(d-s)")
    if p == 2:
        return ShapeVerdict("violated", reason="p = 2")
    f = fp_reduce(t.poly, p)
    eta = eta_from_congruences(t, p)
    if fp_eval(f, eta, p) or fp_eval(fp_derivative(f, p), eta, p):
        raise ArithmeticError(f"eta={eta} is not a double root of {t} mod {p}")
    sq = fp_mul([-eta % p, 1], [-eta % p, 1], p)
    cof, rem = fp_divmod(f, sq, p)
    if rem:
        raise ArithmeticError("(x - eta)^2 does not divide f mod p")
    if fp_eval(cof, eta, p) == 0 or len(fp_gcd(cof, fp_derivative(cof, p), p)) > 1:
        raise ArithmeticError("cofactor is not separable away from eta")
    return ShapeVerdict("ramified", eta=eta, shape=factor_shape(f, p, seed))


# --------------------------------------------------------------------------
# Frobenius cycle type

def cycle_type(f, p: int) -> tuple[int, ...] | None:
    """Factor degrees of f mod p (descending) if f mod p is squarefree of full degree."""
    if isinstance(f, Poly):
        n = f.degree
        fm = fp_reduce(f, p)
    else:
        fm = list(f)
        n = len(fm) - 1
    if len(fm) - 1 != n:
        raise ValueError(f"{p} divides the leading coefficient")
    fm = fp_monic(fm, p)
    if len(fp_gcd(fm, fp_derivative(fm, p), p)) > 1:
        return None
    degs = []
    for g, k in fp_distinct_degree(fm, p):
        degs += [k] * ((len(g) - 1) // k)
    return tuple(sorted(degs, reverse=True))
