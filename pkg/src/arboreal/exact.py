"""Exact integer/rational primitives: square tests, valuations, support
stripping, budgeted factoring, Moebius, Bezout and heights.

Python ints and ``fractions.Fraction`` are the big-number types throughout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

INF = math.inf

# Deterministic Miller-Rabin witnesses for n < 3.3e24 (covers 2**64).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    # Quadratic residues mod 64 reject ~80% of inputs before the isqrt.
    if (n & 63) not in _QR64:
        return False
    r = math.isqrt(n)
    return r * r == n


def square_root(n: int) -> int | None:
    """Exact square root of ``n`` or None."""
    if not is_perfect_square(n):
        return None
    return math.isqrt(n)


_QR64 = frozenset((i * i) & 63 for i in range(64))


def is_rational_square(q: Rational) -> bool:
    q = Fraction(q)
    return is_perfect_square(q.numerator) and is_perfect_square(q.denominator)


def rational_sqrt(q: Rational) -> Fraction | None:
    q = Fraction(q)
    a, b = square_root(q.numerator), square_root(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


# --------------------------------------------------------------------------
# primality

def small_primes(bound: int) -> list[int]:
    """Primes <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=8)
def _trial_primes(bound: int) -> tuple[int, ...]:
    return tuple(small_primes(bound))


_SMALL = small_primes(1000)
_SMALL_SET = frozenset(_SMALL)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 40, seed: int = 0) -> bool:
    """Miller-Rabin. Deterministic below 2**64; ``rounds`` random bases above."""
    if n < 2:
        return False
    if n in _SMALL_SET:
        return True
    for p in _SMALL:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES_64)
    rng = random.Random(seed ^ (n & 0xFFFFFFFF))
    bases = list(_MR_BASES_64[:4]) + [rng.randrange(2, n - 1) for _ in range(max(rounds - 4, 0))]
    return all(_mr_round(n, d, s, a) for a in bases)


def is_prime(n: int) -> bool:
    return is_probable_prime(n)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# --------------------------------------------------------------------------
# valuations and supports

def valuation(n: Rational, p: int) -> float | int:
    """p-adic valuation; +inf for 0, negative for rationals with p in the denominator."""
    _require_prime(p)
    q = Fraction(n)
    if q == 0:
        return INF
    return _vint(q.numerator, p) - _vint(q.denominator, p)


def _vint(n: int, p: int) -> int:
    n = abs(n)
    if n == 0:
        return 0
    # Divide by p**(2**j) blocks first so huge powers are cheap.
    e = 0
    pk, k = p, 1
    powers = []
    while n % pk == 0:
        powers.append((pk, k))
        n //= pk
        e += k
        pk, k = pk * pk, 2 * k
    for pk, k in reversed(powers):
        while n % pk == 0:
            n //= pk
            e += k
    return e


def split_power(n: int, p: int) -> tuple[int, int]:
    """Return (e, m) with n = p**e * m and p not dividing m (n != 0)."""
    e = _vint(n, p)
    return e, n // p**e if e else n


@dataclass(frozen=True)
class FactorMap:
    """Partial factorisation: value = prod(p**e) * cofactor."""

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    cofactor_status: str = "one"  # "one" | "probable-prime" | "composite-unfactored"
    probable: bool = False  # True if some listed prime exceeds 2**64

    def __post_init__(self):
        ps = [p for p, _ in self.factors]
        if ps != sorted(set(ps)):
            raise ValueError("primes must be strictly increasing")

    @property
    def value(self) -> int:
        v = self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    @property
    def complete(self) -> bool:
        return self.cofactor_status != "composite-unfactored"

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def odd_exponent_primes(self) -> list[int]:
        out = [p for p, e in self.factors if e % 2]
        if self.cofactor_status == "probable-prime":
            out.append(abs(self.cofactor))
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "factors": [[str(p), e] for p, e in self.factors],
            "cofactor": str(self.cofactor),
            "cofactor_status": self.cofactor_status,
            "probable": self.probable,
        }


def support(n: int) -> frozenset[int]:
    """Supp(n): primes dividing n. Requires full factorisation of n."""
    fm = factor(n)
    if not fm.complete:
        raise ValueError(f"could not factor {n} within budget")
    primes = {p for p, _ in fm.factors}
    if fm.cofactor_status == "probable-prime":
        primes.add(abs(fm.cofactor))
    return frozenset(primes)


def strip_support(n: int, primes: Iterable[int]) -> tuple[int, FactorMap]:
    """Divide every prime of ``primes`` out of ``n`` completely."""
    if n == 0:
        raise ValueError("cannot strip support of 0")
    removed = []
    for p in sorted(set(primes)):
        _require_prime(p)
        e, n = split_power(n, p)
        if e:
            removed.append((p, e))
    return n, FactorMap(tuple(removed))


# --------------------------------------------------------------------------
# factoring

@dataclass(frozen=True)
class FactorBudget:
    trial_bound: int = 10_000
    rho_iterations: int = 200_000
    mr_rounds: int = 40
    seed: int = 0


DEFAULT_BUDGET = FactorBudget()


def _brent(n: int, c: int, max_iter: int, m: int = 128) -> int | None:
    """One Brent-rho run for x -> x^2 + c mod n; a nontrivial factor or None."""
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    used = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r *= 2
        if used > max_iter:
            return None
    if g == n:
        # Backtrack one step at a time from the saved position.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if 1 < g < n else None


def factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> FactorMap:
    """Trial division, then Brent-rho within ``budget``. Sign goes to the cofactor."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    for p in _trial_primes(budget.trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e, n = split_power(n, p)
            found[p] = e
    pending = [n] if n > 1 else []
    leftovers: list[int] = []
    rng = random.Random(budget.seed)
    while pending:
        m = pending.pop()
        if is_probable_prime(m, budget.mr_rounds, budget.seed):
            found[m] = found.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            pending += [r, r]
            continue
        g = None
        for _ in range(8):
            g = _brent(m, rng.randrange(1, m - 1), budget.rho_iterations)
            if g:
                break
        if g is None:
            leftovers.append(m)
        else:
            pending += [g, m // g]
    cof = sign
    for m in leftovers:
        cof *= m
    status = "composite-unfactored" if leftovers else "one"
    factors = tuple(sorted(found.items()))
    probable = any(p >= 1 << 64 for p in found)
    return FactorMap(factors, cof, status, probable)


# --------------------------------------------------------------------------
# misc arithmetic

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    for p, e in factor(n).factors:
        if e > 1:
            return 0
        result = -result
    return result


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    divs = [1]
    for p, e in factor(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) > 0."""
    if a == 0 and b == 0:
        raise ValueError("bezout(0, 0) undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def height(q: Rational) -> tuple[int, float]:
    """Multiplicative height H = max(|num|, den) and h = log H."""
    q = Fraction(q)
    H = max(abs(q.numerator), q.denominator)
    return H, _log_big(H)


def _log_big(n: int) -> float:
    if n.bit_length() < 1000:
        return math.log(n)
    shift = n.bit_length() - 900
    return math.log(n >> shift) + shift * math.log(2)


def digits(n: int) -> int:
    """Decimal digit count of |n| without converting to a string."""
    n = abs(n)
    if n < 10:
        return 1
    est = int((n.bit_length() - 1) * 0.30102999566398120) + 1  # exact or one too low
    return est + 1 if n >= 10**est else est


__all__ = [
    "FactorMap", "FactorBudget", "INF", "isqrt", "is_perfect_square", "square_root",
    "is_rational_square", "rational_sqrt", "small_primes", "is_probable_prime", "is_prime",
    "valuation", "split_power", "support", "strip_support", "factor", "mobius",
    "divisors", "bezout", "height", "digits",
]
