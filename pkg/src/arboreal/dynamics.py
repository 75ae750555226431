"""Trinomial families, exact orbits and the arithmetic of critical orbits:
sign certificates, primitive parts, rigid divisibility, primitive prime
divisors, orbits mod p and height growth."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, IntegralityAnomaly
from .exact import (
    FactorBudget,
    FactorMap,
    INF,
    digits,
    divisors,
    factor,
    height,
    is_perfect_square,
    is_prime,
    mobius,
    small_primes,
    split_power,
    strip_support,
    support,
)
from .poly import Poly, exact_div, gcd as poly_gcd, is_squarefree_modular, squarefree_decomposition

DEFAULT_DIGIT_BUDGET = 100_000


# --------------------------------------------------------------------------
# families

@dataclass(frozen=True)
class OdoniPrimeFamily:
    """x^p + kp x^(p-1) - kp."""

    p: int
    k: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p={self.p} must be an odd prime")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.k % self.p == 0:
            raise ValueError("p must not divide k")

    @property
    def poly(self) -> Poly:
        c = [0] * (self.p + 1)
        c[self.p] = 1
        c[self.p - 1] = self.k * self.p
        c[0] = -self.k * self.p
        return Poly(c)

    @property
    def a(self) -> int:
        return -self.k * (self.p - 1)

    def critical_data(self) -> list[tuple[int, int]]:
        return [(self.a, 1), (0, self.p - 2)] if self.a < 0 else [(0, self.p - 2), (self.a, 1)]

    def to_json(self) -> dict:
        return {"type": "odoni", "params": {"p": self.p, "k": self.k}}


@dataclass(frozen=True)
class VojtaFamily:
    """x^d - cd x^(d-1) + c(d-1)."""

    d: int
    c: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("d must be >= 3")
        if self.c < 1:
            raise ValueError("c must be a positive integer")

    @property
    def poly(self) -> Poly:
        co = [0] * (self.d + 1)
        co[self.d] = 1
        co[self.d - 1] = -self.c * self.d
        co[0] = self.c * (self.d - 1)
        return Poly(co)

    @property
    def a(self) -> int:
        return self.c * (self.d - 1)

    def critical_data(self) -> list[tuple[int, int]]:
        return [(0, self.d - 2), (self.a, 1)]

    def to_json(self) -> dict:
        return {"type": "vojta", "params": {"d": self.d, "c": self.c}}


@dataclass(frozen=True)
class PolyMap:
    """Any integer polynomial map (used for x^3+7x^2-7 and test non-examples)."""

    coeffs: tuple[int, ...]
    name: str = "poly"

    @property
    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def critical_data(self):
        from .poly import critical_points

        return [(int(b) if b.denominator == 1 else b, e) for b, e in critical_points(self.poly)]

    def to_json(self) -> dict:
        return {"type": self.name, "params": {"coefficients": [str(a) for a in self.coeffs]}}


INDEX2_MAP = PolyMap((-7, 0, 7, 1), "index2")


def critical_data(family) -> list[tuple]:
    return family.critical_data()


# --------------------------------------------------------------------------
# orbits

def _size(x) -> int:
    if isinstance(x, Fraction):
        return max(abs(x.numerator).bit_length(), x.denominator.bit_length())
    return abs(x).bit_length()


class Orbit:
    """Memoised forward orbit x0, f(x0), f^2(x0), ... with a digit budget."""

    def __init__(self, family, start, digit_budget: int = DEFAULT_DIGIT_BUDGET):
        self.family = family
        self.f = family.poly if hasattr(family, "poly") else family
        self.values = [Fraction(start) if isinstance(start, Fraction) else start]
        if isinstance(start, Fraction) and start.denominator == 1:
            self.values[0] = start.numerator
        self.digit_budget = digit_budget

    def __getitem__(self, n: int):
        while len(self.values) <= n:
            cur = self.values[-1]
            est_bits = max(_size(cur), 1) * self.f.degree
            if est_bits * 0.30103 > self.digit_budget:
                raise CapacityError(
                    f"orbit level {len(self.values)} would exceed {self.digit_budget} digits "
                    f"(reached level {len(self.values) - 1})"
                )
            nxt = self.f(cur)
            if isinstance(nxt, Fraction) and nxt.denominator == 1:
                nxt = nxt.numerator
            self.values.append(nxt)
        return self.values[n]

    def prefix(self, n: int) -> list:
        self[n]
        return self.values[: n + 1]


def orbit_values(family, start, n: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> list:
    return Orbit(family, start, digit_budget).prefix(n)


# --------------------------------------------------------------------------
# sign certificate

def sign_certificate(family: OdoniPrimeFamily, check_depth: int = 4) -> bool:
    """|a| < kd and a^(d-1) > kd give phi^n(a) > 0 for all n >= 1 (odd d)."""
    d, k, a = family.p, family.k, family.a
    if d % 2 == 0 or d < 3 or k < 1:
        raise ValueError("needs odd d >= 3 and k >= 1")
    ok = abs(a) < k * d and a ** (d - 1) > k * d
    if ok:
        orb = Orbit(family, a)
        for n in range(1, check_depth + 1):
            try:
                v = orb[n]
            except CapacityError:
                break
            if v <= 0:
                raise ArithmeticError(f"phi^{n}(a) = {v} <= 0 despite certificate")
    return ok


# --------------------------------------------------------------------------
# primitive parts and rigid divisibility

def primitive_part(family, n: int, orbit: Orbit | None = None) -> int:
    """prod_{m | n} (phi^m(0))^mu(n/m), checked to be an integer (signed)."""
    if n < 1:
        raise ValueError("n >= 1")
    orbit = orbit or Orbit(family, 0)
    num, den = 1, 1
    for m in divisors(n):
        mu = mobius(n // m)
        if mu == 0:
            continue
        b = orbit[m]
        if b == 0:
            raise ZeroDivisionError(f"phi^{m}(0) = 0")
        if mu == 1:
            num *= b
        else:
            den *= b
    q, r = divmod(num, den)
    if r:
        raise IntegralityAnomaly(f"Moebius product at n={n} is not integral: {Fraction(num, den)}")
    return q


@dataclass
class RigidDivisibilityReport:
    family: dict
    depth: int
    prime_bound: int
    violations: list[dict] = field(default_factory=list)
    primes_checked: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "depth": self.depth,
            "prime_bound": self.prime_bound,
            "primes_checked": self.primes_checked,
            "violations": self.violations,
        }


def _v(b: int, p: int):
    return INF if b == 0 else split_power(b, p)[0]


def check_rigid_divisibility(values: Sequence[int], prime_bound: int, family: dict | None = None):
    """Both rigid-divisibility conditions for b_1..b_N (``values[0]`` is b_1)."""
    N = len(values)
    b = {i + 1: v for i, v in enumerate(values)}
    report = RigidDivisibilityReport(family or {}, N, prime_bound)
    for p in small_primes(prime_bound):
        vals = {n: _v(b[n], p) for n in b}
        if not any(v > 0 for v in vals.values()):
            continue
        report.primes_checked.append(p)
        for n in range(1, N + 1):
            if vals[n] > 0:
                for m in range(2, N // n + 1):
                    if vals[m * n] != vals[n]:
                        report.violations.append(
                            {"prime": p, "condition": 1, "n": n, "mn": m * n,
                             "v_n": _jv(vals[n]), "v_mn": _jv(vals[m * n])}
                        )
        for n in range(1, N + 1):
            for m in range(n + 1, N + 1):
                e = min(vals[n], vals[m])
                g = math.gcd(m, n)
                if e > 0 and vals[g] < e:
                    report.violations.append(
                        {"prime": p, "condition": 2, "n": n, "m": m, "gcd": g,
                         "e": _jv(e), "v_gcd": _jv(vals[g])}
                    )
    return report


def _jv(v):
    return "inf" if v == INF else v


def verify_rigid_divisibility(family, N: int, prime_bound: int) -> RigidDivisibilityReport:
    orbit = Orbit(family, 0)
    values = [orbit[n] for n in range(1, N + 1)]
    return check_rigid_divisibility(values, prime_bound, family.to_json())


# --------------------------------------------------------------------------
# primitive prime divisors

@dataclass
class PPDAnalysis:
    n: int
    value: int
    stripped: int
    removed: FactorMap
    is_square: bool
    witness: int | None
    factor_complete: bool


WITNESS_BUDGET = FactorBudget(trial_bound=10_000, rho_iterations=4_000)


def odd_exponent_witness(n: int, budget: FactorBudget = WITNESS_BUDGET,
                         max_digits: int = 120) -> tuple[int | None, bool]:
    """Smallest prime found dividing n to odd exponent, and whether factoring finished.

    Above ``max_digits`` only trial division is attempted.
    """
    if abs(n) <= 1:
        return None, True
    if digits(n) > max_digits:
        for p in small_primes(budget.trial_bound):
            if n % p == 0 and split_power(n, p)[0] % 2:
                return p, False
        return None, False
    fm = factor(n, budget)
    odd = fm.odd_exponent_primes()
    return (odd[0] if odd else None), fm.complete


def primitive_prime_analysis(family: OdoniPrimeFamily, n: int, orbit: Orbit | None = None,
                             budget: FactorBudget | None = WITNESS_BUDGET) -> PPDAnalysis:
    orbit = orbit or Orbit(family, family.a)
    m = orbit[n]
    supp = support(family.k * family.p)
    stripped, removed = strip_support(m, supp)
    sq = is_perfect_square(abs(stripped)) and stripped > 0
    witness, complete = (None, False)
    if not sq and budget is not None:
        witness, complete = odd_exponent_witness(stripped, budget)
    return PPDAnalysis(n, m, stripped, removed, sq, witness, complete)


@dataclass
class RefinementCheck:
    holds: bool | None  # None: inconclusive (factoring budget exhausted)
    nonprimitive_primes: list[int]
    notes: list[str] = field(default_factory=list)


def ppd_refinement_check(family, b, n: int, budget: FactorBudget = FactorBudget()) -> RefinementCheck:
    """Every non-primitive prime q of phi^n(b) divides phi^m(b) or phi^m(0), 1 <= m <= n//2.

    Non-primitive primes are exactly the primes of gcd(phi^n(b), phi^m(b)),
    m < n, so only those gcds need factoring.
    """
    if n <= 1:
        return RefinementCheck(True, [])
    ob, o0 = Orbit(family, b), Orbit(family, 0)
    target = ob[n]
    primes: set[int] = set()
    notes = []
    complete = True
    for m in range(1, n):
        g = math.gcd(target, ob[m])
        if g > 1:
            fm = factor(g, budget)
            primes |= {p for p, _ in fm.factors}
            if not fm.complete:
                complete = False
                notes.append(f"gcd with phi^{m}(b) not fully factored")
    half = n // 2
    for q in sorted(primes):
        if not any(ob[m] % q == 0 or o0[m] % q == 0 for m in range(1, half + 1)):
            return RefinementCheck(False, sorted(primes), [f"prime {q} violates the dichotomy"])
    return RefinementCheck(True if complete else None, sorted(primes), notes)


# --------------------------------------------------------------------------
# orbits modulo p

@dataclass(frozen=True)
class OrbitModP:
    hits_zero: bool
    tail: int
    period: int
    first_zero: int | None = None


def orbit_mod_p(family, a0, p: int) -> OrbitModP | None:
    """Brent cycle detection of x -> f(x) on GF(p); None if p | den(a0)."""
    f = family.poly if hasattr(family, "poly") else family
    a0 = Fraction(a0)
    if a0.denominator % p == 0:
        return None
    x0 = a0.numerator * pow(a0.denominator, -1, p) % p
    coeffs = [c % p for c in reversed(f.c)]

    def step(x):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % p
        return acc

    first_zero = 0 if x0 == 0 else None
    power = lam = 1
    tortoise, hare = x0, step(x0)
    idx = 1
    if hare == 0 and first_zero is None:
        first_zero = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        idx += 1
        lam += 1
        if hare == 0 and first_zero is None:
            first_zero = idx
    tortoise = hare = x0
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = step(tortoise), step(hare)
        mu += 1
    # The hare visited indices 1..idx >= mu + lam - 1, so every tail and
    # cycle element has been seen.
    return OrbitModP(first_zero is not None, mu, lam, first_zero)


# --------------------------------------------------------------------------
# heights

@dataclass(frozen=True)
class HeightRow:
    n: int
    height_next: int
    growth_bound: int  # c * H(phi^n(0))^(d-1)
    lower_bound: int  # (c(d-1))^((d-1)^(n-3))

    @property
    def ok(self) -> bool:
        return self.height_next >= self.growth_bound and self.height_next >= self.lower_bound


def height_growth_check(family: VojtaFamily, n_max: int) -> list[HeightRow]:
    d, c = family.d, family.c
    orbit = Orbit(family, 0)
    rows = []
    for n in range(3, n_max + 1):
        Hn, _ = height(orbit[n])
        Hn1, _ = height(orbit[n + 1])
        rows.append(HeightRow(n, Hn1, c * Hn ** (d - 1), (c * (d - 1)) ** ((d - 1) ** (n - 3))))
    return rows


# --------------------------------------------------------------------------
# parameter polynomials phi_(C,n)(0) and Phi_(C,n)(0)

def vojta_parameter_orbit(d: int, n: int) -> list[Poly]:
    """[phi_(C,1)(0), ..., phi_(C,n)(0)] in Z[C] for x^d - C d x^(d-1) + C(d-1)."""
    C = Poly.x()
    P = C * (d - 1)
    out = [P]
    for _ in range(n - 1):
        Pd1 = P ** (d - 1)
        P = Pd1 * P - C * d * Pd1 + C * (d - 1)
        out.append(P)
    return out


@dataclass
class DynatomicRow:
    d: int
    n: int
    degree: int
    leading: int
    leading_is_power: bool
    squarefree: bool
    dynatomic_degree: int
    simple_roots: int
    gcd_fallback: bool

    def to_json(self) -> dict:
        return {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) and abs(v) > 2**53 else v)
                for k, v in self.__dict__.items()}


def _is_signed_power(x: int, base: int) -> bool:
    x = abs(x)
    if base in (0, 1):
        return x == base
    e, rest = split_power(x, base) if x else (0, 0)
    return rest == 1 and e >= 1


def dynatomic_value(params: Sequence[Poly], n: int) -> tuple[Poly, bool]:
    """Phi_(C,n)(0) = prod_{m|n} phi_(C,m)(0)^mu(n/m), and whether gcd fallback was needed."""
    num, den = Poly.const(1), Poly.const(1)
    for m in divisors(n):
        mu = mobius(n // m)
        if mu == 1:
            num = num * params[m - 1]
        elif mu == -1:
            den = den * params[m - 1]
    q = exact_div(num, den)
    if q is not None:
        return q, False
    # Cancel common factors and divide what is left.
    g = poly_gcd(num, den)
    q = exact_div(exact_div(num, g), exact_div(den, g))
    if q is None:
        raise IntegralityAnomaly(f"Phi_(C,{n})(0) is not a polynomial")
    return q, True


def dynatomic_report(d: int, n_max: int) -> list[DynatomicRow]:
    params = vojta_parameter_orbit(d, n_max)
    rows = []
    for n in range(1, n_max + 1):
        P = params[n - 1]
        sqf = is_squarefree_modular(P) or len(squarefree_decomposition(P)) == 1 and \
            squarefree_decomposition(P)[0][1] == 1
        Phi, fallback = dynatomic_value(params, n)
        if is_squarefree_modular(Phi):
            simple = Phi.degree
        else:
            from .poly import count_simple_roots

            simple = count_simple_roots(Phi)
        rows.append(DynatomicRow(d, n, P.degree, P.lc, _is_signed_power(P.lc, d - 1), sqf,
                                 Phi.degree, simple, fallback))
    return rows
