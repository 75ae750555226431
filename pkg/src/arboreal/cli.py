"""Command-line front end.

Every subcommand prints one report, either as JSON (the default) or as a
short text summary.  Exit codes carry the mathematical outcome:

    0  claim confirmed (all levels maximal, mod-3 proof, expected pattern, checks pass)
    1  error or usage error
    2  a claim failed (a level is not maximal, a cross-check disagreed)
    3  inconclusive (budget exhausted, criterion did not apply)

Default budgets can be set through ARBOREAL_DIGIT_BUDGET, ARBOREAL_DEGREE_CAP
and ARBOREAL_PRIME_BOUND.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .certificates import (
    MAXIMAL,
    NOT_MAXIMAL,
    curve_checks,
    density_experiment,
    index2_report,
    newton_polygon_certificate,
    odoni_tower,
    vojta_tower,
)
from .dynamics import INDEX2_MAP, OdoniPrimeFamily, PolyMap, VojtaFamily, dynatomic_report
from .errors import CapacityError, UnsupportedInput
from .galois import (
    ORDER_CAP,
    exact_cycle_distribution,
    frobenius_distribution,
    total_variation,
    wreath_generators,
    wreath_order,
)
from .poly import Trinomial, disc_oracle, iterate, trinomial_disc

EXIT_OK, EXIT_ERROR, EXIT_FAILED, EXIT_INCONCLUSIVE = 0, 1, 2, 3
SAFE_INT = 2**53


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        val = int(raw)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {raw!r}")
    if val <= 0:
        raise SystemExit(f"{name} must be positive")
    return val


@dataclass
class RunConfig:
    command: str
    family: dict | None = None
    depth: int | None = None
    prime_bound: int | None = None
    digit_budget: int = 100_000
    degree_cap: int = 729
    seed: int = 0
    jobs: int = 1
    fmt: str = "json"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("digit_budget", "degree_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.prime_bound is not None and self.prime_bound < 2:
            raise ValueError("prime bound must be >= 2")

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("fmt")
        return d


# --------------------------------------------------------------------------
# family specs

def parse_family(spec: str):
    """'odoni:p,k' | 'vojta:d,c' | 'index2' | 'trinomial:d,s,A,B' | 'poly:c0,c1,...'."""
    kind, _, rest = spec.partition(":")
    try:
        args = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise ValueError(f"bad family parameters in {spec!r}")
    if kind == "odoni" and len(args) == 2:
        return OdoniPrimeFamily(*args)
    if kind == "vojta" and len(args) == 2:
        return VojtaFamily(*args)
    if kind == "index2" and not args:
        return INDEX2_MAP
    if kind == "trinomial" and len(args) == 4:
        t = Trinomial(*args)
        return PolyMap(tuple(t.poly.c), "trinomial")
    if kind == "poly" and len(args) >= 2:
        return PolyMap(tuple(args), "poly")
    raise ValueError(f"unrecognised family spec {spec!r}")


# --------------------------------------------------------------------------
# JSON helpers

def jsonable(obj):
    """Big integers and rationals become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < SAFE_INT else str(obj)
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def envelope(cfg: RunConfig, results: dict, seconds: float) -> dict:
    return {
        "command": cfg.command,
        "config": jsonable(cfg.to_json()),
        "results": jsonable(results),
        "tool_version": __version__,
        "timing": {"seconds": round(seconds, 3)},
    }


# --------------------------------------------------------------------------
# subcommands: each returns (results, exit code)

def _tower_exit(report, expected=None) -> int:
    verdicts = report.verdicts()
    if expected is not None:
        if verdicts == expected:
            return EXIT_OK
        return EXIT_FAILED if NOT_MAXIMAL in verdicts else EXIT_INCONCLUSIVE
    if NOT_MAXIMAL in verdicts:
        return EXIT_FAILED
    if report.proof or report.overall == "surjective_evidence":
        return EXIT_OK
    return EXIT_INCONCLUSIVE


def cmd_certify_odoni(cfg, a):
    OdoniPrimeFamily(a.p, a.k)  # validate before any work
    if a.depth < 1:
        raise ValueError("depth must be >= 1")
    r = odoni_tower(a.p, a.k, a.depth, cfg.digit_budget, not a.no_witness, cfg.degree_cap)
    return r.to_json(), _tower_exit(r)


def cmd_certify_index2(cfg, a):
    if a.depth < 1:
        raise ValueError("depth must be >= 1")
    r = index2_report(a.depth, cfg.digit_budget, cfg.degree_cap)
    return r.to_json(), _tower_exit(r, [NOT_MAXIMAL] + [MAXIMAL] * (a.depth - 1))


def cmd_certify_vojta(cfg, a):
    VojtaFamily(a.d, a.c)
    if a.depth < 1:
        raise ValueError("depth must be >= 1")
    r = vojta_tower(a.d, a.c, a.depth, cfg.prime_bound or 1000, cfg.digit_budget)
    code = _tower_exit(r)
    if not r.checks["rigid_divisibility"]["violations"] == [] or not r.checks["heights_ok"]:
        code = EXIT_FAILED
    return r.to_json(), code


def random_trinomial(rng: random.Random, dmax: int = 8, coeff: int = 50) -> Trinomial:
    while True:
        d = rng.randint(3, dmax)
        s = rng.randint(1, d - 1)
        if math.gcd(d, s) != 1:
            continue
        A = rng.choice([-1, 1]) * rng.randint(1, coeff)
        B = rng.choice([-1, 1]) * rng.randint(1, coeff)
        return Trinomial(d, s, A, B)


def cmd_disc_check(cfg, a):
    if a.samples < 0:
        raise ValueError("samples must be >= 0")
    rng = random.Random(cfg.seed)
    rows = [Trinomial(3, 2, 6, -6), Trinomial(3, 2, 7, -7)]
    rows += [random_trinomial(rng) for _ in range(a.samples)]
    out, mismatches = [], 0
    for t in rows:
        closed, oracle = trinomial_disc(t), disc_oracle(t.poly)
        ok = closed == oracle
        mismatches += not ok
        out.append({"d": t.d, "s": t.s, "A": t.A, "B": t.B, "disc": closed, "agree": ok})
    return {"checked": len(out), "mismatches": mismatches, "rows": out}, (
        EXIT_OK if mismatches == 0 else EXIT_FAILED)


def _predicted_group(fam, level):
    d = fam.poly.degree
    top = [(1, 2, 0)] if fam is INDEX2_MAP else None
    if d**level > 729 or wreath_order(d, level) // (2 if top else 1) > ORDER_CAP:
        return None
    return wreath_generators(d, level, top=top)


def cmd_frobenius(cfg, a):
    fam = parse_family(a.family)
    if a.level < 1:
        raise ValueError("level must be >= 1")
    f = iterate(fam.poly, a.level, cfg.degree_cap)
    emp = frobenius_distribution(f, a.pmax, jobs=cfg.jobs)
    res = {"family": fam.to_json(), "level": a.level, "empirical": emp.to_json()}
    group = _predicted_group(fam, a.level)
    if group is not None:
        exact = exact_cycle_distribution(group)
        tv = total_variation(emp, exact)
        res["predicted"] = {"group": group.name, "order": group.order, "distribution": exact.to_json()}
        res["total_variation"] = f"{float(tv):.10f}"
    return res, EXIT_OK


def cmd_density(cfg, a):
    fam = parse_family(a.family)
    res = density_experiment(fam, Fraction(a.a0), a.pmax, jobs=cfg.jobs)
    res["family"] = fam.to_json()
    props = [row["proportion"] for row in res["table"]]
    code = EXIT_OK if res["orbit_growing"] else EXIT_INCONCLUSIVE
    res["decreasing"] = all(x >= y for x, y in zip(props, props[1:]))
    return res, code


def cmd_dynatomic(cfg, a):
    if a.d < 3 or a.nmax < 1:
        raise ValueError("need d >= 3 and nmax >= 1")
    rows = dynatomic_report(a.d, a.nmax)
    ok = all(r.leading_is_power and r.squarefree and (r.n < 3 or r.simple_roots >= 3) for r in rows)
    return {"d": a.d, "rows": [r.to_json() for r in rows], "all_ok": ok}, (
        EXIT_OK if ok else EXIT_FAILED)


def cmd_newton(cfg, a):
    t = Trinomial(a.d, a.s, a.A, a.B)
    cert = newton_polygon_certificate(t, a.p)
    return cert.to_json(), EXIT_OK if cert.certified else EXIT_INCONCLUSIVE


def cmd_curves(cfg, a):
    reports = curve_checks(a.bound, cfg.jobs)
    ok = all(r.ok for r in reports)
    return {"curves": [r.to_json() for r in reports], "all_ok": ok}, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "certify-odoni": cmd_certify_odoni,
    "certify-index2": cmd_certify_index2,
    "certify-vojta": cmd_certify_vojta,
    "disc-check": cmd_disc_check,
    "frobenius": cmd_frobenius,
    "density": cmd_density,
    "dynatomic": cmd_dynatomic,
    "newton": cmd_newton,
    "curves": cmd_curves,
}


# --------------------------------------------------------------------------
# argument parsing

class _Parser(argparse.ArgumentParser):
    # Exit code 2 is reserved for failed claims.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--digit-budget", type=int, default=None)
    common.add_argument("--degree-cap", type=int, default=None)

    ap = _Parser(prog="arboreal", description="Galois-maximality certificates for trinomial iterates.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("certify-odoni", parents=[common], help="x^p + kp x^(p-1) - kp tower")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--depth", type=int, default=4)
    s.add_argument("--no-witness", action="store_true", help="skip naming witness primes")

    s = sub.add_parser("certify-index2", parents=[common], help="x^3 + 7x^2 - 7 tower")
    s.add_argument("--depth", type=int, default=6)

    s = sub.add_parser("certify-vojta", parents=[common], help="x^d - cd x^(d-1) + c(d-1) tower")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--depth", type=int, default=4)
    s.add_argument("--prime-bound", type=int, default=None)

    s = sub.add_parser("disc-check", parents=[common], help="closed-form vs resultant discriminants")
    s.add_argument("--samples", type=int, default=50)

    s = sub.add_parser("frobenius", parents=[common], help="cycle-type statistics of an iterate")
    s.add_argument("--family", required=True)
    s.add_argument("--level", type=int, default=2)
    s.add_argument("--pmax", type=int, default=None)

    s = sub.add_parser("density", parents=[common], help="primes dividing some orbit element")
    s.add_argument("--family", required=True)
    s.add_argument("--a0", default="2")
    s.add_argument("--pmax", type=int, default=None)

    s = sub.add_parser("dynatomic", parents=[common], help="parameter polynomials in C")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--nmax", type=int, default=5)

    s = sub.add_parser("newton", parents=[common], help="Newton-polygon ramification certificate")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--A", type=int, required=True)
    s.add_argument("--B", type=int, required=True)
    s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("curves", parents=[common], help="elliptic-curve point and map checks")
    s.add_argument("--bound", type=int, default=10**6)
    return ap


def make_config(a) -> RunConfig:
    prime_bound = getattr(a, "pmax", None) or getattr(a, "prime_bound", None)
    if a.command in ("frobenius", "density") and prime_bound is None:
        prime_bound = _env_int("ARBOREAL_PRIME_BOUND", 10**5)
        a.pmax = prime_bound
    skip = {"command", "format", "seed", "jobs", "digit_budget", "degree_cap", "pmax", "prime_bound"}
    extra = {k: v for k, v in vars(a).items() if k not in skip}
    family = None
    if getattr(a, "family", None):
        family = parse_family(a.family).to_json()
    return RunConfig(
        command=a.command,
        family=family,
        depth=getattr(a, "depth", None),
        prime_bound=prime_bound,
        digit_budget=a.digit_budget or _env_int("ARBOREAL_DIGIT_BUDGET", 100_000),
        degree_cap=a.degree_cap or _env_int("ARBOREAL_DEGREE_CAP", 729),
        seed=a.seed,
        jobs=a.jobs,
        fmt=a.format,
        extra=extra,
    )


# --------------------------------------------------------------------------
# text output

def _text_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _text_lines(v, f"{prefix}{k}.")
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, v in enumerate(obj):
            yield from _text_lines(v, f"{prefix}{i}.")
    else:
        val = obj if not isinstance(obj, list) else ", ".join(str(x) for x in obj)
        yield f"{prefix[:-1]}: {val}"


def render_text(env: dict, code: int) -> str:
    res = env["results"]
    lines = [f"{env['command']} (arboreal {env['tool_version']}, {env['timing']['seconds']}s)"]
    if "levels" in res:
        for lvl in res["levels"]:
            ev = lvl["evidence"]
            extra = ev.get("witness_prime") or ev.get("square_witness") or ""
            lines.append(f"  level {lvl['n']}: {lvl['verdict']} {extra}".rstrip())
        lines.append(f"  overall: {res['overall']}  proof: {res['proof']}  index_bound: {res['index_bound']}")
    else:
        lines += ["  " + ln for ln in _text_lines(res)]
    lines.append(f"  exit: {code}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        cfg = make_config(a)
        t0 = time.perf_counter()
        results, code = COMMANDS[a.command](cfg, a)
        env = envelope(cfg, results, time.perf_counter() - t0)
    except (ValueError, UnsupportedInput) as exc:
        parser.exit(EXIT_ERROR, f"arboreal {a.command}: error: {exc}\n")
    except (CapacityError, ArithmeticError) as exc:
        print(f"arboreal {a.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if cfg.fmt == "json":
        print(json.dumps(env, indent=2))
    else:
        print(render_text(env, code))
    return code


if __name__ == "__main__":
    sys.exit(main())
