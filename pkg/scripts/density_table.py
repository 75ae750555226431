#!/usr/bin/env python3
"""Proportion of primes p <= X dividing some element of an orbit, at several X.

    python3 scripts/density_table.py --family odoni:3,2 --a0 2 --xmax 100000 --jobs 4
"""

import argparse
from fractions import Fraction

from arboreal.certificates import density_experiment
from arboreal.cli import parse_family


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="odoni:3,2")
    ap.add_argument("--a0", default="2")
    ap.add_argument("--xmax", type=int, default=10**5)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    fam = parse_family(args.family)
    cps = [10**e for e in range(2, 12) if 10**e < args.xmax]
    res = density_experiment(fam, Fraction(args.a0), args.xmax, checkpoints=cps, jobs=args.jobs)
    print(f"family {args.family}, a0 = {args.a0}, orbit growing: {res['orbit_growing']}")
    print(f"{'X':>10} {'primes':>8} {'members':>8} {'proportion':>11}")
    for row in res["table"]:
        print(f"{row['X']:>10} {row['primes']:>8} {row['members']:>8} {row['proportion']:>11.5f}")


if __name__ == "__main__":
    main()
