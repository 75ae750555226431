#!/usr/bin/env python3
"""Level-by-level certificates for a range of x^p + kp x^(p-1) - kp.

    python3 scripts/tower_survey.py --primes 3 5 7 --ks 1 2 4 --depth 5
"""

import argparse

from arboreal.certificates import odoni_tower


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11, 13])
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2, 3, 4, 7])
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--digit-budget", type=int, default=100_000)
    args = ap.parse_args()

    print(f"{'p':>3} {'k':>3}  {'proof':<18} verdicts / witness primes")
    for p in args.primes:
        for k in args.ks:
            if k % p == 0:
                continue
            r = odoni_tower(p, k, args.depth, args.digit_budget)
            cells = []
            for lvl in r.levels:
                w = lvl.evidence.get("witness_prime", "-")
                cells.append(f"{lvl.verdict[0].upper()}:{w}")
            print(f"{p:>3} {k:>3}  {str(r.proof or ''):<18} {' '.join(cells)}")


if __name__ == "__main__":
    main()
