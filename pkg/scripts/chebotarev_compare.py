#!/usr/bin/env python3
"""Compare Frobenius cycle types of second iterates with the two candidate groups.

For x^3+6x^2-6 and x^3+7x^2-7, tabulate the empirical cycle-type frequencies
over primes up to --pmax next to the exact frequencies in the full depth-2
wreath product (order 1296) and its root-restricted subgroup (order 648).
"""

import argparse

from arboreal.galois import (
    exact_cycle_distribution,
    frobenius_distribution,
    index2_candidate,
    total_variation,
    wreath_generators,
)
from arboreal.poly import Poly, iterate

MAPS = {"x^3+6x^2-6": Poly((-6, 0, 6, 1)), "x^3+7x^2-7": Poly((-7, 0, 7, 1))}


def main():
    ap = argparse.ArgumentParser(description="Chebotarev comparison at depth 2")
    ap.add_argument("--pmax", type=int, default=10**5)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    full = exact_cycle_distribution(wreath_generators(3, 2))
    sub = exact_cycle_distribution(index2_candidate())
    print(f"TV(D1296, D648) = {total_variation(full, sub)}")
    emp = {name: frobenius_distribution(iterate(f, 2), args.pmax, jobs=args.jobs) for name, f in MAPS.items()}

    keys = sorted(full.freq, key=lambda k: [-int(x) for x in k.split("+")])
    head = f"{'cycle type':<20}{'D1296':>9}{'D648':>9}" + "".join(f"{n:>13}" for n in emp)
    print(head)
    for k in keys:
        row = f"{k:<20}{float(full.get(k)):>9.4f}{float(sub.get(k)):>9.4f}"
        row += "".join(f"{float(e.get(k)):>13.4f}" for e in emp.values())
        print(row)
    for name, e in emp.items():
        print(f"{name}: {e.samples} primes sampled, {e.skipped} skipped, "
              f"TV to D1296 = {float(total_variation(e, full)):.4f}, "
              f"TV to D648 = {float(total_variation(e, sub)):.4f}")


if __name__ == "__main__":
    main()
