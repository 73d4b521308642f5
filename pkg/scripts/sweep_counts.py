#!/usr/bin/env python3
"""Sweep C4 over a (p, t) grid and check the three counting routes and the genus identity.

    python scripts/sweep_counts.py --max 200
"""

import argparse
import itertools
import math
import time

from repvar.counting import GroupParams, c4, c4_case_expressions, c4_oracle, genus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=100)
    args = ap.parse_args()

    start = time.perf_counter()
    disagreements = genus_mismatch = coprime = 0
    for p, t in itertools.product(range(2, args.max + 1), repeat=2):
        P = GroupParams(p, t)
        n = c4(P)
        if not n == c4_case_expressions(P) == c4_oracle(P) == c4(GroupParams(t, p)):
            disagreements += 1
            print(f"disagreement at p={p} t={t}")
        if math.gcd(p, t) == 1:
            coprime += 1
            genus_mismatch += genus(P) != n
    pairs = (args.max - 1) ** 2
    print(f"pairs={pairs} disagreements={disagreements}")
    print(f"coprime pairs={coprime} genus mismatches={genus_mismatch}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
