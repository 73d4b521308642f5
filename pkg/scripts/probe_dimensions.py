#!/usr/bin/env python3
"""Local-dimension probes on the asserted 4-dim components and off S for a range of (p, t).

    python scripts/probe_dimensions.py --max 8 --samples 10 --seed 7
"""

import argparse
import itertools
import time

from repvar.counting import GroupParams
from repvar.probe import verify_theorem_a, verify_theorem_b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=6)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    print(f"{'p':>3} {'t':>3} {'comps':>5} {'A rate':>7} {'A dims':>7} {'B rate':>7} {'B dims':>7}  ok")
    start = time.perf_counter()
    failures = 0
    for p, t in itertools.product(range(2, args.max + 1), repeat=2):
        P = GroupParams(p, t)
        a = verify_theorem_a(P, args.samples, args.seed)
        b = verify_theorem_b(P, args.samples, args.seed)
        ok = a.passed and b.passed
        failures += not ok
        print(
            f"{p:>3} {t:>3} {len(a.groups):>5} {a.conclusive_rate:>7.2f} {str(a.observed_dims):>7} "
            f"{b.conclusive_rate:>7.2f} {str(b.observed_dims):>7}  {'yes' if ok else 'NO'}"
        )
    print(f"failures={failures} elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
