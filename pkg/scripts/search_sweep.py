"""Time REDUCED against ORACLE search over a range of height bounds."""

import argparse
import time
from fractions import Fraction

from diopiped.search import SearchConfig, enumerate_solutions


def timed(cfg):
    t0 = time.perf_counter()
    found = [r.canonical for r in enumerate_solutions(cfg)]
    return found, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-height", type=int, default=12)
    ap.add_argument("--fix-s1", type=Fraction)
    ap.add_argument("--no-oracle", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    print("H  reduced_s  oracle_s  count  agree")
    for h in range(2, args.max_height + 1):
        reduced, tr = timed(SearchConfig(h, args.fix_s1, workers=args.workers))
        if args.no_oracle:
            print(f"{h:<2d} {tr:9.2f}  {'-':>8s}  {len(reduced):5d}  -")
            continue
        oracle, to = timed(SearchConfig(h, args.fix_s1, mode="ORACLE", workers=args.workers))
        print(f"{h:<2d} {tr:9.2f}  {to:8.2f}  {len(reduced):5d}  {reduced == oracle}")
    for s in reduced:
        print(s)


if __name__ == "__main__":
    main()
