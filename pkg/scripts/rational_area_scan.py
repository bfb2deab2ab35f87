"""Scan family pipeds for rational face area, volume or lattice embedding."""

import argparse
import time
from collections import Counter
from fractions import Fraction
from itertools import product

from diopiped.families import points
from diopiped.geometry import geometric_valid_s, rational_area_volume_lattice, reconstruct


def sweep(h):
    qs = sorted({Fraction(p, q) for p in range(1, h + 1) for q in range(1, h + 1)})
    ints = [(m, n) for m in range(1, h + 1) for n in range(1, h + 1)]
    yield from points("P1_RAT", [(q,) for q in qs])
    yield from points("P2_RAT", [(q,) for q in qs])
    for k in range(1, 5):
        yield from points(f"P1_SET{k}", ints)
    yield from points("P2_INT", ints)
    yield from points("GEN_RAT", product(qs, qs))
    yield from points("OBTUSE", [(n,) for n in range(2, h + 1)])
    yield from points("ACUTE", product(range(2, h + 1), range(2, h + 1)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=20, help="parameter height bound")
    args = ap.parse_args()
    t0 = time.perf_counter()
    total, valid = Counter(), Counter()
    hits = []
    for fp in sweep(args.height):
        total[fp.family] += 1
        if fp.degenerate or not geometric_valid_s(fp.s):
            continue
        valid[fp.family] += 1
        flags = rational_area_volume_lattice(reconstruct(fp.s))
        if any(flags):
            hits.append((fp.family, fp.params, str(fp.s), flags))
    for fam in sorted(total):
        print(f"{fam:8s} points {total[fam]:6d} valid {valid[fam]:6d}")
    print(f"total {sum(total.values())} valid {sum(valid.values())} "
          f"counterexamples {len(hits)} ({time.perf_counter() - t0:.1f}s)")
    for h in hits:
        print(*h)


if __name__ == "__main__":
    main()
