"""Tabulate the monoclinic angle along the obtuse and acute sequences."""

import argparse
import math

from diopiped.asymptotics import acute, acute_t, obtuse, obtuse_t
from diopiped.geometry import cos_angle, reconstruct, validate_geometric
from diopiped.sspace import normalize


def row(label, n, s, t):
    p = reconstruct(normalize(s))
    c = cos_angle(p)
    deg = math.degrees(math.acos(float(c))) if validate_geometric(p) else float("nan")
    print(f"{label:8s} n={n:<3d} t={float(t):+.3e} cos={float(c):+.6f} angle={deg:8.4f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--d", type=int, nargs="*", default=[2, 3, 5, 19])
    args = ap.parse_args()
    for n in range(2, args.n_max + 1):
        row("obtuse", n, obtuse(n), obtuse_t(n))
    for d in args.d:
        for n in range(2, args.n_max + 1):
            row(f"acute/{d}", n, acute(d, n), acute_t(d, n))


if __name__ == "__main__":
    main()
