"""Classify the built-in fixture tables, with and without the s1/s2 exchange."""

import argparse

from diopiped.coverage import classify
from diopiped.fixtures import table1, table2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", action="store_true", help="list each row and its inversion")
    args = ap.parse_args()
    rows = [r["s"] for r in table1()] + table2()
    for positional in (False, True):
        report = classify(rows, positional=positional)
        label = "positional" if positional else "full orbit"
        print(f"{label:11s} total {report.total} covered {report.covered} anomalous {report.anomalous}")
        if args.show:
            for e in report.entries:
                params = ", ".join(str(p) for p in e.params)
                print(f"    {str(e.s):45s} {e.via or '-':9s} {params}")


if __name__ == "__main__":
    main()
