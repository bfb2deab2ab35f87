"""Command-line interface.

Exit codes: 0 success / true, 1 verified false, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import fixtures
from .coverage import classify, emit_plot_points, plot_csv
from .exact import format_rational, parse_rational
from .families import DegenerateError, FamilyPoint, point
from .geometry import cos_angle, integerize, rational_area_volume_lattice, reconstruct, validate_geometric
from .search import SearchConfig, enumerate_solutions, import_records, write_records
from .sspace import SParams, governing_residual, is_solution, normalize, sharipov_feasible

log = logging.getLogger("diopiped")


class UsageError(Exception):
    pass


def _sparams(text: str) -> SParams:
    try:
        return SParams.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--s: {exc}") from None


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_verify(args) -> int:
    s = _sparams(args.s)
    residual = governing_residual(s)
    ok = is_solution(s)
    print(f"s          {s}")
    print(f"residual   {format_rational(residual)}")
    print(f"solution   {ok}")
    print(f"canonical  {normalize(s)}")
    print(f"feasible   {sharipov_feasible(normalize(s))}")
    print(f"geometric  {validate_geometric(reconstruct(s)) if ok else False}")
    return 0 if ok else 1


def cmd_reconstruct(args) -> int:
    s = _sparams(args.s)
    if not is_solution(s):
        raise UsageError(f"--s: {s} is not a nondegenerate solution (residual {format_rational(governing_residual(s))})")
    piped = reconstruct(s)
    print(integerize(piped) if args.integer else piped)
    print(f"cos {format_rational(cos_angle(piped))}")
    if validate_geometric(piped):
        flags = rational_area_volume_lattice(piped)
        print(f"geometric True area_rational {flags.area_rational} volume_rational {flags.volume_rational} "
              f"lattice_embeddable {flags.lattice_embeddable}")
    else:
        print("geometric False")
    return 0


_NAMES = {
    "pattern1": ("P1_SET1", "P1_SET2", "P1_SET3", "P1_SET4"),
    "pattern1-rat": ("P1_RAT",),
    "pattern2": ("P2_INT",),
    "pattern2-rat": ("P2_RAT",),
    "obtuse": ("OBTUSE",),
    "acute": ("ACUTE",),
}
_INTEGER_PARAMS = {"P1_SET1", "P1_SET2", "P1_SET3", "P1_SET4", "P2_INT", "GEN_INT", "OBTUSE", "ACUTE"}


def _family_codes(name: str, nparams: int) -> tuple:
    if name == "general":
        return ("GEN_INT",) if nparams == 4 else ("GEN_RAT",)
    return _NAMES[name]


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"--range: expected START..STOP, got {text!r}") from None


def cmd_family(args) -> int:
    try:
        base = [parse_rational(p) for p in args.params.replace(",", " ").split()] if args.params else []
    except ValueError as exc:
        raise UsageError(f"--params: {exc}") from None
    param_sets = [base] if args.range is None else [base + [v] for v in _range(args.range)]
    lines = []
    for params in param_sets:
        for code in _family_codes(args.name, len(params)):
            if code in _INTEGER_PARAMS:
                if any(p.denominator != 1 for p in params):
                    raise UsageError(f"--params: {args.name} takes integer parameters")
                call = [int(p) for p in params]
            else:
                call = params
            try:
                pt = point(code, *call)
            except DegenerateError as exc:
                if args.range is None:
                    raise UsageError(f"--params: {exc}") from None
                log.warning("skipping %s%s: %s", code, tuple(call), exc)
                continue
            except TypeError:
                raise UsageError(f"--params: wrong number of parameters for {args.name}") from None
            lines.append(pt.to_line() + "\n")
    _write("".join(lines), args.out)
    return 0


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            height=args.height,
            fixed_s1=parse_rational(args.fix_s1) if args.fix_s1 else None,
            mode="ORACLE" if args.oracle else "REDUCED",
            checkpoint_path=args.checkpoint,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    n = write_records(enumerate_solutions(cfg), args.out)
    log.info("%d solutions written to %s", n, args.out)
    return 0


def cmd_cover(args) -> int:
    records = import_records(args.input)
    report = classify(records, positional=args.positional)
    _write(json.dumps(report.to_json(), indent=1) + "\n", args.out)
    print(f"total {report.total} covered {report.covered} anomalous {report.anomalous}", file=sys.stderr)
    return 0


def cmd_plot_data(args) -> int:
    records = import_records(args.input)
    _write(plot_csv(emit_plot_points(records)), args.out)
    return 0


def cmd_fixtures(args) -> int:
    _write("".join(line + "\n" for line in fixtures.emit(args.emit)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diopiped", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check an s-parameter set")
    p.add_argument("--s", required=True, help='"s1,s2,s3,s4" as p/q')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", help="build the piped of a solution")
    p.add_argument("--s", required=True)
    p.add_argument("--integer", action="store_true", help="print the primitive integer piped")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("family", help="generate parameterized solutions as JSONL")
    p.add_argument("--name", required=True, choices=[*_NAMES, "general"])
    p.add_argument("--params", default="", help="comma-separated leading parameters")
    p.add_argument("--range", help="START..STOP, appended as the last integer parameter")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="bounded-height search")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--fix-s1")
    p.add_argument("--oracle", action="store_true", help="brute-force mode")
    p.add_argument("--checkpoint", type=Path)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cover", help="classify records against the parameterizations")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--positional", action="store_true", help="never exchange s1 and s2 when matching")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("plot-data", help="x = s3 - s4, y = numerator(s2) points as CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("fixtures", help="emit built-in tables as JSONL")
    p.add_argument("--emit", required=True, choices=["table1", "table2", "acute18"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
