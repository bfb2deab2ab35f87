"""Which solutions do the closed-form families explain?

Inversion walks the symmetry orbit of a solution, solves for the family
parameter from two of the entries, and accepts only when regenerating the
family at that parameter reproduces the orbit member exactly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import format_rational, height, solve_quadratic
from .families import DegenerateError, FamilyPoint, general_rat, pattern1_rat
from .search import SolutionRecord
from .sspace import SParams, equivalent, orbit

HALF = Fraction(1, 2)


def _root_key(r: Fraction):
    # positive roots first, then the smaller height
    return (r.numerator <= 0, height(r), r)


def invert_general(v: SParams, positional: bool = False) -> Optional[tuple[Fraction, Fraction]]:
    """(s, r) with general_rat(s, r) in the orbit of v, or None.

    On the family, (s3 + s4) / (s3 - s4) = (r^2 - 1) / (2r), so r is a root
    of r^2 - 2kr - 1 = 0.  The two roots are r and -1/r; the one with a
    positive numerator is returned.

    ``positional=True`` never exchanges s1 and s2, i.e. s must be (up to sign
    and reciprocal) the first entry of v.
    """
    for rep in orbit(v, swap12=not positional):
        s1, _, s3, s4 = rep
        if s3 == s4:
            continue
        k = (s3 + s4) / (s3 - s4)
        for r in solve_quadratic(1, -2 * k, -1):
            try:
                if general_rat(s1, r) != rep:
                    continue
            except DegenerateError:
                continue
            # -1/r only negates s3 and s4, so it regenerates an equivalent set
            alt = -1 / r
            assert equivalent(general_rat(s1, alt), rep)
            return s1, min((r, alt), key=_root_key)
    return None


def invert_pattern1(v: SParams, positional: bool = False) -> Optional[Fraction]:
    """q with pattern1_rat(q) in the orbit of v, or None.

    s4 = (q^2 + 2q - 1) / (2q^2 + 2) rearranges to
    (2 s4 - 1) q^2 - 2q + (2 s4 + 1) = 0.
    """
    for rep in orbit(v, swap12=not positional):
        if rep.s1 != HALF:
            continue
        s4 = rep.s4
        hits = []
        for q in solve_quadratic(2 * s4 - 1, -2, 2 * s4 + 1):
            try:
                if pattern1_rat(q) == rep:
                    hits.append(q)
            except DegenerateError:
                continue
        if hits:
            return min(hits, key=_root_key)
    return None


@dataclass
class CoverageEntry:
    s: SParams
    via: Optional[str] = None
    params: tuple = ()

    @property
    def covered(self) -> bool:
        return self.via is not None

    def to_json(self) -> dict:
        return {
            "s": self.s.to_strings(),
            "covered": self.covered,
            "via": self.via,
            "params": [format_rational(p) for p in self.params],
        }


@dataclass
class CoverageReport:
    entries: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def covered(self) -> int:
        return sum(e.covered for e in self.entries)

    @property
    def anomalous(self) -> int:
        return self.total - self.covered

    def anomalies(self) -> list[SParams]:
        return [e.s for e in self.entries if not e.covered]

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "covered": self.covered,
            "anomalous": self.anomalous,
            "records": [e.to_json() for e in self.entries],
        }


def classify_one(s: SParams, positional: bool = False) -> CoverageEntry:
    hit = invert_general(s, positional)
    if hit is not None:
        return CoverageEntry(s, "general", hit)
    q = invert_pattern1(s, positional)
    if q is not None:
        return CoverageEntry(s, "pattern1", (q,))
    return CoverageEntry(s)


def classify(records: Iterable, positional: bool = False) -> CoverageReport:
    """Split records into covered and anomalous.

    Records are classified as given (the raw form when a record carries one),
    since positional matching depends on which entry sits first.
    """
    report = CoverageReport()
    for rec in records:
        if isinstance(rec, SolutionRecord):
            s = rec.raw if rec.raw is not None else rec.canonical
        else:
            s = rec
        report.entries.append(classify_one(s, positional))
    return report


# -- plot data ---------------------------------------------------------------


@dataclass(frozen=True)
class PlotPoint:
    x: Fraction
    y: int
    family: str

    @property
    def loggable(self) -> bool:
        return self.x != 0

    def x_abs_text(self) -> str:
        ax = abs(self.x)
        with localcontext() as ctx:
            ctx.prec = 30
            value = Decimal(ax.numerator) / Decimal(ax.denominator)
        return f"{value:.12g}"


def plot_point(item) -> PlotPoint:
    if isinstance(item, FamilyPoint):
        s, tag = item.s, item.family
    elif isinstance(item, SolutionRecord):
        s = item.raw if item.raw is not None else item.canonical
        tag = item.family or item.provenance
    else:
        s, tag = item, ""
    return PlotPoint(s.s3 - s.s4, s.s2.numerator, tag)


def emit_plot_points(items: Sequence) -> list[PlotPoint]:
    return [plot_point(it) for it in items]


def plot_csv(points: Sequence[PlotPoint]) -> str:
    """CSV text; rows with x = 0 carry x_abs = 0 and cannot go on a log axis."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x_exact", "x_abs", "y", "family"])
    for p in points:
        w.writerow([format_rational(p.x), p.x_abs_text(), p.y, p.family])
    return buf.getvalue()
