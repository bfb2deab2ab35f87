"""Bounded-height search for s-parameter solutions.

The search space is every quadruple with entries in the Farey set
F_H = {p/q in (0, 1) : q <= H}; every symmetry class of solutions with all
canonical entries of height <= H has a representative there.

Two modes enumerate the same space:

REDUCED
    fixes (s1, s2, s3) and solves the governing polynomial, which is a
    palindromic quadratic in s4^2, for s4.
ORACLE
    brute force over s4 as well, filtering on a zero residual.

Work is split into outer (s1, s2) pairs, processed and checkpointed in a
fixed order, so output does not depend on worker count or on where a run was
interrupted.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .exact import farey_interior, format_rational, parse_rational, rat
from .geometry import geometric_valid_s
from .sspace import (
    SParams,
    governing_residual,
    is_degenerate,
    is_solution,
    normalize,
    sharipov_feasible,
    solve_for_s4,
    unit_form,
)

log = logging.getLogger(__name__)

MODES = ("REDUCED", "ORACLE")
PROVENANCES = ("SEARCH", "FAMILY", "IMPORT")


@dataclass
class SearchConfig:
    height: int
    fixed_s1: Optional[Fraction] = None
    mode: str = "REDUCED"
    checkpoint_path: Optional[Path] = None
    workers: int = 1

    def __post_init__(self):
        if self.height < 2:
            raise ValueError(f"height bound must be >= 2, got {self.height}")
        if self.fixed_s1 is not None:
            self.fixed_s1 = rat(self.fixed_s1)
            if not 0 < self.fixed_s1 < 1:
                raise ValueError(f"fixed s1 must lie in (0, 1), got {self.fixed_s1}")
        self.mode = self.mode.upper()
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.checkpoint_path is not None:
            self.checkpoint_path = Path(self.checkpoint_path)
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SolutionRecord:
    canonical: SParams
    feasible: bool
    geometric_valid: bool
    provenance: str = "SEARCH"
    raw: Optional[SParams] = field(default=None, compare=False)
    family: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if normalize(self.canonical) != self.canonical:
            raise ValueError(f"{self.canonical} is not in canonical form")
        if governing_residual(self.canonical) != 0:
            raise ValueError(f"{self.canonical} has nonzero residual")

    @property
    def height(self) -> int:
        return self.canonical.height

    @classmethod
    def from_sparams(
        cls, s: SParams, provenance: str = "SEARCH", raw: Optional[SParams] = None, family: Optional[str] = None
    ) -> "SolutionRecord":
        c = normalize(s)
        return cls(c, sharipov_feasible(c), geometric_valid_s(c), provenance, raw, family)

    def to_json(self) -> dict:
        out = {
            "s": self.canonical.to_strings(),
            "height": self.height,
            "residual": format_rational(governing_residual(self.canonical)),
            "feasible": self.feasible,
            "geometric_valid": self.geometric_valid,
            "provenance": self.provenance,
        }
        if self.raw is not None:
            out["raw"] = self.raw.to_strings()
        if self.family is not None:
            out["family"] = self.family
        return out

    def to_line(self) -> str:
        return json.dumps(self.to_json())


# -- work units --------------------------------------------------------------


def _reduced_pair(s1: Fraction, s2: Fraction, grid: tuple, h: int) -> list[SParams]:
    found = []
    for s3 in grid:
        for s4 in solve_for_s4(s1, s2, s3):
            if s4 >= 1 or s4.denominator > h:
                continue
            cand = SParams(s1, s2, s3, s4)
            if is_solution(cand):
                found.append(normalize(cand))
    return found


def _oracle_pair(s1: Fraction, s2: Fraction, grid: tuple, h: int) -> list[SParams]:
    found = []
    for i, s3 in enumerate(grid):
        for s4 in grid[i:]:  # s3 <= s4 suffices: the swap is a symmetry
            cand = SParams(s1, s2, s3, s4)
            if not is_degenerate(cand) and governing_residual(cand) == 0:
                found.append(normalize(cand))
    return found


def _work(args) -> list[SParams]:
    mode, s1, s2, grid, h = args
    fn = _reduced_pair if mode == "REDUCED" else _oracle_pair
    return fn(s1, s2, grid, h)


def outer_pairs(cfg: SearchConfig) -> list[tuple[Fraction, Fraction]]:
    grid = list(farey_interior(cfg.height))
    if cfg.fixed_s1 is not None:
        return [(cfg.fixed_s1, s2) for s2 in grid]
    return [(s1, s2) for i, s1 in enumerate(grid) for s2 in grid[i:]]


# -- checkpointing -----------------------------------------------------------


def _sidecar(path: Path) -> Path:
    return path.with_name(path.name + ".records.jsonl")


def read_checkpoint(path: Path) -> Optional[tuple[Fraction, Fraction]]:
    if not path.exists():
        return None
    text = path.read_text().strip()
    if not text:
        return None
    try:
        parts = dict(tok.split("=", 1) for tok in text.split())
        return parse_rational(parts["s1"]), parse_rational(parts["s2"])
    except (KeyError, ValueError):
        raise ValueError(f"malformed checkpoint file {path}: {text!r}") from None


def write_checkpoint(path: Path, s1: Fraction, s2: Fraction) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(f"s1={format_rational(s1)} s2={format_rational(s2)}\n")
    os.replace(tmp, path)


def _load_sidecar(path: Path) -> set:
    found = set()
    if path.exists():
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    found.add(SParams.of(*json.loads(line)))
    return found


def run_pairs(cfg: SearchConfig, limit: Optional[int] = None) -> tuple[set, bool]:
    """Process outer pairs, resuming from the checkpoint if one exists.

    Returns the canonical solutions found so far and whether the whole space
    was covered.  ``limit`` caps the number of pairs handled in this call,
    which is how an interrupted run is simulated.
    """
    pairs = outer_pairs(cfg)
    grid = tuple(farey_interior(cfg.height))
    start = 0
    found: set = set()
    sink = None
    ckpt = cfg.checkpoint_path
    if ckpt is not None:
        done = read_checkpoint(ckpt)
        if done is not None:
            try:
                start = pairs.index(done) + 1
            except ValueError:
                raise ValueError(f"checkpoint {done} does not belong to this search configuration") from None
            found = _load_sidecar(_sidecar(ckpt))
            log.info("resuming after s1=%s s2=%s (%d solutions so far)", *done, len(found))
        else:
            _sidecar(ckpt).unlink(missing_ok=True)
        sink = open(_sidecar(ckpt), "a")  # raises if the location is unwritable

    todo = pairs[start:] if limit is None else pairs[start : start + limit]
    jobs = ((cfg.mode, s1, s2, grid, cfg.height) for s1, s2 in todo)
    executor = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        results = executor.map(_work, jobs, chunksize=8) if executor else map(_work, jobs)
        for (s1, s2), sols in zip(todo, results):
            new = [s for s in sols if s not in found]
            found.update(new)
            if sink is not None:
                for s in sorted(set(new)):
                    sink.write(json.dumps(s.to_strings()) + "\n")
                sink.flush()
                os.fsync(sink.fileno())
                write_checkpoint(ckpt, s1, s2)
    finally:
        if executor is not None:
            executor.shutdown()
        if sink is not None:
            sink.close()
    complete = start + len(todo) >= len(pairs)
    return found, complete


def enumerate_solutions(cfg: SearchConfig) -> Iterator[SolutionRecord]:
    """All canonical solutions in the configured space, sorted lexicographically."""
    found, complete = run_pairs(cfg)
    assert complete
    for s in sorted(found):
        if governing_residual(s) != 0:  # re-check at emission
            raise AssertionError(f"emitting a non-solution {s}")
        yield SolutionRecord.from_sparams(s, "SEARCH")


# -- persistence -------------------------------------------------------------


def write_records(records: Iterable[SolutionRecord], path) -> int:
    n = 0
    with open(path, "w") as fh:
        for rec in records:
            fh.write(rec.to_line() + "\n")
            n += 1
    return n


def import_records(path, rejected: Optional[list] = None) -> list[SolutionRecord]:
    """Read a JSONL file of s-parameter sets into canonical records.

    Each line needs an ``"s"`` list of four "p/q" strings; other keys of the
    record schema are optional.  Malformed lines raise ValueError naming the
    line.  Lines that parse but are not solutions are skipped; when
    ``rejected`` is given, ``(line_number, reason)`` is appended to it.
    """
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                entries = [parse_rational(x) for x in obj["s"]]
                raw_entries = [parse_rational(x) for x in obj.get("raw", obj["s"])]
                if len(entries) != 4 or len(raw_entries) != 4:
                    raise ValueError("expected 4 entries")
            except (ValueError, KeyError, TypeError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed record ({exc})") from None
            reason = None
            if any(v == 0 for v in entries):
                reason = "zero entry"
            elif not is_solution(SParams(*entries)):
                reason = "degenerate" if is_degenerate(SParams(*entries)) else "nonzero residual"
            if reason is not None:
                log.warning("%s:%d rejected: %s", path, lineno, reason)
                if rejected is not None:
                    rejected.append((lineno, reason))
                continue
            raw = SParams(*raw_entries)
            provenance = obj.get("provenance", "FAMILY" if "family" in obj else "IMPORT")
            out.append(SolutionRecord.from_sparams(SParams(*entries), provenance, raw, obj.get("family")))
    return out
