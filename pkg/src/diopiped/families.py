"""Closed-form parameterizations of s-parameter solutions.

Every generator returns the quadruple exactly as its formula produces it
(unnormalized).  Formulas whose denominators vanish, or which would produce a
zero entry, raise :class:`DegenerateError`.  :class:`FamilyPoint` wraps a
generated quadruple with its provenance and validity flags.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, format_rational, rat
from .geometry import geometric_valid_s
from .sspace import SParams, governing_residual, is_degenerate, normalize, sharipov_feasible

FAMILIES = (
    "P1_SET1",
    "P1_SET2",
    "P1_SET3",
    "P1_SET4",
    "P1_INT",
    "P1_RAT",
    "P2_INT",
    "P2_RAT",
    "GEN_INT",
    "GEN_RAT",
    "OBTUSE",
    "ACUTE",
)


class DegenerateError(ValueError):
    pass


def _quad(*entries) -> SParams:
    try:
        return SParams(*entries)
    except ValueError as exc:
        raise DegenerateError(f"degenerate parameter: {exc}") from None


def _div(num, den) -> Fraction:
    if den == 0:
        raise DegenerateError("degenerate parameter: zero denominator")
    return Fraction(num) / Fraction(den)


# -- pattern 1: [1/2, c/a, c/b, a/b] ----------------------------------------


def sum2squares_param(m: int, n: int) -> tuple[int, int, int]:
    """(alpha, beta, gamma) with alpha^2 + beta^2 = 2 gamma^2."""
    if m == 0 and n == 0:
        raise ValueError("(m, n) = (0, 0)")
    return 2 * m * n + m * m - n * n, 2 * m * n + n * n - m * m, m * m + n * n


def pattern1_abc(m: int, n: int) -> list[tuple[int, int, int]]:
    """The (a, b, c) integer triples behind the four pattern-1 sets."""
    alpha, beta, gamma = sum2squares_param(m, n)
    p = n * n + 2 * n * m - m * m  # == beta
    q = m * m + 2 * n * m - n * n  # == alpha
    return [
        (alpha, 2 * gamma, beta),
        (beta, 2 * gamma, alpha),
        (2 * p * gamma, p * alpha, 2 * (m**4 + 2 * n * m**3 + 2 * n**3 * m - n**4)),
        (2 * q * gamma, q * beta, 2 * (-(m**4) + 2 * n * m**3 + 2 * n**3 * m + n**4)),
    ]


def pattern1_four_sets(m: int, n: int) -> list[SParams]:
    if m == 0 or n == 0 or abs(m) == abs(n):
        raise DegenerateError(f"degenerate parameter pair (m, n) = ({m}, {n})")
    alpha, beta, gamma = sum2squares_param(m, n)
    g2 = 2 * gamma
    half = Fraction(1, 2)
    c13 = m * m - 2 * m * n - n * n
    c14 = n * n - 2 * n * m - m * m
    try:
        sets = [
            _quad(half, _div(beta, alpha), _div(beta, g2), _div(alpha, g2)),
            _quad(half, _div(alpha, beta), _div(alpha, g2), _div(beta, g2)),
            _quad(half, _div(alpha, beta), _div(g2, beta), _div(g2, alpha)),
            _quad(half, _div(c13, c14), _div(g2, alpha), _div(g2, beta)),
        ]
    except DegenerateError:
        raise DegenerateError(f"degenerate parameter pair (m, n) = ({m}, {n})") from None
    if any(is_degenerate(s) for s in sets):
        raise DegenerateError(f"degenerate parameter pair (m, n) = ({m}, {n})")
    return sets


def pattern1_int(m: int, n: int) -> SParams:
    return pattern1_four_sets(m, n)[0]


def pattern1_rat(q: RationalLike) -> SParams:
    q = rat(q)
    lo = q * q + 2 * q - 1
    hi = -q * q + 2 * q + 1
    return _quad(Fraction(1, 2), _div(hi, lo), _div(hi, 2 * q * q + 2), _div(lo, 2 * q * q + 2))


# -- pattern 2: [1/2, d/b, d/a, d/c] (reciprocal form) -----------------------


def pattern2_int(m: int, n: int) -> SParams:
    den = 8 * n * m**3 - 8 * n**3 * m
    if den == 0:
        raise DegenerateError(f"degenerate parameter pair (m, n) = ({m}, {n})")
    return _quad(
        Fraction(1, 2),
        _div(-3 * m**4 + 18 * n * n * m * m - 3 * n**4, den),
        _div(3 * m**4 + 6 * n * m**3 + 6 * n**3 * m - 3 * n**4, den),
        _div(3 * m**4 - 6 * n * m**3 - 6 * n**3 * m - 3 * n**4, den),
    )


def pattern2_rat(q: RationalLike) -> SParams:
    q = rat(q)
    den = 8 * q**3 - 8 * q
    if den == 0:
        raise DegenerateError(f"degenerate parameter q = {q}")
    return _quad(
        Fraction(1, 2),
        _div(-3 * q**4 + 18 * q * q - 3, den),
        _div(3 * q**4 + 6 * q**3 + 6 * q - 3, den),
        _div(3 * q**4 - 6 * q**3 - 6 * q - 3, den),
    )


def pattern2_d(m: int, n: int) -> int:
    """Common numerator d = 8mn(m - n)(m + n) of the integer pattern-2 set."""
    return 8 * m * n * (m - n) * (m + n)


# -- general parameterization ------------------------------------------------


def general_int(r: int, s: int, m: int, n: int) -> SParams:
    if s * r == 0 or m * n == 0 or abs(m) == abs(n):
        raise DegenerateError(f"degenerate parameter (r, s, m, n) = ({r}, {s}, {m}, {n})")
    k = r * r - s * s
    den = 4 * s * r * n * m**3 - 4 * s * r * n**3 * m
    return _quad(
        Fraction(r, s),
        _div(k * m**4 - 6 * k * n * n * m * m + k * n**4, den),
        _div(-k * m**4 - 2 * k * n * m**3 - 2 * k * n**3 * m + k * n**4, den),
        _div(k * m**4 - 2 * k * n * m**3 - 2 * k * n**3 * m - k * n**4, -den),
    )


def general_rat(s: RationalLike, r: RationalLike) -> SParams:
    s, r = rat(s), rat(r)
    if s == 0 or r == 0 or abs(r) == 1:
        raise DegenerateError(f"degenerate parameter (s, r) = ({s}, {r})")
    k = s * s - 1
    den = 4 * s * r**3 - 4 * s * r
    return _quad(
        s,
        _div(k * r**4 - 6 * k * r * r + k, den),
        _div(-k * r**4 - 2 * k * r**3 - 2 * k * r + k, den),
        _div(k * r**4 - 2 * k * r**3 - 2 * k * r - k, -den),
    )


def t_general(s: RationalLike, r: RationalLike) -> Fraction:
    """s3 - s4 of general_rat(s, r); zero exactly at the cuboid limit s = 1."""
    s, r = rat(s), rat(r)
    if s == 0 or r == 0 or abs(r) == 1:
        raise DegenerateError(f"degenerate parameter (s, r) = ({s}, {r})")
    return ((1 - s * s) * r * r + (1 - s * s)) / (s * r * r - s)


def t_general_int(r: int, s: int, m: int, n: int) -> Fraction:
    if s * r == 0 or m * n == 0 or abs(m) == abs(n):
        raise DegenerateError(f"degenerate parameter (r, s, m, n) = ({r}, {s}, {m}, {n})")
    k = s * s - r * r
    return Fraction(k * m * m + k * n * n, s * r * m * m - s * r * n * n)


# -- provenance wrapper ------------------------------------------------------


@dataclass(frozen=True)
class FamilyPoint:
    family: str
    params: tuple
    s: SParams

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if governing_residual(self.s) != 0:
            raise ValueError(f"{self.family}{self.params} does not satisfy the governing equation")

    @property
    def canonical(self) -> SParams:
        return normalize(self.s)

    @property
    def degenerate(self) -> bool:
        return is_degenerate(self.s)

    @property
    def feasible(self) -> bool:
        return sharipov_feasible(self.canonical)

    @property
    def geometric_valid(self) -> bool:
        return geometric_valid_s(self.s)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": [format_rational(p) for p in self.params],
            "s": self.s.to_strings(),
            "canonical": self.canonical.to_strings(),
            "feasible": self.feasible,
            "geometric_valid": self.geometric_valid,
            "degenerate": self.degenerate,
        }

    def to_line(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyPoint":
        return cls(obj["family"], tuple(rat(p) for p in obj["params"]), SParams.of(*obj["s"]))


_GENERATORS = {
    "P1_INT": pattern1_int,
    "P1_RAT": pattern1_rat,
    "P2_INT": pattern2_int,
    "P2_RAT": pattern2_rat,
    "GEN_INT": general_int,
    "GEN_RAT": general_rat,
}


def point(family: str, *params) -> FamilyPoint:
    """Generate one FamilyPoint by family name."""
    if family.startswith("P1_SET"):
        idx = int(family[-1]) - 1
        return FamilyPoint(family, params, pattern1_four_sets(*params)[idx])
    if family in ("OBTUSE", "ACUTE"):
        from . import asymptotics

        fn = asymptotics.obtuse if family == "OBTUSE" else asymptotics.acute
        return FamilyPoint(family, params, fn(*params))
    try:
        fn = _GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return FamilyPoint(family, tuple(params), fn(*params))


def points(family: str, param_list: Sequence[Sequence]) -> list[FamilyPoint]:
    """Generate many points, silently skipping parameters whose formula is undefined."""
    out = []
    for params in param_list:
        try:
            out.append(point(family, *params))
        except DegenerateError:
            continue
    return out
