"""The s-parameter domain.

A quadruple ``[s1, s2, s3, s4]`` of nonzero rationals generates four rational
Pythagorean pairs ``u = (1 - s^2) / (2s)``, ``v = (1 + s^2) / (2s)``.  It
describes a bi-orthogonal monoclinic piped when the face relation
``2 u1^2 + 2 u2^2 = u3^2 + u4^2`` holds, which cleared of denominators is the
degree-10 polynomial evaluated by :func:`governing_residual`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import RationalLike, format_rational, height, rat, rat_sqrt, solve_quadratic


@dataclass(frozen=True, order=True)
class SParams:
    s1: Fraction
    s2: Fraction
    s3: Fraction
    s4: Fraction

    def __post_init__(self):
        for name in ("s1", "s2", "s3", "s4"):
            value = rat(getattr(self, name))
            if value == 0:
                raise ValueError(f"undefined parameter: {name} = 0")
            object.__setattr__(self, name, value)

    @classmethod
    def of(cls, *values: RationalLike) -> "SParams":
        if len(values) == 1 and not isinstance(values[0], (int, str, Fraction)):
            values = tuple(values[0])
        if len(values) != 4:
            raise ValueError(f"expected 4 s-parameters, got {len(values)}")
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "SParams":
        """Parse ``"s1,s2,s3,s4"`` (commas and/or whitespace)."""
        parts = [p for p in text.replace(",", " ").split() if p]
        return cls.of(*parts)

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.s1, self.s2, self.s3, self.s4))

    def __getitem__(self, i: int) -> Fraction:
        return (self.s1, self.s2, self.s3, self.s4)[i]

    def __len__(self) -> int:
        return 4

    def __str__(self) -> str:
        return "[" + ",".join(format_rational(v) for v in self) + "]"

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self]

    @property
    def height(self) -> int:
        return max(height(v) for v in self)


def _powers(q: Fraction) -> tuple[int, int, int]:
    # with s = p/q, the scaled powers q^4, p^2 q^2, p^4 of s^0, s^2, s^4
    p2, q2 = q.numerator**2, q.denominator**2
    return q2 * q2, p2 * q2, p2 * p2


def governing_residual(s: SParams) -> Fraction:
    """Left side of the governing polynomial; zero exactly on solutions.

    In the squares a, b, c, d of s1..s4 the polynomial is

        abc^2d + abcd^2 - 2a^2bcd - 2ab^2cd + 4abcd - 2acd - 2bcd + abc + abd

    evaluated here over the integers after clearing every denominator.
    """
    if not isinstance(s, SParams):
        s = SParams.of(s)
    a0, a1, a2 = _powers(s.s1)
    b0, b1, b2 = _powers(s.s2)
    c0, c1, c2 = _powers(s.s3)
    d0, d1, d2 = _powers(s.s4)
    num = a1 * b1 * (c2 * d1 + c1 * d2 + c1 * d0 + c0 * d1 + 4 * c1 * d1) - 2 * c1 * d1 * (
        a2 * b1 + a1 * b2 + a1 * b0 + a0 * b1
    )
    if num == 0:
        return Fraction(0)
    return Fraction(num, a0 * b0 * c0 * d0)


def is_degenerate(s: SParams) -> bool:
    return any(abs(v) == 1 for v in s)


def is_solution(s) -> bool:
    """Nonzero residual-free quadruple with no entry in {0, +1, -1}."""
    try:
        s = s if isinstance(s, SParams) else SParams.of(s)
    except ValueError:
        return False
    if is_degenerate(s):
        return False
    return governing_residual(s) == 0


def unit_form(q: Fraction) -> Fraction:
    """Representative of {q, -q, 1/q, -1/q} in (0, 1]."""
    q = abs(q)
    return 1 / q if q > 1 else q


def normalize(s: SParams) -> SParams:
    """Canonical representative under reciprocals, signs and within-pair swaps."""
    if not isinstance(s, SParams):
        s = SParams.of(s)
    a, b, c, d = (unit_form(v) for v in s)
    if b < a:
        a, b = b, a
    if d < c:
        c, d = d, c
    return SParams(a, b, c, d)


def equivalent(a: SParams, b: SParams) -> bool:
    return normalize(a) == normalize(b)


def _cubic(s1: Fraction, s2: Fraction, t: Fraction) -> Fraction:
    return s1 * s2 * s2 * t + s1 * s1 * s2 * t - s1 * s2 * t * t + s1 * s2 - s2 * t - s1 * t


def feasibility_cubics(s: SParams) -> tuple[Fraction, Fraction]:
    """The two cubic forms of the feasibility test, for s3 and s4 respectively."""
    return _cubic(s.s1, s.s2, s.s3), _cubic(s.s1, s.s2, s.s4)


def sharipov_feasible(s: SParams) -> bool:
    """All entries in (0, 1) and both feasibility cubics strictly negative."""
    if not all(0 < v < 1 for v in s):
        return False
    c3, c4 = feasibility_cubics(s)
    return c3 < 0 and c4 < 0


def s4_quadratic(s1: RationalLike, s2: RationalLike, s3: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, A) of the governing polynomial as a quadratic in s4^2."""
    a, b, c = rat(s1) ** 2, rat(s2) ** 2, rat(s3) ** 2
    if a * b * c == 0:
        raise ValueError("undefined parameter: s1, s2, s3 must be nonzero")
    lead = a * b * c
    mid = a * b * c * c - 2 * a * a * b * c - 2 * a * b * b * c + 4 * a * b * c - 2 * a * c - 2 * b * c + a * b
    return lead, mid, lead


def solve_for_s4(s1: RationalLike, s2: RationalLike, s3: RationalLike) -> list[Fraction]:
    """Positive rational s4 completing (s1, s2, s3) to a root of the governing polynomial.

    The quadratic in t = s4^2 is palindromic, so the roots t come in
    reciprocal pairs and so do the returned s4.
    """
    lead, mid, const = s4_quadratic(s1, s2, s3)
    out = set()
    for t in solve_quadratic(lead, mid, const):
        r = rat_sqrt(t)
        if r is not None and r > 0:
            out.add(r)
            out.add(1 / r)
    return sorted(out)


_TRANSFORMS = (
    lambda q: q,
    lambda q: 1 / q,
    lambda q: -q,
    lambda q: -1 / q,
)


def orbit(s: SParams, swap12: bool = True) -> Iterator[SParams]:
    """Every member of the symmetry class of s, in a fixed order, identity first.

    Per coordinate: q, 1/q, -q, -1/q; then the within-pair swaps.  Duplicates
    (e.g. when some |s_i| = 1) are not suppressed.  ``swap12=False`` keeps s1
    in the first slot.
    """
    if not isinstance(s, SParams):
        s = SParams.of(s)
    for flip12 in (False, True) if swap12 else (False,):
        for swap34 in (False, True):
            a, b, c, d = s
            if flip12:
                a, b = b, a
            if swap34:
                c, d = d, c
            for fa in _TRANSFORMS:
                for fb in _TRANSFORMS:
                    for fc in _TRANSFORMS:
                        for fd in _TRANSFORMS:
                            yield SParams(fa(a), fb(b), fc(c), fd(d))
