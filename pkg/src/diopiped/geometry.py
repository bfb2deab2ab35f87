"""From s-parameters to pipeds, and the checks made on them.

Lengths are normalised so that x = 1; the monoclinic face is spanned by
edges y, z with face diagonals c1, c2, and d1, d2 are the body diagonals
over c1, c2.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Union

from .exact import RationalLike, format_rational, rat, rat_sqrt
from .sspace import SParams, is_solution

LENGTHS = ("x", "y", "z", "a", "b", "c1", "c2", "d1", "d2")


class RationalTriple(NamedTuple):
    u: Fraction
    v: Fraction
    s: Fraction


def s_to_triple(s: RationalLike) -> RationalTriple:
    s = rat(s)
    if s == 0:
        raise ValueError("undefined parameter: s = 0")
    return RationalTriple((1 - s * s) / (2 * s), (1 + s * s) / (2 * s), s)


def recover_s(u: RationalLike, v: RationalLike) -> Fraction:
    u, v = rat(u), rat(v)
    if 1 + u * u != v * v:
        raise ValueError(f"not a rational Pythagorean pair: 1 + ({u})^2 != ({v})^2")
    return v - u


@dataclass(frozen=True)
class RationalPiped:
    x: Fraction
    y: Fraction
    z: Fraction
    a: Fraction
    b: Fraction
    c1: Fraction
    c2: Fraction
    d1: Fraction
    d2: Fraction

    def lengths(self) -> tuple:
        return astuple(self)

    def __str__(self) -> str:
        return " ".join(format_rational(v) for v in self.lengths())


@dataclass(frozen=True)
class IntegerPiped:
    x: int
    y: int
    z: int
    a: int
    b: int
    c1: int
    c2: int
    d1: int
    d2: int

    def lengths(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    @property
    def primitive(self) -> bool:
        return gcd(*self.lengths()) == 1

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.lengths())

    @classmethod
    def parse(cls, text: str) -> "IntegerPiped":
        values = [int(t) for t in text.split()]
        if len(values) != 9:
            raise ValueError(f"expected 9 integers, got {len(values)}")
        return cls(*values)


Piped = Union[RationalPiped, IntegerPiped]


def reconstruct(s: SParams) -> RationalPiped:
    if not is_solution(s):
        raise ValueError(f"governing equation violated (or degenerate) for {s}")
    t1, t2, t3, t4 = (s_to_triple(v) for v in s)
    return RationalPiped(
        x=Fraction(1),
        y=abs(t1.u),
        z=abs(t2.u),
        a=abs(t1.v),
        b=abs(t2.v),
        c1=abs(t3.u),
        c2=abs(t4.u),
        d1=abs(t3.v),
        d2=abs(t4.v),
    )


def integerize(p: Piped) -> IntegerPiped:
    """Smallest positive integer multiple of p, hence primitive."""
    values = [rat(v) for v in p.lengths()]
    scale = lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    g = gcd(*ints)
    if g > 1:
        ints = [v // g for v in ints]
    return IntegerPiped(*ints)


def validate_algebraic(p: Piped) -> bool:
    x, y, z, a, b, c1, c2, d1, d2 = (rat(v) for v in p.lengths())
    x2, y2, z2, a2, b2 = x * x, y * y, z * z, a * a, b * b
    c12, c22, d12, d22 = c1 * c1, c2 * c2, d1 * d1, d2 * d2
    return (
        x2 + y2 == a2
        and x2 + z2 == b2
        and x2 + c12 == d12
        and x2 + c22 == d22
        and 2 * y2 + 2 * z2 == c12 + c22
        and 2 * y2 + 2 * b2 == d12 + d22
        and 2 * a2 + 2 * z2 == d12 + d22
    )


def cos_angle(p: Piped) -> Fraction:
    """Cosine of the monoclinic angle, with c1 the diagonal opposite it.

    By the law of cosines c1^2 = y^2 + z^2 - 2yz cos, c2^2 = y^2 + z^2 + 2yz cos.
    """
    y, z, c1, c2 = rat(p.y), rat(p.z), rat(p.c1), rat(p.c2)
    if y * z == 0:
        raise ValueError("cos_angle needs y, z > 0")
    return (c2 * c2 - c1 * c1) / (4 * y * z)


def validate_geometric(p: Piped) -> bool:
    if any(rat(v) <= 0 for v in p.lengths()):
        return False
    return abs(cos_angle(p)) < 1


class RationalityFlags(NamedTuple):
    area_rational: bool
    volume_rational: bool
    lattice_embeddable: bool


def sin_squared(p: Piped) -> Fraction:
    c = cos_angle(p)
    return 1 - c * c


def rational_area_volume_lattice(p: Piped) -> RationalityFlags:
    """Rationality of face area, volume and lattice embedding.

    With x, y, z and cos rational, area yz*sin, volume xyz*sin and a rational
    coordinate embedding of the slanted face all hinge on sin being rational.
    """
    if not validate_geometric(p):
        raise ValueError("piped is not geometrically valid")
    ok = rat_sqrt(sin_squared(p)) is not None
    return RationalityFlags(ok, ok, ok)


def geometric_valid_s(s: SParams) -> bool:
    """Geometric validity of the piped built from s (False if s is not a solution)."""
    if not is_solution(s):
        return False
    return validate_geometric(reconstruct(s))


def is_acute(p: Piped) -> bool:
    return cos_angle(p) > 0


__all__ = [
    "LENGTHS",
    "IntegerPiped",
    "RationalPiped",
    "RationalTriple",
    "RationalityFlags",
    "cos_angle",
    "geometric_valid_s",
    "integerize",
    "is_acute",
    "rational_area_volume_lattice",
    "reconstruct",
    "recover_s",
    "s_to_triple",
    "sin_squared",
    "validate_algebraic",
    "validate_geometric",
]
