"""Exact rational scalars, square roots and quadratic roots.

``Fraction`` from the standard library is the scalar type everywhere; it is
always reduced with a positive denominator, which is exactly the invariant we
need.  This module adds the few number-theoretic helpers on top of it.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.  Raises ValueError on anything else."""
    t = text.strip()
    num, sep, den = t.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def height(q: Fraction) -> int:
    """max(|numerator|, denominator) of the reduced fraction."""
    q = rat(q)
    return max(abs(q.numerator), q.denominator)


def int_sqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rat_sqrt(q: RationalLike) -> Optional[Fraction]:
    """Nonnegative rational square root of q, or None if q is not a square in Q."""
    q = rat(q)
    if q < 0:
        return None
    # reduced p/q is a square iff p and q are both perfect squares
    num = int_sqrt_exact(q.numerator)
    if num is None:
        return None
    den = int_sqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def is_square(q: RationalLike) -> bool:
    return rat_sqrt(q) is not None


def solve_quadratic(a: RationalLike, b: RationalLike, c: RationalLike) -> list[Fraction]:
    """All rational roots of a*t^2 + b*t + c = 0, ascending, without repeats.

    Degrades to the linear equation when a == 0.  The all-zero equation has
    every t as a root and is rejected.
    """
    a, b, c = rat(a), rat(b), rat(c)
    if a == 0:
        if b == 0:
            if c == 0:
                raise ValueError("degenerate identity: all coefficients are zero")
            return []
        return [-c / b]
    root = rat_sqrt(b * b - 4 * a * c)
    if root is None:
        return []
    roots = {(-b + root) / (2 * a), (-b - root) / (2 * a)}
    return sorted(roots)


def farey_interior(h: int) -> Iterator[Fraction]:
    """Reduced fractions in (0, 1) with denominator <= h, ascending.

    Standard next-term recurrence of the Farey sequence F_h, with the
    endpoints 0/1 and 1/1 dropped.
    """
    if h < 2:
        return
    a, b, c, d = 0, 1, 1, h
    while c < d:
        yield Fraction(c, d)
        k = (h + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
