"""Solution sequences whose monoclinic angle tends to a right angle.

``t = s3 - s4`` measures the distance from the (unattainable) cuboid
direction s3 = s4.  The obtuse sequence has t < 0, the acute ones t > 0.
"""

from __future__ import annotations

from fractions import Fraction

from .families import DegenerateError
from .sspace import SParams


def obtuse(n: int) -> SParams:
    if n <= 1:
        raise DegenerateError(f"degenerate: obtuse sequence needs n >= 2, got {n}")
    base = 4 * n**4 - 8 * n**3 + 4 * n * n
    return SParams(
        Fraction(n - 1, n),
        Fraction(4 * n**4 - 8 * n**3 + 4 * n - 1, base),
        Fraction(4 * n**4 - 12 * n**3 + 12 * n * n - 6 * n + 1, base),
        Fraction(base, 4 * n**4 - 4 * n**3 + 2 * n - 1),
    )


def obtuse_t(n: int) -> Fraction:
    if n <= 1:
        raise DegenerateError(f"degenerate: obtuse sequence needs n >= 2, got {n}")
    return Fraction(
        -((2 * n - 1) ** 4),
        4 * (n - 1) ** 2 * n * n * (2 * n * n - 1) * (2 * n * n - 2 * n + 1),
    )


def acute_coefficient(d: int) -> Fraction:
    """Prefactor 4d / ((d - 1)(d + 1)) of the s1 = 1/d acute sequence."""
    if d <= 1:
        raise DegenerateError(f"degenerate: acute sequence needs d >= 2, got {d}")
    return Fraction(4 * d, (d - 1) * (d + 1))


def _check_acute(d: int, n: int) -> None:
    if d <= 1 or n <= 1:
        raise DegenerateError(f"degenerate: acute sequence needs d, n >= 2, got ({d}, {n})")


def acute(d: int, n: int) -> SParams:
    _check_acute(d, n)
    k = acute_coefficient(d) * n * (n + 1) * (n + 2)
    p = n * n - 2
    q = n * n + 2 * n + 2
    r = n * n + 4 * n + 2
    return SParams(Fraction(1, d), k / (p * r), k / (p * q), k / (q * r))


def acute_t(d: int, n: int) -> Fraction:
    _check_acute(d, n)
    return Fraction(
        16 * d * n * (n + 1) ** 2 * (n + 2),
        (d - 1) * (d + 1) * (n * n - 2) * (n * n + 2 * n + 2) * (n * n + 4 * n + 2),
    )
