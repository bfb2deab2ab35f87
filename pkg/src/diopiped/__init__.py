"""Exact-arithmetic toolkit for s-parameter solutions of the bi-orthogonal
monoclinic Diophantine parallelepiped."""

from .exact import Rational, format_rational, parse_rational, rat, rat_sqrt, solve_quadratic
from .sspace import SParams, equivalent, governing_residual, is_solution, normalize, sharipov_feasible, solve_for_s4

__version__ = "0.1.0"
