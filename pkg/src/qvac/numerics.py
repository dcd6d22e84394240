"""Scalar root-finding and 1-D maximization used by the spectral and
black-hole modules.  Both routines are deterministic: equal inputs give
bit-equal results, which the acceptance tests rely on."""

from __future__ import annotations

import math
from typing import Callable

from .errors import DomainError

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2


def golden_section_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Locate the maximum of a unimodal function on [a, b].

    Returns the midpoint of the final bracket once its width drops below
    ``rel_tol`` relative to the midpoint magnitude.
    """
    if not b > a:
        raise DomainError("golden_section_max requires b > a")
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(max_iter):
        if yc > yd:
            b, d, yd = d, c, yc
            h *= _INV_PHI
            c = a + _INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            yd = f(d)
        mid = 0.5 * (a + b)
        if b - a <= rel_tol * abs(mid):
            return mid
    return 0.5 * (a + b)


def bisect_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-14,
    max_iter: int = 256,
) -> float:
    """Bisection on [a, b]; f(a) and f(b) must have opposite signs.

    Stops when the bracket width is below ``rel_tol`` relative to the
    midpoint (or after ``max_iter`` halvings) and returns the midpoint.
    """
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise DomainError("bisect_root requires a sign change on [a, b]")
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if b - a <= rel_tol * abs(mid) or mid == a or mid == b:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)
