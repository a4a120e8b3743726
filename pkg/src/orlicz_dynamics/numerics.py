"""Scalar root bracketing, bisection and golden-section search.

These three routines are the numerical core behind the Luxemburg norm
(root of a monotone modular), generalized inverses of Young functions,
and the numeric convex conjugate (1-D concave maximization).
"""

from __future__ import annotations

import math
from typing import Callable

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = 1e-12,
    max_iter: int = 256,
) -> float:
    """Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.

    Terminates when the bracket width falls below ``rel_tol`` relative to the
    midpoint (with a tiny absolute floor so roots at 0 terminate).
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError(f"no sign change on bracket [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(abs(mid), 1e-300):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fhi > 0.0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def golden_max(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_iter: int = 400,
) -> tuple[float, float]:
    """Golden-section maximization of a unimodal g on [lo, hi].

    Returns (argmax, max value).  Endpoints are included in the final
    comparison, so monotone objectives resolve to the better endpoint.
    """
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    it = 0
    while b - a > abs_tol and it < max_iter:
        if gc >= gd:
            b, d, gd = d, c, gc
            c = b - GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + GOLDEN * (b - a)
            gd = g(d)
        it += 1
    candidates = [(lo, g(lo)), (hi, g(hi)), (c, gc), (d, gd)]
    return max(candidates, key=lambda p: p[1])


def expand_while_increasing(
    g: Callable[[float], float],
    x_init: float = 1.0,
    cap: float = 1e18,
) -> float | None:
    """Grow x geometrically while g keeps increasing at the right end.

    Returns an upper bracket x with g(x) past the peak, or None when the
    objective is still climbing at the cap (callers treat this as an
    unbounded supremum).
    """
    x = x_init
    gx = g(x)
    while x < cap:
        x2 = 2.0 * x
        gx2 = g(x2)
        if gx2 <= gx:
            return x2
        x, gx = x2, gx2
    return None
