"""Quadrature primitives: fixed Gauss-Legendre panels and adaptive bisection.

Both schemes sum in a fixed order so results are bit-reproducible.
Gauss nodes are interior, so integrands are never evaluated at panel
endpoints (where samples may be flagged singular).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import QuadratureNoConvergence


@lru_cache(maxsize=8)
def _nodes(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    xs, ws = np.polynomial.legendre.leggauss(order)
    return tuple(float(x) for x in xs), tuple(float(w) for w in ws)


def gauss_panel(f: Callable[[float], float], a: float, b: float,
                order: int = 8) -> float:
    xs, ws = _nodes(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0
    for x, w in zip(xs, ws):
        total += w * f(mid + half * x)
    return total * half


def fixed_panels(f: Callable[[float], float], a: float, b: float,
                 panels: int = 64, order: int = 8) -> float:
    width = (b - a) / panels
    total = 0.0
    for i in range(panels):
        total += gauss_panel(f, a + i * width, a + (i + 1) * width, order)
    return total


def adaptive(f: Callable[[float], float], a: float, b: float,
             rel_tol: float = 1e-9, max_depth: int = 20,
             order: int = 8) -> tuple[float, float]:
    """Bisection with an embedded whole-vs-halves error estimate.

    Returns (value, error_estimate).  Raises on depth exhaustion.
    """
    abs_floor = 1e-14

    def recurse(lo: float, hi: float, whole: float, depth: int) -> tuple[float, float]:
        mid = 0.5 * (lo + hi)
        left = gauss_panel(f, lo, mid, order)
        right = gauss_panel(f, mid, hi, order)
        refined = left + right
        err = abs(refined - whole)
        if err <= max(rel_tol * abs(refined), abs_floor):
            return refined, err
        if depth >= max_depth:
            raise QuadratureNoConvergence(
                f"no convergence on [{lo!r}, {hi!r}] after depth {depth}")
        lv, le = recurse(lo, mid, left, depth + 1)
        rv, re = recurse(mid, hi, right, depth + 1)
        return lv + rv, le + re

    return recurse(a, b, gauss_panel(f, a, b, order), 0)


def adaptive_with_breakpoints(f: Callable[[float], float],
                              points: Sequence[float],
                              rel_tol: float = 1e-9,
                              max_depth: int = 20) -> tuple[float, float]:
    """Adaptive integration over consecutive [points[i], points[i+1]] spans."""
    total = 0.0
    err = 0.0
    for lo, hi in zip(points, points[1:]):
        if hi <= lo:
            continue
        value, e = adaptive(f, lo, hi, rel_tol, max_depth)
        total += value
        err += e
    return total, err
