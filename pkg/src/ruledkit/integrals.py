"""Integral invariants of closed motions: pitch and angle of pitch.

Over one period of a closed motion the ruling returns to the same line.
The pitch is the translation picked up along the ruling,

    l = loop-integral of sin v (ubar v' - vbar u') dt

(the integrand is <c', x> for the pedal curve c; over a closed period it
integrates to the same total as the striction tangent component tau_bar,
the two differing by an exact derivative).  The angle of pitch is the
total turning of the developable-generating direction,

    lambda = - loop-integral of tau dt.

Every result is computed twice, by fixed Gauss-Legendre panels and by
adaptive bisection, and only reported when the schemes agree to 1e-8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .config import DEFAULT, Tolerances
from .dual import vnorm, vsub
from .errors import NotClosed, QuadratureNoConvergence
from .invariants import invariants_at, tau_at
from .liftfield import LiftField
from .paths import ParametricPath
from .quad import adaptive, fixed_panels
from .sphere import dus_point

SCHEME_AGREEMENT = 1e-8

# pitch sign conventions: "coordinate" integrates the moment-coordinate
# integrand as written above; "translation" negates it, measuring the
# translation in the classical orientation
PITCH_CONVENTIONS = ("coordinate", "translation")


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    max_depth: int = 20
    panels: int = 64
    order: int = 8

    def __post_init__(self):
        if self.rel_tol <= 0.0:
            raise ValueError("rel_tol must be positive")
        if not 0 < self.max_depth <= 60:
            raise ValueError("max_depth out of range")


DEFAULT_QUAD = QuadratureConfig()


def pitch_integrand(path: ParametricPath, field: LiftField) -> Callable[[float], float]:
    def f(t: float) -> float:
        ps = path.sample(t)
        s = field.sample(ps.u, ps.v)
        return math.sin(ps.v) * (s.ub * ps.dv - s.vb * ps.du)
    return f


def torsion_integrand(path: ParametricPath, field: LiftField,
                      tol: Tolerances = DEFAULT) -> Callable[[float], float]:
    def f(t: float) -> float:
        return tau_at(path, t, tol)
    return f


def striction_speed(path: ParametricPath, field: LiftField,
                    tol: Tolerances = DEFAULT) -> Callable[[float], float]:
    def f(t: float) -> float:
        s = invariants_at(path, field, t, tol)
        return math.hypot(s.tau_bar, s.kappa_bar)
    return f


def check_closed(path: ParametricPath, field: LiftField,
                 dual_part: bool = True, tol: float = 1e-9) -> None:
    """Closed motion: the ruling at t=1 is the ruling at t=0.

    The angle of pitch only involves the real spherical image, so its
    callers skip the moment comparison.
    """
    a = path.sample(0.0)
    b = path.sample(1.0)
    pa = dus_point(a.u, a.v, field)
    pb = dus_point(b.u, b.v, field)
    if vnorm(vsub(pa.x, pb.x)) > tol:
        raise NotClosed("curve not closed")
    if dual_part and vnorm(vsub(pa.xbar, pb.xbar)) > tol:
        raise NotClosed("curve not closed (moment part differs after one period)")


def _two_scheme(f: Callable[[float], float], cfg: QuadratureConfig) -> tuple[float, float]:
    fixed = fixed_panels(f, 0.0, 1.0, cfg.panels, cfg.order)
    value, _ = adaptive(f, 0.0, 1.0, cfg.rel_tol, cfg.max_depth, cfg.order)
    disagreement = abs(fixed - value)
    if disagreement > SCHEME_AGREEMENT:
        raise QuadratureNoConvergence(
            f"schemes disagree by {disagreement!r} (> {SCHEME_AGREEMENT!r})")
    return value, disagreement


def pitch(path: ParametricPath, field: LiftField,
          cfg: QuadratureConfig = DEFAULT_QUAD,
          convention: str = "coordinate",
          tol: Tolerances = DEFAULT) -> float:
    if convention not in PITCH_CONVENTIONS:
        raise ValueError(f"unknown pitch convention {convention!r}")
    check_closed(path, field, dual_part=True)
    value, _ = _two_scheme(pitch_integrand(path, field), cfg)
    return -value if convention == "translation" else value


def angle_of_pitch(path: ParametricPath, field: LiftField,
                   cfg: QuadratureConfig = DEFAULT_QUAD,
                   tol: Tolerances = DEFAULT) -> float:
    check_closed(path, field, dual_part=False)
    value, _ = _two_scheme(torsion_integrand(path, field, tol), cfg)
    return -value


def striction_arclength(path: ParametricPath, field: LiftField,
                        cfg: QuadratureConfig = DEFAULT_QUAD,
                        tol: Tolerances = DEFAULT) -> float:
    check_closed(path, field, dual_part=True)
    value, _ = _two_scheme(striction_speed(path, field, tol), cfg)
    return value


@dataclass(frozen=True)
class IntegralInvariants:
    pitch: float
    angle_of_pitch: float
    striction_length: float
    est_error: float
    period: tuple[float, float] = (0.0, 1.0)

    def to_dict(self) -> dict:
        return {
            "pitch": self.pitch,
            "angle_of_pitch": self.angle_of_pitch,
            "striction_length": self.striction_length,
            "est_error": self.est_error,
        }


def integral_invariants(path: ParametricPath, field: LiftField,
                        cfg: QuadratureConfig = DEFAULT_QUAD,
                        convention: str = "coordinate",
                        tol: Tolerances = DEFAULT) -> IntegralInvariants:
    if convention not in PITCH_CONVENTIONS:
        raise ValueError(f"unknown pitch convention {convention!r}")
    check_closed(path, field, dual_part=True)
    l_value, l_err = _two_scheme(pitch_integrand(path, field), cfg)
    lam_value, lam_err = _two_scheme(torsion_integrand(path, field, tol), cfg)
    s_value, s_err = _two_scheme(striction_speed(path, field, tol), cfg)
    if convention == "translation":
        l_value = -l_value
    return IntegralInvariants(l_value, -lam_value, s_value,
                              max(l_err, lam_err, s_err))
