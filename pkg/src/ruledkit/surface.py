"""Directrix, striction curve, surface points and curvature of the swept
surface.

Two base curves matter.  The directrix a(t) is the pedal point of the
ruling (closest point to the origin); it satisfies a x x = xbar and
<a, x> = 0, and the surface is R(t, w) = a(t) + w x(t).  The striction
curve m(t) is where neighbouring rulings come closest; the fundamental
forms below are written in the striction-based chart R = m + w x1,
where r_t = tau_bar x1 + w kappa x2 + kappa_bar x3 holds exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .config import DEFAULT, Tolerances
from .dual import Vec3, vadd, vcross, vdot, vscale, vsub
from .errors import CylindricalPoint, NormalUndefined
from .invariants import invariants_from_point
from .liftfield import LiftField
from .paths import ParametricPath
from .quad import fixed_panels
from .sphere import DualCurvePoint, blaschke_frame, dual_curve, rus_point


def directrix(path: ParametricPath, field: LiftField, t: float) -> Vec3:
    """Pedal-point base curve of the ruling through parameter t."""
    ps = path.sample(t)
    s = field.sample(ps.u, ps.v)
    su, cu = math.sin(ps.u), math.cos(ps.u)
    sv, cv = math.sin(ps.v), math.cos(ps.v)
    return (
        -s.ub * cu * sv * cv - s.vb * su,
        -s.ub * su * sv * cv + s.vb * cu,
        s.ub * sv * sv,
    )


@dataclass(frozen=True)
class StrictionData:
    m: Vec3
    dm_dt: Vec3
    s: float  # striction arc length accumulated from t = 0


def _striction_core(cp: DualCurvePoint, tol: Tolerances) -> tuple[Vec3, Vec3]:
    x, xbar = cp.point.x, cp.point.xbar
    xp, xbp = cp.d1.real, cp.d1.dual
    xpp, xbpp = cp.d2.real, cp.d2.dual
    k2 = vdot(xp, xp)
    if k2 < tol.kappa_min ** 2:
        raise CylindricalPoint("striction undefined at a cylindrical point")
    c = vcross(x, xbar)
    cp1 = vadd(vcross(xp, xbar), vcross(x, xbp))
    cp2 = vadd(vadd(vcross(xpp, xbar), vscale(2.0, vcross(xp, xbp))),
               vcross(x, xbpp))
    phi = vdot(xp, cp1) / k2
    dphi = (vdot(xpp, cp1) + vdot(xp, cp2)) / k2 \
        - phi * 2.0 * vdot(xp, xpp) / k2
    m = vsub(c, vscale(phi, x))
    dm = vsub(vsub(cp1, vscale(dphi, x)), vscale(phi, xp))
    return m, dm


def striction_point(path: ParametricPath, field: LiftField, t: float,
                    tol: Tolerances = DEFAULT,
                    with_arclength: bool = True) -> StrictionData:
    """Striction point m = c - <x', c'>/|x'|^2 x and its exact derivative.

    The arc length integrates |dm/dt| = sqrt(tau_bar^2 + kappa_bar^2)
    from 0 to t with a fixed Gauss rule.
    """
    cp = dual_curve(path, field, t)
    m, dm = _striction_core(cp, tol)
    s = 0.0
    if with_arclength and t > 0.0:
        def speed(tt: float) -> float:
            sample = invariants_from_point(dual_curve(path, field, tt), tol)
            return math.hypot(sample.tau_bar, sample.kappa_bar)
        s = fixed_panels(speed, 0.0, t, panels=max(8, int(64 * t)))
    return StrictionData(m, dm, s)


@dataclass(frozen=True)
class SurfaceSample:
    point: Vec3
    normal: Vec3
    r_t: Vec3
    r_w: Vec3
    g11: float
    g12: float
    g22: float
    h11: float
    h12: float
    h22: float
    K_G: float
    K_M: float


def surface_sample(path: ParametricPath, field: LiftField, t: float, w: float,
                   tol: Tolerances = DEFAULT) -> SurfaceSample:
    """Surface point R = m + w x1 with normal, fundamental forms and
    Gauss/mean curvature.

    kappa' comes from the closed form
    (u'u'' sin^2 v + u'^2 v' sin v cos v + v'v'') / kappa; kappa_bar'
    is centrally differenced with step tol.fd_step (third-order jets
    are not worth carrying for one coefficient).
    """
    cp = dual_curve(path, field, t)
    frame = blaschke_frame(cp, tol)
    inv = invariants_from_point(cp, tol)
    kappa, kappa_bar = inv.kappa, inv.kappa_bar
    tau, tau_bar = inv.tau, inv.tau_bar

    denom2 = (w * kappa) ** 2 + kappa_bar ** 2
    if denom2 <= 1e-18:
        raise NormalUndefined(
            f"normal undefined at t = {t!r}, w = {w!r} (developable center)")
    denom = math.sqrt(denom2)

    x1, x2, x3 = frame.x1.real, frame.x2.real, frame.x3.real
    m, _ = _striction_core(cp, tol)
    point = vadd(m, vscale(w, x1))
    normal = vscale(1.0 / denom, vsub(vscale(kappa_bar, x2), vscale(w * kappa, x3)))
    r_t = vadd(vadd(vscale(tau_bar, x1), vscale(w * kappa, x2)),
               vscale(kappa_bar, x3))
    r_w = x1

    ps = cp.path
    sv, cv = math.sin(ps.v), math.cos(ps.v)
    dkappa = (ps.du * ps.ddu * sv ** 2 + ps.du ** 2 * ps.dv * sv * cv
              + ps.dv * ps.ddv) / kappa
    dkappa_bar = _kappa_bar_derivative(path, field, t, tol)

    g11 = tau_bar ** 2 + (w * kappa) ** 2 + kappa_bar ** 2
    g12 = tau_bar
    g22 = 1.0
    h11 = (kappa_bar * (tau_bar * kappa + w * dkappa - kappa_bar * tau)
           - w * kappa * (w * kappa * tau + dkappa_bar)) / denom
    h12 = kappa_bar * kappa / denom
    h22 = 0.0
    K_G = -(kappa_bar ** 2 * kappa ** 2) / (denom2 * denom2)
    K_M = (h11 * g22 + g11 * h22 - 2.0 * h12 * g12) / (2.0 * denom2)
    return SurfaceSample(point, normal, r_t, r_w, g11, g12, g22,
                         h11, h12, h22, K_G, K_M)


def gauss_curvature(path: ParametricPath, field: LiftField, t: float, w: float,
                    tol: Tolerances = DEFAULT) -> float:
    """K_G alone, skipping the form coefficients: -kb^2 k^2 / ((wk)^2 + kb^2)^2."""
    inv = invariants_from_point(dual_curve(path, field, t), tol)
    denom2 = (w * inv.kappa) ** 2 + inv.kappa_bar ** 2
    if denom2 <= 1e-18:
        raise NormalUndefined(f"curvature undefined at t = {t!r}, w = {w!r}")
    return -(inv.kappa_bar ** 2 * inv.kappa ** 2) / (denom2 * denom2)


def _kappa_bar_derivative(path: ParametricPath, field: LiftField, t: float,
                          tol: Tolerances) -> float:
    h = tol.fd_step
    t0 = min(max(t, h), 1.0 - h)

    def kb(tt: float) -> float:
        return invariants_from_point(dual_curve(path, field, tt), tol).kappa_bar

    return (kb(t0 + h) - kb(t0 - h)) / (2.0 * h)


@dataclass(frozen=True)
class RuledPatch:
    """Sweep data for tessellation: base curve, ruling direction, and a
    normal generator (None where the frame is undefined)."""

    directrix: Callable[[float], Vec3]
    ruling: Callable[[float], Vec3]
    w_range: tuple[float, float]
    normal: Callable[[float, float], Vec3 | None]


def ruled_patch(path: ParametricPath, field: LiftField,
                w_range: tuple[float, float],
                tol: Tolerances = DEFAULT) -> RuledPatch:
    """Bundle the surface R(t, w) = a(t) + w x(t) for the mesh builder.

    Normals are evaluated in the striction chart: the vertex at offset w
    from a(t) sits at offset w - <m - a, x> from m(t).
    """

    def base(t: float) -> Vec3:
        return directrix(path, field, t)

    def ruling(t: float) -> Vec3:
        ps = path.sample(t)
        return rus_point(ps.u, ps.v)

    def normal(t: float, w: float) -> Vec3 | None:
        try:
            cp = dual_curve(path, field, t)
            frame = blaschke_frame(cp, tol)
            m, _ = _striction_core(cp, tol)
            a = directrix(path, field, t)
            w_s = w - vdot(vsub(m, a), frame.x1.real)
            kappa, kappa_bar = frame.kappa, frame.kappa_bar
            denom2 = (w_s * kappa) ** 2 + kappa_bar ** 2
            if denom2 <= 1e-18:
                return None
            denom = math.sqrt(denom2)
            return vscale(1.0 / denom,
                          vsub(vscale(kappa_bar, frame.x2.real),
                               vscale(w_s * kappa, frame.x3.real)))
        except CylindricalPoint:
            return None

    return RuledPatch(base, ruling, w_range, normal)
