"""Sphere chart, its dual lift, the one-parameter dual curve, and the
moving frame.

The chart x(u, v) = (cos u sin v, sin u sin v, cos v) maps the domain
rectangle onto the unit sphere.  Lifting the chart angles to dual values
u + eps*ubar, v + eps*vbar and expanding by the Taylor rule produces a
dual unit vector, i.e. a line of 3-space:

    X = x + eps (ubar x_u + vbar x_v)

Composing with a parametric path t -> (u(t), v(t)) yields the dual curve
X(t) whose t-derivatives are assembled here analytically, with all dual
bookkeeping done by dual-scalar arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT, Tolerances
from .dual import (DualScalar, DualVec3, LineElement, Vec3, dcos, dcross,
                   dnorm, dsin, dvec, normalize, vadd, vdot, vscale)
from .errors import CylindricalPoint
from .liftfield import LiftField, LiftJet
from .paths import ParametricPath, PathSample


def rus_point(u: float, v: float) -> Vec3:
    """Real chart point."""
    return (math.cos(u) * math.sin(v), math.sin(u) * math.sin(v), math.cos(v))


def chart_u(u: float, v: float) -> Vec3:
    return (-math.sin(u) * math.sin(v), math.cos(u) * math.sin(v), 0.0)


def chart_v(u: float, v: float) -> Vec3:
    return (math.cos(u) * math.cos(v), math.sin(u) * math.cos(v), -math.sin(v))


@dataclass(frozen=True)
class DusPoint:
    """A point of the dual unit sphere: direction x, moment xbar."""

    x: Vec3
    xbar: Vec3

    def as_dual(self) -> DualVec3:
        return DualVec3(self.x, self.xbar)

    def as_line(self) -> LineElement:
        return normalize(self.as_dual())


def dus_point(u: float, v: float, field: LiftField) -> DusPoint:
    """Lift one chart point through the field: xbar = ubar x_u + vbar x_v."""
    s = field.sample(u, v)
    xu = chart_u(u, v)
    xv = chart_v(u, v)
    return DusPoint(
        rus_point(u, v),
        vadd(vscale(s.ub, xu), vscale(s.vb, xv)),
    )


@dataclass(frozen=True)
class DualCurvePoint:
    """X(t) with first and second t-derivatives, all exact."""

    point: DusPoint
    d1: DualVec3
    d2: DualVec3
    path: PathSample
    lift: LiftJet

    @property
    def x(self) -> DualVec3:
        return self.point.as_dual()


def _chart_jet(uh: DualScalar, vh: DualScalar):
    """Chart and its first/second chart-partials at dual angles."""
    su, cu = dsin(uh), dcos(uh)
    sv, cv = dsin(vh), dcos(vh)
    zero = DualScalar(0.0)
    x = dvec(cu * sv, su * sv, cv)
    x_u = dvec(-su * sv, cu * sv, zero)
    x_v = dvec(cu * cv, su * cv, -sv)
    x_uu = dvec(-cu * sv, -su * sv, zero)
    x_uv = dvec(-su * cv, cu * cv, zero)
    x_vv = dvec(-cu * sv, -su * sv, -cv)
    return x, x_u, x_v, x_uu, x_uv, x_vv


def curve_point_from(ps: PathSample, lift: LiftJet) -> DualCurvePoint:
    """Assemble X, X', X'' by the chain rule over dual chart angles.

    The dual angle derivatives carry the field's chain rule:
      ubar'  = ubar_u u'  + ubar_v v'
      ubar'' = ubar_uu u'^2 + 2 ubar_uv u'v' + ubar_vv v'^2
               + ubar_u u'' + ubar_v v''
    """
    ubp = lift.ub_u * ps.du + lift.ub_v * ps.dv
    vbp = lift.vb_u * ps.du + lift.vb_v * ps.dv
    ubpp = (lift.ub_uu * ps.du ** 2 + 2.0 * lift.ub_uv * ps.du * ps.dv
            + lift.ub_vv * ps.dv ** 2 + lift.ub_u * ps.ddu + lift.ub_v * ps.ddv)
    vbpp = (lift.vb_uu * ps.du ** 2 + 2.0 * lift.vb_uv * ps.du * ps.dv
            + lift.vb_vv * ps.dv ** 2 + lift.vb_u * ps.ddu + lift.vb_v * ps.ddv)

    uh = DualScalar(ps.u, lift.ub)
    vh = DualScalar(ps.v, lift.vb)
    uhp = DualScalar(ps.du, ubp)
    vhp = DualScalar(ps.dv, vbp)
    uhpp = DualScalar(ps.ddu, ubpp)
    vhpp = DualScalar(ps.ddv, vbpp)

    x, x_u, x_v, x_uu, x_uv, x_vv = _chart_jet(uh, vh)
    d1 = x_u.scaled(uhp) + x_v.scaled(vhp)
    d2 = (x_uu.scaled(uhp * uhp) + x_uv.scaled(DualScalar(2.0) * uhp * vhp)
          + x_vv.scaled(vhp * vhp) + x_u.scaled(uhpp) + x_v.scaled(vhpp))
    return DualCurvePoint(DusPoint(x.real, x.dual), d1, d2, ps, lift)


def dual_curve(path: ParametricPath, field: LiftField, t: float) -> DualCurvePoint:
    ps = path.sample(t)
    return curve_point_from(ps, field.jet(ps.u, ps.v))


@dataclass(frozen=True)
class BlaschkeFrame:
    """Dual orthonormal frame along the curve, plus the alpha decomposition
    of the dual parts in the real frame: xbar_i = alphavec x x_i."""

    x1: DualVec3
    x2: DualVec3
    x3: DualVec3
    kappa_hat: DualScalar
    alpha: Vec3

    @property
    def kappa(self) -> float:
        return self.kappa_hat.real

    @property
    def kappa_bar(self) -> float:
        return self.kappa_hat.dual


def blaschke_frame(point: DualCurvePoint, tol: Tolerances = DEFAULT) -> BlaschkeFrame:
    """X1 = X, X2 = X'/|X'| (dual normalization), X3 = X1 x X2."""
    x1 = point.x
    speed = math.sqrt(vdot(point.d1.real, point.d1.real))
    if speed < tol.kappa_min:
        raise CylindricalPoint(
            f"curvature {speed!r} below {tol.kappa_min!r}: frame undefined")
    kappa_hat = dnorm(point.d1)
    x2 = point.d1.scaled(DualScalar(1.0) / kappa_hat)
    x3 = dcross(x1, x2)
    alpha = (
        vdot(x2.dual, x3.real),
        -vdot(x1.dual, x3.real),
        vdot(x1.dual, x2.real),
    )
    return BlaschkeFrame(x1, x2, x3, kappa_hat, alpha)
