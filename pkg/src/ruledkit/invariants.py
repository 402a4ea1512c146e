"""Differential invariants of the ruled surface from coordinate functions.

For the dual curve X(t) the dual curvature and dual torsion are

    kappa_hat = |X'|            tau_hat = [X, X', X''] / |X'|^2

whose real/dual parts give kappa, kappa_bar, tau, tau_bar.  In chart
coordinates these have closed forms:

    kappa^2   = u'^2 sin^2 v + v'^2
    kappa_bar = [u'^2 sin v (vbar cos v + ubar_u sin v)
                 + u'v'(vbar_u + ubar_v sin^2 v) + v'^2 vbar_v] / kappa
    tau       = [cos v (u'^3 sin^2 v + 2 u'v'^2) + sin v (u''v' - u'v'')]
                / kappa^2

tau_bar has no comparably compact chart form and is taken as the dual
part of the dual triple product over the analytically assembled curve
derivatives.  Derived quantities: distribution parameter
delta = kappa_bar/kappa (zero exactly on developables) and striction
cotangent cot sigma = tau_bar/kappa_bar.

``frame_invariants_oracle`` recomputes everything from curve *values*
only, differentiating by central differences; it shares no derivative
code with the analytic route and serves as the package's independent
cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT, Tolerances
from .dual import DualScalar, DualVec3, dtriple, vcross, vdot, vnorm
from .errors import CylindricalPoint, StrictionUndefined
from .liftfield import LiftField
from .paths import ParametricPath
from .sphere import DualCurvePoint, dual_curve, dus_point


@dataclass(frozen=True)
class InvariantSample:
    """All pointwise invariants at one parameter value.

    Degenerate samples carry flags ("cylindrical", "developable", "pole")
    instead of NaNs; flagged quantities read as 0.0.
    """

    t: float
    kappa: float
    kappa_bar: float
    tau: float
    tau_bar: float
    delta: float
    cot_sigma: float
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "kappa": self.kappa,
            "kappa_bar": self.kappa_bar,
            "tau": self.tau,
            "tau_bar": self.tau_bar,
            "delta": self.delta,
            "cot_sigma": self.cot_sigma,
            "flags": list(self.flags),
        }


def kappa_at(path: ParametricPath, t: float) -> float:
    ps = path.sample(t)
    return math.sqrt(ps.du ** 2 * math.sin(ps.v) ** 2 + ps.dv ** 2)


def tau_at(path: ParametricPath, t: float, tol: Tolerances = DEFAULT) -> float:
    """Torsion needs only the real path; the moment field drops out."""
    ps = path.sample(t)
    sv, cv = math.sin(ps.v), math.cos(ps.v)
    k2 = ps.du ** 2 * sv ** 2 + ps.dv ** 2
    if k2 < tol.kappa_min ** 2:
        raise CylindricalPoint(f"kappa ~ 0 at t = {t!r}")
    return (cv * (ps.du ** 3 * sv ** 2 + 2.0 * ps.du * ps.dv ** 2)
            + sv * (ps.ddu * ps.dv - ps.du * ps.ddv)) / k2


def invariants_from_point(cp: DualCurvePoint, tol: Tolerances = DEFAULT,
                          on_developable: str = "flag") -> InvariantSample:
    ps, lift = cp.path, cp.lift
    sv, cv = math.sin(ps.v), math.cos(ps.v)
    k2 = ps.du ** 2 * sv ** 2 + ps.dv ** 2
    kappa = math.sqrt(k2)
    if kappa < tol.kappa_min:
        raise CylindricalPoint(f"kappa = {kappa!r} at t = {ps.t!r}")
    kappa_bar = (ps.du ** 2 * sv * (lift.vb * cv + lift.ub_u * sv)
                 + ps.du * ps.dv * (lift.vb_u + lift.ub_v * sv ** 2)
                 + ps.dv ** 2 * lift.vb_v) / kappa
    tau = (cv * (ps.du ** 3 * sv ** 2 + 2.0 * ps.du * ps.dv ** 2)
           + sv * (ps.ddu * ps.dv - ps.du * ps.ddv)) / k2
    kappa_hat = DualScalar(kappa, kappa_bar)
    tau_hat = dtriple(cp.x, cp.d1, cp.d2) / (kappa_hat * kappa_hat)
    tau_bar = tau_hat.dual
    delta = kappa_bar / kappa
    flags: list[str] = []
    if abs(sv) < tol.pole_sin_v:
        flags.append("pole")
    if abs(kappa_bar) <= tol.developable:
        if on_developable == "raise":
            raise StrictionUndefined(
                f"kappa_bar = {kappa_bar!r} at t = {ps.t!r}: cot sigma unbounded")
        flags.append("developable")
        cot_sigma = 0.0
    else:
        cot_sigma = tau_bar / kappa_bar
    return InvariantSample(ps.t, kappa, kappa_bar, tau, tau_bar, delta,
                           cot_sigma, tuple(flags))


def invariants_at(path: ParametricPath, field: LiftField, t: float,
                  tol: Tolerances = DEFAULT,
                  on_developable: str = "flag") -> InvariantSample:
    return invariants_from_point(dual_curve(path, field, t), tol, on_developable)


def frame_invariants_oracle(path: ParametricPath, field: LiftField, t: float,
                            h: float = 1e-5,
                            tol: Tolerances = DEFAULT) -> InvariantSample:
    """Independent recomputation from curve values and central differences.

    Needs t in [h, 1-h] so the stencil stays inside the parameter range.
    """
    if not h <= t <= 1.0 - h:
        raise ValueError(f"oracle stencil leaves [0, 1] at t = {t!r}")

    def value(s: float) -> DualVec3:
        ps = path.sample(s)
        return dus_point(ps.u, ps.v, field).as_dual()

    xm, x0, xp = value(t - h), value(t), value(t + h)
    inv2h = 1.0 / (2.0 * h)
    d1 = DualVec3(
        tuple((a - b) * inv2h for a, b in zip(xp.real, xm.real)),
        tuple((a - b) * inv2h for a, b in zip(xp.dual, xm.dual)),
    )
    invh2 = 1.0 / (h * h)
    d2 = DualVec3(
        tuple((a - 2.0 * b + c) * invh2 for a, b, c in zip(xp.real, x0.real, xm.real)),
        tuple((a - 2.0 * b + c) * invh2 for a, b, c in zip(xp.dual, x0.dual, xm.dual)),
    )
    kappa = vnorm(d1.real)
    if kappa < tol.kappa_min:
        raise CylindricalPoint(f"kappa = {kappa!r} at t = {t!r}")
    kappa_bar = vdot(d1.real, d1.dual) / kappa
    k2 = kappa * kappa
    tau = vdot(x0.real, vcross(d1.real, d2.real)) / k2
    tau_bar = ((vdot(x0.dual, vcross(d1.real, d2.real))
                + vdot(x0.real, vcross(d1.dual, d2.real))
                + vdot(x0.real, vcross(d1.real, d2.dual))) / k2
               - 2.0 * tau * kappa_bar / kappa)
    delta = kappa_bar / kappa
    cot_sigma = tau_bar / kappa_bar if abs(kappa_bar) > tol.developable else 0.0
    flags = ("developable",) if abs(kappa_bar) <= tol.developable else ()
    return InvariantSample(t, kappa, kappa_bar, tau, tau_bar, delta,
                           cot_sigma, flags)


def profile(path: ParametricPath, field: LiftField, samples: int,
            tol: Tolerances = DEFAULT) -> list[InvariantSample]:
    """Uniform t-grid of invariants; degenerate samples flagged, not fatal."""
    if samples < 2:
        raise ValueError("need at least two samples")
    out = []
    for i in range(samples):
        t = i / (samples - 1)
        try:
            out.append(invariants_at(path, field, t, tol))
        except CylindricalPoint:
            kappa = kappa_at(path, t)
            out.append(InvariantSample(t, kappa, 0.0, 0.0, 0.0, 0.0, 0.0,
                                       ("cylindrical",)))
    return out
