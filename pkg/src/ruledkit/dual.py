"""Dual numbers, dual vectors, and directed lines.

A dual scalar a + eps*abar (eps^2 = 0) multiplies by the product rule
(a + eps*abar)(b + eps*bbar) = ab + eps(abar*b + a*bbar), so no
second-order dual term can ever appear.  A differentiable real function
lifts to dual arguments through its first-order Taylor expansion, which
is exactly forward-mode automatic differentiation:

    f(a + eps*abar) = f(a) + eps * abar * f'(a)

A dual unit vector x + eps*xbar with |x| = 1 and <x, xbar> = 0 is a
directed line in 3-space (direction x, moment xbar = c x x for any
point c on the line).  All values here are immutable and every
operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import SingularDirection

Vec3 = tuple[float, float, float]

ZERO3: Vec3 = (0.0, 0.0, 0.0)


# plain 3-vector helpers (tuples in, tuples out)

def vadd(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vsub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vscale(s: float, a: Vec3) -> Vec3:
    return (s * a[0], s * a[1], s * a[2])


def vdot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def vnorm(a: Vec3) -> float:
    return math.sqrt(vdot(a, a))


def vtriple(a: Vec3, b: Vec3, c: Vec3) -> float:
    return vdot(a, vcross(b, c))


@dataclass(frozen=True, slots=True)
class DualScalar:
    """a + eps*abar with eps^2 = 0."""

    real: float
    dual: float = 0.0

    @staticmethod
    def of(x: "DualScalar | float | int") -> "DualScalar":
        return x if isinstance(x, DualScalar) else DualScalar(float(x), 0.0)

    def __add__(self, other):
        o = DualScalar.of(other)
        return DualScalar(self.real + o.real, self.dual + o.dual)

    __radd__ = __add__

    def __sub__(self, other):
        o = DualScalar.of(other)
        return DualScalar(self.real - o.real, self.dual - o.dual)

    def __rsub__(self, other):
        o = DualScalar.of(other)
        return DualScalar(o.real - self.real, o.dual - self.dual)

    def __mul__(self, other):
        o = DualScalar.of(other)
        return DualScalar(self.real * o.real,
                          self.dual * o.real + self.real * o.dual)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = DualScalar.of(other)
        if abs(o.real) <= 1e-12:
            raise ZeroDivisionError(
                "dual number with (near-)zero real part is not invertible")
        inv = 1.0 / o.real
        return DualScalar(self.real * inv,
                          (self.dual * o.real - self.real * o.dual) * inv * inv)

    def __rtruediv__(self, other):
        return DualScalar.of(other).__truediv__(self)

    def __neg__(self):
        return DualScalar(-self.real, -self.dual)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("only integer powers are defined on DualScalar")
        if exponent < 0:
            return DualScalar(1.0) / self.__pow__(-exponent)
        out = DualScalar(1.0)
        for _ in range(exponent):
            out = out * self
        return out


def lift_fn(f: Callable[[float], float], df: Callable[[float], float],
            x: DualScalar) -> DualScalar:
    """Lift a differentiable real function to dual arguments (Taylor rule)."""
    return DualScalar(f(x.real), x.dual * df(x.real))


def dsin(x: DualScalar) -> DualScalar:
    return lift_fn(math.sin, math.cos, x)


def dcos(x: DualScalar) -> DualScalar:
    return lift_fn(math.cos, lambda a: -math.sin(a), x)


def dexp(x: DualScalar) -> DualScalar:
    return lift_fn(math.exp, math.exp, x)


def dsqrt(x: DualScalar) -> DualScalar:
    if x.real <= 0.0:
        raise ZeroDivisionError("dual sqrt needs a positive real part")
    r = math.sqrt(x.real)
    return DualScalar(r, x.dual / (2.0 * r))


@dataclass(frozen=True, slots=True)
class DualVec3:
    """x + eps*xbar, componentwise dual-scalar semantics."""

    real: Vec3
    dual: Vec3

    @staticmethod
    def pure(real: Vec3) -> "DualVec3":
        return DualVec3(real, ZERO3)

    def __add__(self, other: "DualVec3") -> "DualVec3":
        return DualVec3(vadd(self.real, other.real), vadd(self.dual, other.dual))

    def __sub__(self, other: "DualVec3") -> "DualVec3":
        return DualVec3(vsub(self.real, other.real), vsub(self.dual, other.dual))

    def __neg__(self) -> "DualVec3":
        return DualVec3(vscale(-1.0, self.real), vscale(-1.0, self.dual))

    def scaled(self, s: "DualScalar | float") -> "DualVec3":
        d = DualScalar.of(s)
        return DualVec3(
            vscale(d.real, self.real),
            vadd(vscale(d.dual, self.real), vscale(d.real, self.dual)),
        )

    def component(self, i: int) -> DualScalar:
        return DualScalar(self.real[i], self.dual[i])


def dvec(x: DualScalar, y: DualScalar, z: DualScalar) -> DualVec3:
    return DualVec3((x.real, y.real, z.real), (x.dual, y.dual, z.dual))


def ddot(u: DualVec3, v: DualVec3) -> DualScalar:
    """<U, V> = <u, v> + eps(<u, vbar> + <ubar, v>)."""
    return DualScalar(
        vdot(u.real, v.real),
        vdot(u.real, v.dual) + vdot(u.dual, v.real),
    )


def dcross(u: DualVec3, v: DualVec3) -> DualVec3:
    """U x V = u x v + eps(ubar x v + u x vbar)."""
    return DualVec3(
        vcross(u.real, v.real),
        vadd(vcross(u.dual, v.real), vcross(u.real, v.dual)),
    )


def dtriple(a: DualVec3, b: DualVec3, c: DualVec3) -> DualScalar:
    return ddot(a, dcross(b, c))


def dnorm(u: DualVec3) -> DualScalar:
    """|U| = |u| + eps <u, ubar>/|u|; needs a nonzero real part."""
    n = vnorm(u.real)
    if n <= 1e-12:
        raise SingularDirection("dual norm undefined for zero real part")
    return DualScalar(n, vdot(u.real, u.dual) / n)


@dataclass(frozen=True)
class LineElement:
    """Directed line: unit direction x and moment xbar with <x, xbar> = 0."""

    direction: Vec3
    moment: Vec3

    def __post_init__(self):
        # structural tolerance; normalize() repairs drift before construction
        if abs(vnorm(self.direction) - 1.0) > 1e-12:
            raise SingularDirection(
                f"direction norm {vnorm(self.direction)!r} is not 1")
        if abs(vdot(self.direction, self.moment)) > 1e-12:
            raise SingularDirection("moment is not orthogonal to direction")

    def as_dual(self) -> DualVec3:
        return DualVec3(self.direction, self.moment)

    def pedal_point(self) -> Vec3:
        """Point of the line closest to the origin: x cross xbar."""
        return vcross(self.direction, self.moment)

    def point_at(self, s: float) -> Vec3:
        return vadd(self.pedal_point(), vscale(s, self.direction))


def line_through(point: Vec3, direction: Vec3) -> LineElement:
    """Line through a point with the given (not necessarily unit) direction."""
    n = vnorm(direction)
    if n <= 1e-12:
        raise SingularDirection("zero direction vector")
    d = vscale(1.0 / n, direction)
    return LineElement(d, vcross(point, d))


def normalize(u: DualVec3) -> LineElement:
    """Project a dual vector onto the dual unit sphere.

    Scales both parts by 1/|u| and then removes the moment component
    along the direction, repairing accumulated Pluecker drift.  The
    result equals true dual normalization U/|U| whenever that exists.
    """
    n = vnorm(u.real)
    if n <= 1e-12:
        raise SingularDirection("cannot normalize: zero real part")
    d = vscale(1.0 / n, u.real)
    m = vscale(1.0 / n, u.dual)
    m = vsub(m, vscale(vdot(d, m), d))
    return LineElement(d, m)


@dataclass(frozen=True)
class DualAngle:
    """Angle in [0, pi] and shortest distance between two lines."""

    angle: float
    distance: float


def dual_angle(a: LineElement, b: LineElement) -> DualAngle:
    """Dual angle between two lines.

    The real part of <A, B> is cos(angle); the dual part equals
    -distance*sin(angle), so for non-parallel lines the distance falls
    out of the dual expansion of arccos.  Parallel lines get their
    offset from the moment difference instead.
    """
    d = ddot(a.as_dual(), b.as_dual())
    c = max(-1.0, min(1.0, d.real))
    angle = math.acos(c)
    s = math.sin(angle)
    if s > 1e-9:
        return DualAngle(angle, abs(d.dual) / s)
    # parallel or anti-parallel: flip the second line if needed so both
    # moments refer to the same direction, then compare moments
    sign = 1.0 if d.real > 0.0 else -1.0
    offset = vsub(a.moment, vscale(sign, b.moment))
    return DualAngle(angle, vnorm(offset))
