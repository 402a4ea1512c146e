"""Planar Bernstein-Bezier curves on the sphere-chart domain rectangle.

Control points live in (u, v) coordinates, u in [0, pi], v in [0, 2pi].
Evaluation uses de Casteljau recursion; derivatives use the hodograph
(difference) control points, n*(p[i+1] - p[i]) and
n*(n-1)*(p[i+2] - 2 p[i+1] + p[i]).
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DegreeTooLow, ParameterOutOfRange, ParseError

DOMAIN_U = (0.0, math.pi)
DOMAIN_V = (0.0, 2.0 * math.pi)


class DomainPoint(NamedTuple):
    u: float
    v: float


def _casteljau(values: Sequence[float], t: float) -> float:
    b = list(values)
    s = 1.0 - t
    for r in range(len(b) - 1, 0, -1):
        for i in range(r):
            b[i] = s * b[i] + t * b[i + 1]
    return b[0]


@dataclass(frozen=True)
class BezierPath2:
    """Degree-n curve over n+1 control points in the domain rectangle."""

    control_points: tuple[DomainPoint, ...]

    def __post_init__(self):
        if len(self.control_points) < 2:
            raise ValueError("need at least two control points (degree >= 1)")
        object.__setattr__(
            self, "control_points",
            tuple(DomainPoint(float(p[0]), float(p[1])) for p in self.control_points))

    @property
    def degree(self) -> int:
        return len(self.control_points) - 1

    def is_closed(self, tol: float = 1e-12) -> bool:
        p0, pn = self.control_points[0], self.control_points[-1]
        return abs(p0.u - pn.u) <= tol and abs(p0.v - pn.v) <= tol

    def point(self, t: float) -> DomainPoint:
        _check_t(t)
        us = [p.u for p in self.control_points]
        vs = [p.v for p in self.control_points]
        return DomainPoint(_casteljau(us, t), _casteljau(vs, t))

    def derivative(self, t: float, order: int) -> tuple[float, float]:
        """Order-1 or order-2 derivative of (u(t), v(t))."""
        _check_t(t)
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        if order > self.degree:
            raise DegreeTooLow(f"order {order} derivative of a degree-{self.degree} curve")
        du, dv = self._hodograph(order)
        return _casteljau(du, t), _casteljau(dv, t)

    def _hodograph(self, order: int) -> tuple[list[float], list[float]]:
        n = self.degree
        du = [n * (self.control_points[i + 1].u - self.control_points[i].u)
              for i in range(n)]
        dv = [n * (self.control_points[i + 1].v - self.control_points[i].v)
              for i in range(n)]
        if order == 1:
            return du, dv
        m = n - 1
        ddu = [m * (du[i + 1] - du[i]) for i in range(m)]
        ddv = [m * (dv[i + 1] - dv[i]) for i in range(m)]
        return ddu, ddv

    def sample(self, t: float):
        from .paths import PathSample
        u, v = self.point(t)
        du, dv = self.derivative(t, 1)
        if self.degree >= 2:
            ddu, ddv = self.derivative(t, 2)
        else:
            ddu = ddv = 0.0
        return PathSample(t, u, v, du, dv, ddu, ddv)

    def reversed(self) -> "BezierPath2":
        return BezierPath2(tuple(reversed(self.control_points)))

    def elevated(self) -> "BezierPath2":
        """Same curve as a degree n+1 Bezier."""
        n = self.degree
        pts = [self.control_points[0]]
        for i in range(1, n + 1):
            a = i / (n + 1)
            prev, cur = self.control_points[i - 1], self.control_points[i]
            pts.append(DomainPoint(a * prev.u + (1 - a) * cur.u,
                                   a * prev.v + (1 - a) * cur.v))
        pts.append(self.control_points[-1])
        return BezierPath2(tuple(pts))


def _check_t(t: float) -> None:
    if not 0.0 <= t <= 1.0:
        raise ParameterOutOfRange(f"t = {t!r} outside [0, 1]")


@dataclass(frozen=True)
class ValidationReport:
    """Closure / continuity / chart-health report for a control net."""

    closed: bool
    c1: bool
    pole_proximity: float
    domain_violations: int
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "closed": self.closed,
            "c1": self.c1,
            "pole_proximity": self.pole_proximity,
            "domain_violations": self.domain_violations,
            "warnings": list(self.warnings),
        }


def validate_closed_c1(path: BezierPath2, samples: int = 256) -> ValidationReport:
    """Report closure, tangent-collinearity at the seam, and pole health.

    Never raises: out-of-rectangle samples are counted as warnings since
    the sphere chart stays defined (it is periodic in both angles).
    """
    pts = path.control_points
    closed = path.is_closed()
    c1 = False
    if closed and len(pts) >= 3:
        a, b, c = pts[-2], pts[0], pts[1]
        area2 = abs((b.u - a.u) * (c.v - a.v) - (c.u - a.u) * (b.v - a.v))
        c1 = area2 < 1e-10
    pole = math.inf
    violations = 0
    for i in range(samples):
        t = i / (samples - 1)
        u, v = path.point(t)
        # distance of v to the nearest multiple of pi, where sin v = 0
        pole = min(pole, abs(v - math.pi * round(v / math.pi)))
        if not (DOMAIN_U[0] - 1e-12 <= u <= DOMAIN_U[1] + 1e-12
                and DOMAIN_V[0] - 1e-12 <= v <= DOMAIN_V[1] + 1e-12):
            violations += 1
    warnings = []
    if not closed:
        warnings.append("curve not closed")
    elif not c1:
        warnings.append("closed but not C1 at the seam")
    if pole < 1e-3:
        warnings.append("samples pass near a chart pole (sin v ~ 0)")
    if violations:
        warnings.append(f"{violations} samples leave the domain rectangle")
    return ValidationReport(closed, c1, pole, violations, tuple(warnings))


# net file format: JSON array of [u, v] pairs; entries may be numbers or
# strings denoting rational multiples of pi such as "pi/8", "3pi/8", "-pi/2"

_PI_RE = re.compile(
    r"^\s*([+-]?)\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$",
    re.IGNORECASE)


def parse_angle(value: object) -> float:
    """Number, or string like 'pi/8', '3pi/8', '0.5', '-pi'."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if not isinstance(value, str):
        raise ParseError(f"expected number or angle string, got {value!r}", 0)
    m = _PI_RE.match(value)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        factor = float(m.group(2)) if m.group(2) else 1.0
        divisor = float(m.group(3)) if m.group(3) else 1.0
        if divisor == 0.0:
            raise ParseError(f"division by zero in angle {value!r}", 0)
        return sign * factor * math.pi / divisor
    try:
        return float(value)
    except ValueError:
        raise ParseError(f"cannot parse angle {value!r}", 0) from None


def net_from_json(text: str) -> BezierPath2:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, list) or len(data) < 2:
        raise ParseError("net must be a JSON array of at least two [u, v] pairs", 0)
    points = []
    for i, entry in enumerate(data):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ParseError(f"entry {i} is not a [u, v] pair", i)
        points.append(DomainPoint(parse_angle(entry[0]), parse_angle(entry[1])))
    return BezierPath2(tuple(points))


def net_to_json(path: BezierPath2) -> str:
    rows = [f"  [{p.u:.17g}, {p.v:.17g}]" for p in path.control_points]
    return "[\n" + ",\n".join(rows) + "\n]\n"


def load_net(filename: str) -> BezierPath2:
    with open(filename, "r", encoding="utf-8") as fh:
        return net_from_json(fh.read())
