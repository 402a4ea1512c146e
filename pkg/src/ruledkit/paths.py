"""Uniform parametric-path interface over Bezier nets and analytic test paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Protocol, runtime_checkable

from .errors import ParameterOutOfRange


class PathSample(NamedTuple):
    """(u, v) and first/second t-derivatives at one parameter value."""

    t: float
    u: float
    v: float
    du: float
    dv: float
    ddu: float
    ddv: float


@runtime_checkable
class ParametricPath(Protocol):
    def sample(self, t: float) -> PathSample: ...


@dataclass(frozen=True)
class LinePath:
    """Affine path u = u0 + (u1-u0) t, v = v0 + (v1-v0) t; exact derivatives."""

    u0: float
    u1: float
    v0: float
    v1: float

    def sample(self, t: float) -> PathSample:
        if not 0.0 <= t <= 1.0:
            raise ParameterOutOfRange(f"t = {t!r} outside [0, 1]")
        return PathSample(
            t,
            self.u0 + (self.u1 - self.u0) * t,
            self.v0 + (self.v1 - self.v0) * t,
            self.u1 - self.u0,
            self.v1 - self.v0,
            0.0,
            0.0,
        )


def great_circle_path(v0: float) -> LinePath:
    """One full turn of azimuth at constant polar angle v0."""
    import math
    return LinePath(0.0, 2.0 * math.pi, v0, v0)


def path_sample(path: ParametricPath, t: float) -> PathSample:
    return path.sample(t)
