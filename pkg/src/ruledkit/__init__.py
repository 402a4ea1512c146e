"""Ruled surfaces from control nets via curves on the dual unit sphere.

A planar Bezier net in (u, v) maps onto the unit sphere, a lift field
supplies the moment components, and the resulting dual spherical curve
corresponds line-by-line to a ruled surface whose differential and
integral invariants this package computes.
"""

__version__ = "0.1.0"

from .bezier import BezierPath2, DomainPoint, ValidationReport, validate_closed_c1
from .config import Tolerances, load_tolerances
from .dual import (DualAngle, DualScalar, DualVec3, LineElement, dual_angle,
                   lift_fn, normalize)
from .integrals import IntegralInvariants, QuadratureConfig, integral_invariants
from .invariants import InvariantSample, frame_invariants_oracle, invariants_at, profile
from .liftfield import AffineField, ExpressionField, LiftSample, affine, parse_field
from .paths import LinePath, ParametricPath, PathSample, great_circle_path
from .sphere import BlaschkeFrame, DusPoint, blaschke_frame, dual_curve, dus_point, rus_point
from .surface import RuledPatch, StrictionData, SurfaceSample, directrix, ruled_patch, striction_point, surface_sample

__all__ = [
    "AffineField", "BezierPath2", "BlaschkeFrame", "DomainPoint", "DualAngle",
    "DualScalar", "DualVec3", "DusPoint", "ExpressionField",
    "IntegralInvariants", "InvariantSample", "LiftSample", "LineElement",
    "LinePath", "ParametricPath", "PathSample", "QuadratureConfig",
    "RuledPatch", "StrictionData", "SurfaceSample", "Tolerances",
    "ValidationReport", "affine", "blaschke_frame", "directrix", "dual_angle",
    "dual_curve", "dus_point", "frame_invariants_oracle", "great_circle_path",
    "integral_invariants", "invariants_at", "lift_fn", "load_tolerances",
    "normalize", "parse_field", "profile", "ruled_patch", "rus_point",
    "striction_point", "surface_sample", "validate_closed_c1",
]
