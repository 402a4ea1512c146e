"""Central tolerance configuration.

Every module compares against the same named thresholds so that the
structural checks (unit norms, Pluecker constraints) and the numerical
checks (frame residuals, identity checks) stay consistent package-wide.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    # exact-by-construction identities (unit norms, Pluecker constraints)
    structural: float = 1e-12
    # assembled quantities (frame orthonormality, decomposition residuals)
    numerical: float = 1e-9
    # below this curvature a sample counts as cylindrical and the frame
    # is refused rather than limit-extended
    kappa_min: float = 1e-8
    # |sin v| below this flags chart degeneracy on a sample
    pole_sin_v: float = 1e-6
    # |kappa_bar| below this flags a developable sample
    developable: float = 1e-9
    # quadrature controls
    quad_rel_tol: float = 1e-9
    quad_max_depth: int = 20
    # step used where a derivative is obtained by central differencing
    fd_step: float = 1e-5


DEFAULT = Tolerances()

ENV_VAR = "RULEDKIT_TOL"


def load_tolerances(env: str | None = None) -> Tolerances:
    """Build tolerances, applying the RULEDKIT_TOL override if present.

    The override is either a single float (replaces ``numerical``) or a
    comma-separated list of ``name=value`` pairs naming Tolerances fields.
    """
    raw = os.environ.get(ENV_VAR) if env is None else env
    if not raw:
        return DEFAULT
    raw = raw.strip()
    known = {f.name: f.type for f in fields(Tolerances)}
    try:
        if "=" not in raw:
            return replace(DEFAULT, numerical=float(raw))
        updates = {}
        for item in raw.split(","):
            name, _, value = item.partition("=")
            name = name.strip()
            if name not in known:
                raise ValueError(f"unknown tolerance {name!r}")
            cast = int if name == "quad_max_depth" else float
            updates[name] = cast(value)
        return replace(DEFAULT, **updates)
    except ValueError as exc:
        raise ValueError(f"bad {ENV_VAR} value {raw!r}: {exc}") from exc
