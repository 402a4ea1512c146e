"""Batch front door.

Subcommands: validate, invariants, integrals, mesh, serve.
Exit codes: 0 ok, 1 domain or validation failure, 2 input parse failure,
3 environment failure.  RULEDKIT_TOL overrides tolerance defaults.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .bezier import load_net, validate_closed_c1
from .config import Tolerances, load_tolerances
from .errors import (AllSamplesDegenerate, CylindricalPoint, DomainError,
                     NotClosed, ParseError, QuadratureNoConvergence,
                     RuledKitError)
from .integrals import PITCH_CONVENTIONS, QuadratureConfig, integral_invariants
from .invariants import profile
from .jsonout import dumps
from .liftfield import LiftField, ZERO_FIELD, parse_field
from .mesh import tessellate, write_obj, write_ply, write_profile_csv
from .paths import LinePath, ParametricPath
from .surface import ruled_patch, striction_point

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_ENV = 3


def _parse_analytic(spec: str) -> ParametricPath:
    """Named analytic test paths: 'line:u0=..,u1=..,v0=..,v1=..',
    'great-circle[:v0=..]', 'small-circle:v0=..', 'helicoid'."""
    name, _, argtext = spec.partition(":")
    kwargs = {}
    if argtext:
        for item in argtext.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ParseError(f"bad analytic argument {item!r}", 0)
            try:
                kwargs[key.strip()] = float(value)
            except ValueError:
                raise ParseError(f"bad analytic argument {item!r}", 0) from None
    if name == "line":
        try:
            return LinePath(kwargs["u0"], kwargs["u1"], kwargs["v0"], kwargs["v1"])
        except KeyError as exc:
            raise ParseError(f"line path needs u0,u1,v0,v1 (missing {exc})", 0) from None
    if name in ("great-circle", "helicoid"):
        return LinePath(0.0, 2.0 * math.pi, kwargs.get("v0", math.pi / 2),
                        kwargs.get("v0", math.pi / 2))
    if name == "small-circle":
        if "v0" not in kwargs:
            raise ParseError("small-circle path needs v0", 0)
        return LinePath(0.0, 2.0 * math.pi, kwargs["v0"], kwargs["v0"])
    raise ParseError(f"unknown analytic path {name!r}", 0)


def _load_path(args) -> ParametricPath:
    if getattr(args, "curve", None) and getattr(args, "analytic", None):
        raise ParseError("give either --curve or --analytic, not both", 0)
    if getattr(args, "curve", None):
        return load_net(args.curve)
    if getattr(args, "analytic", None):
        return _parse_analytic(args.analytic)
    raise ParseError("an input is required: --curve FILE or --analytic SPEC", 0)


def _load_field(args) -> LiftField:
    if not getattr(args, "field", None):
        return ZERO_FIELD
    return parse_field(args.field)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_w_range(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ParseError(f"w range must look like '-1:1', got {text!r}", 0)
    try:
        lo_f, hi_f = float(lo), float(hi)
    except ValueError:
        raise ParseError(f"bad w range {text!r}", 0) from None
    if not lo_f < hi_f:
        raise ParseError(f"empty w range {text!r}", 0)
    return lo_f, hi_f


def cmd_validate(args, tol: Tolerances) -> int:
    net = load_net(args.curve)
    report = validate_closed_c1(net, samples=args.samples)
    _write(args.out, dumps(report.to_dict()) + "\n")
    return EXIT_OK if report.closed else EXIT_DOMAIN


def cmd_invariants(args, tol: Tolerances) -> int:
    path = _load_path(args)
    field = _load_field(args)
    samples = profile(path, field, args.samples, tol)
    if args.format == "json":
        _write(args.out, dumps([s.to_dict() for s in samples]) + "\n")
    else:
        _write(args.out, write_profile_csv(samples))
    return EXIT_OK


def cmd_integrals(args, tol: Tolerances) -> int:
    path = _load_path(args)
    field = _load_field(args)
    cfg = QuadratureConfig(rel_tol=tol.quad_rel_tol, max_depth=tol.quad_max_depth)
    result = integral_invariants(path, field, cfg, args.pitch_convention, tol)
    _write(args.out, dumps(result.to_dict()) + "\n")
    return EXIT_OK


def cmd_mesh(args, tol: Tolerances) -> int:
    path = _load_path(args)
    field = _load_field(args)
    patch = ruled_patch(path, field, _parse_w_range(args.w_range), tol)
    mesh = tessellate(patch, args.nt, args.nw)
    if args.striction:
        from .mesh import add_striction_polyline
        points = [striction_point(path, field, i / args.nt, tol,
                                  with_arclength=False).m
                  for i in range(args.nt + 1)]
        add_striction_polyline(mesh, points)
    text = write_obj(mesh) if args.format == "obj" else write_ply(mesh)
    _write(args.out, text)
    return EXIT_OK


def cmd_serve(args, tol: Tolerances) -> int:
    from .service import serve
    try:
        serve(args.host, args.port, tol)
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_ENV
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruledkit",
        description="ruled surfaces from control nets on the dual unit sphere")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, needs_field=True):
        p.add_argument("--curve", help="control net JSON file")
        p.add_argument("--analytic", help="named analytic path, e.g. 'line:u0=0,u1=1,v0=0,v1=1'")
        if needs_field:
            p.add_argument("--field", help="lift field 'UBAR-EXPR , VBAR-EXPR' (default: zero field)")
        p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("validate", help="closure / continuity report for a net")
    p.add_argument("--curve", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("invariants", help="invariant profile along the curve")
    add_io(p)
    p.add_argument("--samples", type=int, default=128)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("integrals", help="pitch / angle of pitch / striction length")
    add_io(p)
    p.add_argument("--pitch-convention", choices=PITCH_CONVENTIONS,
                   default="coordinate")
    p.set_defaults(fn=cmd_integrals)

    p = sub.add_parser("mesh", help="tessellate and export OBJ or ascii PLY")
    add_io(p)
    p.add_argument("--nt", type=int, default=128)
    p.add_argument("--nw", type=int, default=8)
    p.add_argument("--w-range", default="-1:1")
    p.add_argument("--format", choices=("obj", "ply"), default="obj")
    p.add_argument("--striction", action="store_true",
                   help="append the striction polyline as extra vertices")
    p.set_defaults(fn=cmd_mesh)

    p = sub.add_parser("serve", help="run the JSON design service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = load_tolerances()
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.fn(args, tol)
    except ParseError as exc:
        print(dumps({"error": str(exc), "position": exc.position}) , file=sys.stderr)
        return EXIT_PARSE
    except (NotClosed, CylindricalPoint, DomainError, QuadratureNoConvergence,
            AllSamplesDegenerate, ValueError) as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    except FileNotFoundError as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_ENV
    except OSError as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_ENV
    except RuledKitError as exc:
        print(dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
