"""Stateless JSON-over-HTTP design service.

One POST /api/design request carries a control net and lift field; the
response carries validation, mesh, striction polyline, invariant
profile, integral invariants, and warnings.  Identical requests produce
byte-identical responses.  GET /api/health reports version and the
active tolerances.  CORS is open so the browser designer can call from
any origin.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import __version__
from .bezier import BezierPath2, DomainPoint, parse_angle, validate_closed_c1
from .config import DEFAULT, Tolerances
from .errors import (AllSamplesDegenerate, CylindricalPoint, DomainError,
                     NotClosed, ParseError, QuadratureNoConvergence)
from .integrals import QuadratureConfig, integral_invariants
from .invariants import profile
from .jsonout import dumps
from .liftfield import ExpressionField, parse_expression
from .mesh import mesh_to_json_dict, tessellate
from .surface import ruled_patch, striction_point

COUNT_RANGE = (2, 4096)


class RequestInvalid(Exception):
    """400: malformed request (bad JSON shape, bad expression, bad counts)."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class RequestUnprocessable(Exception):
    """422: well-formed but geometrically unusable (open net, degenerate)."""


def _count(body: dict, key: str, default: int) -> int:
    value = body.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        raise RequestInvalid(f"{key} must be an integer")
    if not COUNT_RANGE[0] <= value <= COUNT_RANGE[1]:
        raise RequestInvalid(
            f"{key} = {value} outside [{COUNT_RANGE[0]}, {COUNT_RANGE[1]}]")
    return value


def handle_design(body: object, tol: Tolerances = DEFAULT) -> tuple[int, dict]:
    """Run the full pipeline for one request; returns (status, response)."""
    if not isinstance(body, dict):
        raise RequestInvalid("request body must be a JSON object")
    raw_points = body.get("control_points")
    if not isinstance(raw_points, list) or len(raw_points) < 2:
        raise RequestInvalid("control_points must list at least two [u, v] pairs")
    try:
        points = tuple(DomainPoint(parse_angle(p[0]), parse_angle(p[1]))
                       for p in raw_points
                       if isinstance(p, (list, tuple)) and len(p) == 2)
    except ParseError as exc:
        raise RequestInvalid(str(exc), exc.position) from exc
    if len(points) != len(raw_points):
        raise RequestInvalid("every control point must be a [u, v] pair")

    lift = body.get("lift", {})
    if not isinstance(lift, dict):
        raise RequestInvalid("lift must be an object {u_bar, v_bar}")
    try:
        field = ExpressionField(
            parse_expression(str(lift.get("u_bar", "0"))),
            parse_expression(str(lift.get("v_bar", "0"))),
        )
    except ParseError as exc:
        raise RequestInvalid(f"lift expression: {exc}", exc.position) from exc

    samples = _count(body, "samples", 128)
    mesh_nt = _count(body, "mesh_nt", 128)
    mesh_nw = _count(body, "mesh_nw", 8)
    try:
        w_min = float(body.get("w_min", -1.0))
        w_max = float(body.get("w_max", 1.0))
    except (TypeError, ValueError):
        raise RequestInvalid("w_min / w_max must be numbers") from None
    if not w_min < w_max:
        raise RequestInvalid(f"empty w range [{w_min}, {w_max}]")

    net = BezierPath2(points)
    report = validate_closed_c1(net)
    if not report.closed:
        raise RequestUnprocessable("curve not closed")

    warnings = list(report.warnings)
    try:
        records = profile(net, field, samples, tol)
    except DomainError as exc:
        raise RequestUnprocessable(f"lift field undefined along the curve: {exc}") from exc
    flagged = sum(1 for r in records if r.flags)
    if flagged:
        warnings.append(f"{flagged} of {samples} profile samples flagged")

    integrals = None
    try:
        cfg = QuadratureConfig(rel_tol=tol.quad_rel_tol, max_depth=tol.quad_max_depth)
        integrals = integral_invariants(net, field, cfg, tol=tol).to_dict()
    except (CylindricalPoint, QuadratureNoConvergence, DomainError, NotClosed) as exc:
        warnings.append(f"integral invariants unavailable: {exc}")

    try:
        patch = ruled_patch(net, field, (w_min, w_max), tol)
        mesh = tessellate(patch, mesh_nt, mesh_nw)
    except (AllSamplesDegenerate, DomainError) as exc:
        raise RequestUnprocessable(str(exc)) from exc
    if mesh.holes:
        warnings.append(f"{len(mesh.holes)} degenerate mesh samples skipped")

    striction: list = []
    try:
        striction = [list(striction_point(net, field, i / mesh_nt, tol,
                                          with_arclength=False).m)
                     for i in range(mesh_nt + 1)]
    except (CylindricalPoint, DomainError) as exc:
        warnings.append(f"striction curve unavailable: {exc}")

    response = {
        "validation": report.to_dict(),
        "mesh": mesh_to_json_dict(mesh, striction),
        "striction": striction,
        "profile": [r.to_dict() for r in records],
        "integrals": integrals,
        "warnings": warnings,
    }
    return 200, response


def health_payload(tol: Tolerances = DEFAULT) -> dict:
    return {
        "status": "ok",
        "version": __version__,
        "tolerances": asdict(tol),
    }


class DesignHandler(BaseHTTPRequestHandler):
    tolerances: Tolerances = DEFAULT
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = dumps(payload).encode("utf-8") + b"\n"
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._send(200, health_payload(self.tolerances))
        else:
            self._send(404, {"error": f"no such endpoint {self.path!r}"})

    def do_POST(self):
        if self.path != "/api/design":
            self._send(404, {"error": f"no such endpoint {self.path!r}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            body = json.loads(raw)
        except (ValueError, json.JSONDecodeError) as exc:
            self._send(400, {"error": f"malformed JSON: {exc}"})
            return
        try:
            status, payload = handle_design(body, self.tolerances)
        except RequestInvalid as exc:
            payload = {"error": str(exc)}
            if exc.position is not None:
                payload["position"] = exc.position
            self._send(400, payload)
            return
        except RequestUnprocessable as exc:
            self._send(422, {"error": str(exc)})
            return
        except Exception as exc:  # never a bare traceback on the wire
            self._send(500, {"error": f"internal error: {exc}"})
            return
        self._send(status, payload)


def make_server(host: str, port: int,
                tol: Tolerances = DEFAULT) -> ThreadingHTTPServer:
    handler = type("BoundDesignHandler", (DesignHandler,), {"tolerances": tol})
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str, port: int, tol: Tolerances = DEFAULT) -> None:
    server = make_server(host, port, tol)
    try:
        server.serve_forever()
    finally:
        server.server_close()
