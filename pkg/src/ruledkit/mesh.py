"""Tessellation and text serialization (OBJ, ascii PLY, profile CSV).

Text formats only, with a fixed 17-significant-digit number format, so
golden files diff cleanly and round-trip without loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field

from .dual import Vec3, vadd, vscale
from .errors import AllSamplesDegenerate, ParseError
from .invariants import InvariantSample
from .surface import RuledPatch


def fmt(x: float) -> str:
    return f"{x:.17g}"


@dataclass
class TriMesh:
    vertices: list[Vec3]
    normals: list[Vec3]
    faces: list[tuple[int, int, int]]
    ruling_polylines: list[list[int]] = dataclass_field(default_factory=list)
    striction_polyline: list[int] = dataclass_field(default_factory=list)
    holes: list[tuple[int, int]] = dataclass_field(default_factory=list)


def tessellate(patch: RuledPatch, nt: int, nw: int) -> TriMesh:
    """Grid mesh over (t, w) with per-vertex surface normals.

    Vertices whose normal is undefined (cylindrical rows, developable
    centers) are skipped and reported in ``holes``; adjacent faces are
    dropped.  A full grid has (nt+1)(nw+1) vertices and 2*nt*nw faces.
    """
    if nt < 2 or nw < 1:
        raise ValueError("need nt >= 2 and nw >= 1")
    w0, w1 = patch.w_range
    vertices: list[Vec3] = []
    normals: list[Vec3] = []
    index: dict[tuple[int, int], int] = {}
    holes: list[tuple[int, int]] = []
    for i in range(nt + 1):
        t = i / nt
        base = patch.directrix(t)
        ruling = patch.ruling(t)
        for j in range(nw + 1):
            w = w0 + (w1 - w0) * j / nw
            n = patch.normal(t, w)
            if n is None or any(map(math.isnan, base + ruling)):
                holes.append((i, j))
                continue
            index[(i, j)] = len(vertices)
            vertices.append(vadd(base, vscale(w, ruling)))
            normals.append(n)
    if not vertices:
        raise AllSamplesDegenerate("every grid sample was degenerate")
    faces: list[tuple[int, int, int]] = []
    for i in range(nt):
        for j in range(nw):
            quad = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            if any(q not in index for q in quad):
                continue
            a, b, c, d = (index[q] for q in quad)
            faces.append((a, b, c))
            faces.append((a, c, d))
    rulings = []
    for i in range(nt + 1):
        column = [index[(i, j)] for j in range(nw + 1) if (i, j) in index]
        if len(column) >= 2:
            rulings.append(column)
    return TriMesh(vertices, normals, faces, rulings, [], holes)


def add_striction_polyline(mesh: TriMesh, points: list[Vec3]) -> None:
    """Append striction samples as face-free vertices and index them."""
    start = len(mesh.vertices)
    mesh.vertices.extend(points)
    mesh.striction_polyline = list(range(start, start + len(points)))


def mesh_to_json_dict(mesh: TriMesh, striction: list[Vec3] | None = None) -> dict:
    if striction is None:
        striction = [mesh.vertices[i] for i in mesh.striction_polyline]
    return {
        "vertices": [list(v) for v in mesh.vertices],
        "normals": [list(n) for n in mesh.normals],
        "faces": [list(f) for f in mesh.faces],
        "striction": [list(p) for p in striction],
    }


# ---------------------------------------------------------------------------
# OBJ

def write_obj(mesh: TriMesh) -> str:
    if not mesh.vertices:
        raise ValueError("refusing to write an empty mesh")
    lines = []
    for v in mesh.vertices:
        lines.append(f"v {fmt(v[0])} {fmt(v[1])} {fmt(v[2])}")
    for n in mesh.normals:
        lines.append(f"vn {fmt(n[0])} {fmt(n[1])} {fmt(n[2])}")
    for a, b, c in mesh.faces:
        lines.append(f"f {a + 1}//{a + 1} {b + 1}//{b + 1} {c + 1}//{c + 1}")
    return "\n".join(lines) + "\n"


def read_obj(text: str) -> TriMesh:
    vertices: list[Vec3] = []
    normals: list[Vec3] = []
    faces: list[tuple[int, int, int]] = []
    for lineno, line in enumerate(text.splitlines()):
        parts = line.split()
        if not parts or parts[0] == "#":
            continue
        if parts[0] == "v":
            vertices.append(tuple(float(x) for x in parts[1:4]))
        elif parts[0] == "vn":
            normals.append(tuple(float(x) for x in parts[1:4]))
        elif parts[0] == "f":
            idx = [int(p.split("/")[0]) - 1 for p in parts[1:4]]
            faces.append(tuple(idx))
        else:
            raise ParseError(f"unsupported OBJ statement {parts[0]!r}", lineno)
    return TriMesh(vertices, normals, faces)


# ---------------------------------------------------------------------------
# ascii PLY

def write_ply(mesh: TriMesh) -> str:
    if not mesh.vertices:
        raise ValueError("refusing to write an empty mesh")
    pad = [(0.0, 0.0, 0.0)] * (len(mesh.vertices) - len(mesh.normals))
    lines = [
        "ply",
        "format ascii 1.0",
        f"element vertex {len(mesh.vertices)}",
        "property float x", "property float y", "property float z",
        "property float nx", "property float ny", "property float nz",
        f"element face {len(mesh.faces)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    for v, n in zip(mesh.vertices, mesh.normals + pad):
        lines.append(" ".join(fmt(x) for x in (*v, *n)))
    for f in mesh.faces:
        lines.append(f"3 {f[0]} {f[1]} {f[2]}")
    return "\n".join(lines) + "\n"


def read_ply(text: str) -> TriMesh:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "ply":
        raise ParseError("not a PLY file", 0)
    n_vertex = n_face = 0
    body = 0
    for i, line in enumerate(lines):
        parts = line.split()
        if parts[:2] == ["element", "vertex"]:
            n_vertex = int(parts[2])
        elif parts[:2] == ["element", "face"]:
            n_face = int(parts[2])
        elif parts[:1] == ["end_header"]:
            body = i + 1
            break
    else:
        raise ParseError("missing end_header", 0)
    vertices: list[Vec3] = []
    normals: list[Vec3] = []
    for line in lines[body:body + n_vertex]:
        x, y, z, nx, ny, nz = (float(p) for p in line.split())
        vertices.append((x, y, z))
        normals.append((nx, ny, nz))
    faces: list[tuple[int, int, int]] = []
    for line in lines[body + n_vertex:body + n_vertex + n_face]:
        parts = line.split()
        if parts[0] != "3":
            raise ParseError("only triangles are supported", body)
        faces.append((int(parts[1]), int(parts[2]), int(parts[3])))
    return TriMesh(vertices, normals, faces)


# ---------------------------------------------------------------------------
# invariant profile CSV

CSV_HEADER = "t,kappa,kappa_bar,tau,tau_bar,delta,cot_sigma,flags"


def write_profile_csv(samples: list[InvariantSample]) -> str:
    if not samples:
        raise ValueError("refusing to write an empty profile")
    lines = [CSV_HEADER]
    for s in samples:
        lines.append(",".join([
            fmt(s.t), fmt(s.kappa), fmt(s.kappa_bar), fmt(s.tau),
            fmt(s.tau_bar), fmt(s.delta), fmt(s.cot_sigma),
            "|".join(s.flags),
        ]))
    return "\n".join(lines) + "\n"


def read_profile_csv(text: str) -> list[InvariantSample]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ParseError("bad profile header", 0)
    out = []
    for line in lines[1:]:
        cells = line.split(",")
        flags = tuple(f for f in cells[7].split("|") if f)
        out.append(InvariantSample(*(float(c) for c in cells[:7]), flags))
    return out
