#!/usr/bin/env python3
"""Export OBJ meshes for a few canonical ruled surfaces.

Produces the example-net surface, a helicoid, and a planar line pencil,
each with the striction polyline appended as extra vertices.
"""

import argparse
import math
import pathlib
import sys

from ruledkit import BezierPath2, affine, great_circle_path, parse_field, ruled_patch
from ruledkit.errors import CylindricalPoint
from ruledkit.mesh import add_striction_polyline, tessellate, write_obj
from ruledkit.surface import striction_point

PI = math.pi

EXAMPLE_NET = BezierPath2((
    (PI / 8, PI / 4), (PI / 8, 3 * PI / 8), (3 * PI / 8, 3 * PI / 8),
    (3 * PI / 8, PI / 4), (3 * PI / 8, PI / 8), (PI / 8, PI / 8),
    (PI / 8, PI / 4),
))

CONFIGS = {
    "example": (EXAMPLE_NET, parse_field("u - v, u + v"), (-1.0, 1.0)),
    "helicoid": (great_circle_path(PI / 2), affine(0.25, 0, 0, 0, 0, 0), (-1.0, 1.0)),
    "pencil": (great_circle_path(PI / 2), affine(0, 0, 0, 0, 0, 0.6), (-0.5, 1.5)),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out")
    ap.add_argument("--nt", type=int, default=96)
    ap.add_argument("--nw", type=int, default=8)
    args = ap.parse_args()

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, (path, field, w_range) in CONFIGS.items():
        patch = ruled_patch(path, field, w_range)
        mesh = tessellate(patch, args.nt, args.nw)
        try:
            striction = [striction_point(path, field, i / args.nt,
                                         with_arclength=False).m
                         for i in range(args.nt + 1)]
            add_striction_polyline(mesh, striction)
        except CylindricalPoint:
            pass
        target = outdir / f"{name}.obj"
        target.write_text(write_obj(mesh))
        print(f"{target}  ({len(mesh.vertices)} vertices, "
              f"{len(mesh.faces)} faces, {len(mesh.holes)} holes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
