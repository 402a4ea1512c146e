#!/usr/bin/env python3
"""Regenerate tests/golden files from the current implementation.

Run from the repository root after an intentional numerical change, then
inspect the diff before committing.
"""

import math
import pathlib
import sys

from ruledkit import BezierPath2, integral_invariants, parse_field
from ruledkit.bezier import net_to_json
from ruledkit.jsonout import dumps

PI = math.pi
GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> int:
    net = BezierPath2((
        (PI / 8, PI / 4), (PI / 8, 3 * PI / 8), (3 * PI / 8, 3 * PI / 8),
        (3 * PI / 8, PI / 4), (3 * PI / 8, PI / 8), (PI / 8, PI / 8),
        (PI / 8, PI / 4),
    ))
    (GOLDEN / "example_net.json").write_text(net_to_json(net))
    ii = integral_invariants(net, parse_field("u - v, u + v"))
    (GOLDEN / "example_net_integrals.json").write_text(dumps(ii.to_dict()) + "\n")
    print(f"regenerated goldens in {GOLDEN}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
