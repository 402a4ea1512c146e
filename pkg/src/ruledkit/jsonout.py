"""Deterministic JSON output with the package-wide 17-significant-digit
float format (the stdlib encoder cannot override float rendering, so
this is a tiny direct emitter for plain data trees)."""

from __future__ import annotations

import json
import math


def _emit(x, indent: int | None, level: int) -> str:
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite number {x!r} in JSON output")
        return f"{x:.17g}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, dict):
        items = sorted(x.items())
        if not items:
            return "{}"
        body = [f"{json.dumps(str(k))}: {_emit(v, indent, level + 1)}"
                for k, v in items]
        return _wrap("{", body, "}", indent, level)
    if isinstance(x, (list, tuple)):
        if not x:
            return "[]"
        body = [_emit(v, indent, level + 1) for v in x]
        return _wrap("[", body, "]", indent, level)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _wrap(opener: str, body: list[str], closer: str,
          indent: int | None, level: int) -> str:
    if indent is None:
        return opener + ", ".join(body) + closer
    pad = " " * (indent * (level + 1))
    tail = " " * (indent * level)
    return opener + "\n" + ",\n".join(pad + b for b in body) + "\n" + tail + closer


def dumps(obj, indent: int | None = 2) -> str:
    return _emit(obj, indent, 0)
