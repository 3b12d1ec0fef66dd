"""JSON readers and writers for problem files."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import MixvolError
from .pairs import PolyhedronPair
from .polyhedron import Polyhedron, parse_polyhedron


class SchemaError(MixvolError):
    """Malformed problem data (command line exit code 3)."""


def load_json(source: str) -> Any:
    """Read JSON from a file path, ``-`` for standard input, or an inline literal."""
    try:
        if source == "-":
            import sys

            return json.load(sys.stdin)
        p = Path(source)
        if p.exists():
            return json.loads(p.read_text())
        return json.loads(source)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from None
    except OSError as e:
        raise SchemaError(f"cannot read {source}: {e}") from None


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _require(obj: Any, key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise SchemaError(f"{where}: {key!r} has the wrong type")
    return val


def _rational_ok(x: Any) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    if isinstance(x, str):
        try:
            Fraction(x.strip())
            return "." not in x and "e" not in x.lower()
        except (ValueError, ZeroDivisionError):
            return False
    return False


def read_polyhedron(obj: Any, where: str = "polyhedron") -> Polyhedron:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if "newton" in obj:
        newton = obj["newton"]
        exps = _require(newton, "exponents", list, where)
        if not exps or not all(isinstance(e, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in e)
                               for e in exps):
            raise SchemaError(f"{where}: exponents must be a nonempty list of integer vectors")
    else:
        dim = _require(obj, "dim", int, where)
        verts = obj.get("vertices", [])
        rays = obj.get("rays", [])
        if not isinstance(verts, list) or not isinstance(rays, list):
            raise SchemaError(f"{where}: vertices and rays must be lists")
        for v in verts:
            if not isinstance(v, list) or len(v) != dim or not all(_rational_ok(x) for x in v):
                raise SchemaError(f"{where}: bad vertex {v!r}")
        for r in rays:
            if not isinstance(r, list) or len(r) != dim or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in r
            ):
                raise SchemaError(f"{where}: bad ray {r!r}")
    try:
        return parse_polyhedron(obj)
    except (ValueError, TypeError, KeyError) as e:
        raise SchemaError(f"{where}: {e}") from None


def read_polyhedron_or_empty(obj: Any, dim: int | None, where: str) -> Polyhedron:
    if obj is None:
        if dim is None:
            raise SchemaError(f"{where}: cannot place an empty entry without a known dimension")
        return Polyhedron.empty(dim)
    return read_polyhedron(obj, where)


def read_pair(obj: Any, where: str = "pair") -> PolyhedronPair:
    if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
        raise SchemaError(f"{where}: a pair needs keys 'A' and 'B'")
    return PolyhedronPair(read_polyhedron(obj["A"], where + ".A"), read_polyhedron(obj["B"], where + ".B"))


def is_pair_literal(obj: Any) -> bool:
    return isinstance(obj, dict) and "A" in obj and "B" in obj


def read_list(obj: Any, key: str, where: str = "problem") -> list:
    val = _require(obj, key, list, where)
    if not val:
        raise SchemaError(f"{where}: {key!r} must be nonempty")
    return val


def read_int(obj: Any, key: str, where: str = "problem") -> int:
    val = _require(obj, key, int, where)
    if isinstance(val, bool):
        raise SchemaError(f"{where}: {key!r} must be an integer")
    return val


def read_int_vector(obj: Any, where: str) -> tuple[int, ...]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise SchemaError(f"{where}: expected a list of integers")
    return tuple(obj)


def read_config(obj: Any, where: str = "configuration") -> list[list[tuple[int, ...]]]:
    """``{"N": n, "sigmas": [[[int,..],..],..]}``; ``N`` is optional."""
    sigmas = read_list(obj, "sigmas", where)
    out = []
    for i, s in enumerate(sigmas):
        if not isinstance(s, list) or not s:
            raise SchemaError(f"{where}: sigma {i} must be a nonempty list of points")
        out.append([read_int_vector(p, f"{where}.sigmas[{i}]") for p in s])
    dims = {len(p) for s in out for p in s}
    if len(dims) != 1:
        raise SchemaError(f"{where}: points have inconsistent lengths")
    if "N" in obj and obj["N"] != dims.pop():
        raise SchemaError(f"{where}: N does not match the point length")
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
