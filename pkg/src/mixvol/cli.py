"""Command line front end: ``mixvol <subcommand> problem.json``.

Prints ``{"value": "p/q"}`` on success (exit 0), or
``{"error": {"code": ..., "message": ...}}`` with exit 2 for a violated
precondition and exit 3 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Any, Callable

from . import invariants as inv
from .errors import MixvolError, PreconditionError
from .io import (
    SchemaError,
    dumps,
    fmt_rational,
    is_pair_literal,
    load_json,
    read_config,
    read_int,
    read_int_vector,
    read_list,
    read_pair,
    read_polyhedron,
    read_polyhedron_or_empty,
)
from .lattice import (
    count_points,
    count_points_pair,
    prism_lattice_terms,
    prism_mixed_volume_direct,
    prism_mixed_volume_lattice,
)
from .pairs import METHODS, face_formula_terms, mixed_volume_pairs, pair_volume, stable_mixed_volume_pairs
from .polyhedron import lattice_volume, mixed_volume
from .resultants import codim_config, essential_subcollection, resultant_support, resultantal_codim
from .series import PairPolynomial

Result = tuple[Any, list[str] | None]


def _problem(args) -> Any:
    if args.problem is None:
        raise SchemaError("no problem file given")
    return load_json(args.problem)


def _one(obj: Any, key: str) -> Any:
    return obj[key] if isinstance(obj, dict) and key in obj else obj


def cmd_volume(args) -> Result:
    P = read_polyhedron(_one(_problem(args), "polyhedron"))
    return lattice_volume(P), None


def cmd_mixed_volume(args) -> Result:
    obj = _problem(args)
    polys = [read_polyhedron(p, f"polyhedra[{i}]") for i, p in enumerate(read_list(obj, "polyhedra"))]
    return mixed_volume(polys), None


def cmd_pair_volume(args) -> Result:
    return pair_volume(read_pair(_one(_problem(args), "pair"))), None


def _pairs(obj) -> list:
    return [read_pair(p, f"pairs[{i}]") for i, p in enumerate(read_list(obj, "pairs"))]


def cmd_pair_mixed_volume(args) -> Result:
    pairs = _pairs(_problem(args))
    value = mixed_volume_pairs(pairs, args.method)
    explain = None
    if args.explain and args.method == "face_formula":
        explain = [
            f"slot {t.k} normal {list(t.gamma)}: gap {fmt_rational(t.support_gap)} x face volume "
            f"{fmt_rational(t.face_mixed_volume)} / {len(t.gamma)} = {fmt_rational(t.value)}"
            for t in face_formula_terms(pairs)
        ]
    return value, explain


def cmd_stable(args) -> Result:
    obj = _problem(args)
    pairs = []
    for i, p in enumerate(read_list(obj, "pairs")):
        if not is_pair_literal(p):
            raise SchemaError(f"pairs[{i}]: a pair needs keys 'A' and 'B'")
        from .pairs import PolyhedronPair

        pairs.append(PolyhedronPair(read_polyhedron(p["A"]), read_polyhedron(p["B"])))
    gamma0 = None
    if args.gamma0 is not None:
        gamma0 = read_int_vector(load_json(args.gamma0), "--gamma0")
    elif isinstance(obj, dict) and "gamma0" in obj:
        gamma0 = read_int_vector(obj["gamma0"], "gamma0")
    return stable_mixed_volume_pairs(pairs, gamma0, args.method), None


def cmd_lattice_count(args) -> Result:
    obj = _problem(args)
    if isinstance(obj, dict) and "pair" in obj:
        return count_points_pair(read_pair(obj["pair"])), None
    if is_pair_literal(obj):
        return count_points_pair(read_pair(obj)), None
    return count_points(read_polyhedron(_one(obj, "polyhedron"))), None


def _prism_entries(obj) -> list[list]:
    rows = read_list(obj, "entries")
    if not all(isinstance(r, list) and r for r in rows):
        raise SchemaError("entries must be a nonempty list of nonempty rows")
    pairs_mode = any(is_pair_literal(x) for r in rows for x in r)
    dim = next((read_polyhedron(x["A"] if is_pair_literal(x) else x).dim for r in rows for x in r if x is not None), None)
    from .pairs import PolyhedronPair
    from .polyhedron import Polyhedron

    out = []
    for i, r in enumerate(rows):
        row = []
        for j, x in enumerate(r):
            where = f"entries[{i}][{j}]"
            if pairs_mode:
                if x is None:
                    row.append(PolyhedronPair(Polyhedron.empty(dim), Polyhedron.empty(dim)))
                elif is_pair_literal(x):
                    row.append(read_pair(x, where))
                else:
                    raise SchemaError(f"{where}: mixing pairs and polyhedra")
            else:
                row.append(read_polyhedron_or_empty(x, dim, where))
        out.append(row)
    return out


def cmd_prism_mv(args) -> Result:
    B = _prism_entries(_problem(args))
    if args.via == "lattice":
        value = prism_mixed_volume_lattice(B)
        explain = None
        if args.explain:
            explain = [f"J={list(J)} b={list(b)}: {v}" for J, b, v in prism_lattice_terms(B)]
        return value, explain
    return prism_mixed_volume_direct(B, args.method), None


def cmd_eval_pair_fn(args) -> Result:
    obj = _problem(args)
    if args.expr is not None:
        fobj = load_json(args.expr)
    elif isinstance(obj, dict) and "function" in obj:
        fobj = obj["function"]
    else:
        raise SchemaError("no function given (use --expr or a 'function' key)")
    try:
        f = PairPolynomial.from_json(fobj)
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"function: {e}") from None
    bindings = [read_pair(p, f"bindings[{i}]") for i, p in enumerate(read_list(obj, "bindings"))]
    n = read_int(obj, "n") if "n" in obj else bindings[0].dim
    terms = f.evaluation_terms(bindings, n, args.method)
    value = sum((c * v for _, c, v in terms), Fraction(0))
    explain = [f"{list(e)}: {fmt_rational(c)} x {fmt_rational(v)}" for e, c, v in terms] if args.explain else None
    return value, explain


def _polys(obj, key="polyhedra") -> list:
    return [read_polyhedron(p, f"{key}[{i}]") for i, p in enumerate(read_list(obj, key))]


def cmd_milnor(args) -> Result:
    polys = _polys(_problem(args))
    value = inv.milnor_number(polys, args.method)
    explain = None
    if args.explain:
        explain = [f"J={list(J)}: mu={fmt_rational(v)}" for J, v in inv.milnor_terms(polys, args.method)]
    return value, explain


def cmd_gz_index(args) -> Result:
    obj = _problem(args)
    fs = _polys(obj, "f")
    if "xw" in obj:
        xws = _polys(obj, "xw")
    elif "w" in obj:
        xws = inv.one_form_polyhedra(_polys(obj, "w"))
    else:
        raise SchemaError("gz-index needs 'xw' (polyhedra of x_i w_i) or 'w' (polyhedra of w_i)")
    value = inv.gz_index(fs, xws, args.variant, args.method)
    explain = None
    if args.explain:
        explain = [f"J={list(J)}: {fmt_rational(v)}" for J, v in inv.gz_index_terms(fs, xws, args.variant, args.method)]
    return value, explain


def _shape(obj) -> tuple[int, int, int]:
    return read_int(obj, "n"), read_int(obj, "I"), read_int(obj, "k")


def cmd_det_mult(args) -> Result:
    obj = _problem(args)
    n, I, k = _shape(obj)
    cols = _polys(obj, "columns")
    terms = inv.det_multiplicity_terms(n, I, k, cols, args.method)
    value = sum((v for _, v in terms), Fraction(0))
    explain = [f"columns {list(c)}: {fmt_rational(v)}" for c, v in terms] if args.explain else None
    return value, explain


def _blocks(obj) -> list:
    blocks = read_list(obj, "blocks")
    out = []
    for b, block in enumerate(blocks):
        if not isinstance(block, list) or not block or not all(isinstance(r, list) and r for r in block):
            raise SchemaError(f"blocks[{b}] must be a nonempty matrix of polyhedra")
        out.append([[read_polyhedron(x, f"blocks[{b}][{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(block)])
    return out


def cmd_collection_mult(args) -> Result:
    return inv.collection_multiplicity(_blocks(_problem(args)), args.method), None


def cmd_resultantal_mult(args) -> Result:
    obj = _problem(args)
    if "matrix" in obj:
        matrix = [[read_polyhedron(x, f"matrix[{i}][{j}]") for j, x in enumerate(r)]
                  for i, r in enumerate(read_list(obj, "matrix"))]
        sigmas, comps = inv.determinant_encoding(matrix)
    else:
        sigmas = read_config(obj)
        comps_raw = read_list(obj, "components")
        comps = [[read_polyhedron(x, f"components[{i}][{j}]") for j, x in enumerate(c)] for i, c in enumerate(comps_raw)]
    return inv.resultantal_multiplicity(sigmas, comps, args.method), None


def cmd_euler_char(args) -> Result:
    obj = _problem(args)
    n, I, k = _shape(obj)
    polys = _polys(obj)
    terms = inv.euler_char_terms(n, I, k, polys, args.method)
    value = sum((t[3] for t in terms), Fraction(0))
    explain = None
    if args.explain:
        explain = [f"J={list(J)} a0={a0} columns={list(c)}: {fmt_rational(v)}" for J, a0, c, v in terms]
    return value, explain


def cmd_radial_index(args) -> Result:
    obj = _problem(args)
    n, I, k = _shape(obj)
    return inv.radial_index_det(n, I, k, _polys(obj), args.method), None


def _sigmas(args) -> list:
    src = args.sigmas if args.sigmas is not None else args.problem
    if src is None:
        raise SchemaError("no configuration given (use --sigmas)")
    obj = load_json(src)
    return read_config(obj), obj


def cmd_resultant_support(args) -> Result:
    sigmas, obj = _sigmas(args)
    if args.gamma is not None:
        graw = load_json(args.gamma)
    elif isinstance(obj, dict) and "gamma" in obj:
        graw = obj["gamma"]
    else:
        raise SchemaError("no weights given (use --gamma)")
    if not isinstance(graw, list) or len(graw) != len(sigmas):
        raise SchemaError("gamma must hold one weight list per configuration")
    gamma = [read_int_vector(g, f"gamma[{i}]") for i, g in enumerate(graw)]
    convention = "max" if args.max_convention else "min"
    return resultant_support(sigmas, gamma, convention, args.method), None


def cmd_essential(args) -> Result:
    sigmas, _ = _sigmas(args)
    return list(essential_subcollection(sigmas)), None


def cmd_codim(args) -> Result:
    sigmas, _ = _sigmas(args)
    if args.resultantal:
        return resultantal_codim(sigmas), None
    return codim_config(sigmas), None


COMMANDS: dict[str, tuple[Callable[[Any], Result], str]] = {
    "volume": (cmd_volume, "lattice volume of a bounded polyhedron"),
    "mixed-volume": (cmd_mixed_volume, "classical mixed volume of n bounded polyhedra"),
    "pair-volume": (cmd_pair_volume, "volume of a pair of polyhedra"),
    "pair-mixed-volume": (cmd_pair_mixed_volume, "mixed volume of n pairs"),
    "stable": (cmd_stable, "stable mixed volume of n pairs"),
    "lattice-count": (cmd_lattice_count, "integer points of a polyhedron or a pair"),
    "prism-mv": (cmd_prism_mv, "mixed volume of prisms"),
    "eval-pair-fn": (cmd_eval_pair_fn, "value of a rational function of pairs"),
    "milnor": (cmd_milnor, "Milnor number of a generic complete intersection"),
    "gz-index": (cmd_gz_index, "index of a 1-form on a complete intersection"),
    "det-mult": (cmd_det_mult, "multiplicity of a determinantal germ"),
    "collection-mult": (cmd_collection_mult, "multiplicity of a collection of matrices"),
    "resultantal-mult": (cmd_resultantal_mult, "multiplicity of a resultantal germ"),
    "euler-char": (cmd_euler_char, "Euler characteristic of a Milnor fiber on a determinantal germ"),
    "radial-index": (cmd_radial_index, "radial index of a 1-form on a determinantal germ"),
    "resultant-support": (cmd_resultant_support, "support function of a resultant Newton polytope"),
    "essential": (cmd_essential, "minimal essential subcollection (0-based indices)"),
    "codim": (cmd_codim, "codimension of a collection of point configurations"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixvol", description="Exact mixed volumes of pairs of polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("problem", nargs="?", help="problem JSON file, '-' for stdin, or an inline literal")
        p.add_argument("--explain", action="store_true", help="include the term-by-term decomposition")
        p.add_argument("--method", choices=METHODS, default="face_formula")
        if name == "stable":
            p.add_argument("--gamma0", help="interior covector as a JSON list")
        if name == "prism-mv":
            p.add_argument("--via", choices=("lattice", "direct"), default="lattice")
        if name == "eval-pair-fn":
            p.add_argument("--expr", help="function JSON (file or inline)")
        if name == "gz-index":
            p.add_argument("--variant", action="store_true", help="use the orthant in the one-form prisms")
        if name in ("resultant-support", "essential", "codim"):
            p.add_argument("--sigmas", help="configuration JSON (file or inline)")
        if name == "resultant-support":
            p.add_argument("--gamma", help="weights JSON (file or inline)")
            p.add_argument("--max-convention", action="store_true", help="return the maximum instead of the minimum")
        if name == "codim":
            p.add_argument("--resultantal", action="store_true", help="maximum over subcollections")
    return parser


def _error_code(e: Exception) -> str:
    name = type(e).__name__
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)


def _render(value) -> Any:
    if isinstance(value, list):
        return value
    return fmt_rational(value)


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 3 if e.code else 0
    handler = COMMANDS[args.command][0]
    try:
        value, explain = handler(args)
    except SchemaError as e:
        print(dumps({"error": {"code": "schema_error", "message": str(e)}}), file=out)
        return 3
    except PreconditionError as e:
        print(dumps({"error": {"code": _error_code(e), "message": str(e)}}), file=out)
        return 2
    except MixvolError as e:
        print(dumps({"error": {"code": _error_code(e), "message": str(e)}}), file=out)
        return 2
    result: dict[str, Any] = {"value": _render(value)}
    if explain is not None:
        result["explain"] = explain
    print(dumps(result), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
