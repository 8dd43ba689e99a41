"""Command-line front end.

Each command is a thin adapter: it parses its inputs, runs one library
operation, and prints that operation's canonical JSON document (or a human
table with --format table).  Exit status: 0 on success, 2 for input or
validation errors, 3 for violated operation preconditions.  Errors are
reported as one-line JSON documents on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import fan, geometry, okounkov, serialize
from .polynomial import ParseError, PreconditionError, SparsePolynomial, parse

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3


class UsageError(ValueError):
    """Bad command line flags or malformed option values."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures through our JSON path
        raise UsageError(message)


def _fraction(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {token!r}") from exc


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("empty vector")
    return tuple(_fraction(p) for p in parts)


def _parse_rows(text: str) -> list[tuple[Fraction, ...]]:
    rows = [r for r in text.split(";") if r.strip()]
    if not rows:
        raise UsageError("empty row list")
    return [_parse_vector(r) for r in rows]


def _parse_subset(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"subset must be comma-separated integers: {text!r}") from exc


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers: {text!r}") from exc


def _load_points(path: str) -> list[tuple[Fraction, ...]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read points file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"points file is not valid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
        raise UsageError("points file must hold a JSON list of point lists")
    points = [tuple(_fraction(str(x)) for x in p) for p in data]
    if not points or len({len(p) for p in points}) != 1:
        raise UsageError("points file must hold same-length, nonempty points")
    return points


def _polynomial(args) -> SparsePolynomial:
    if not args.vars:
        raise UsageError("--vars is required")
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    return parse(args.polynomial, names)


def _constraints(args) -> tuple[list, int]:
    if args.eq_rows is None or args.eq_targets is None or args.dim is None:
        raise UsageError("--eq-rows, --eq-targets and --dim are required together")
    rows = _parse_rows(args.eq_rows)
    targets = _parse_vector(args.eq_targets)
    if len(rows) != len(targets):
        raise UsageError("one target per constraint row is required")
    if any(len(r) != args.dim for r in rows):
        raise UsageError("constraint rows must have --dim entries")
    return list(zip(rows, targets)), args.dim


def _cmd_check(args) -> dict:
    f = _polynomial(args)
    from .polynomial import is_well_poised

    return serialize.report_json(is_well_poised(f), f.variables)


def _cmd_polytope(args) -> dict:
    f = _polynomial(args)
    p = geometry.newton_polytope(f)
    doc = serialize.polytope_json(p)
    doc["simplex"] = geometry.is_simplex(p)
    if args.lattice:
        doc["lattice_points"] = serialize.encode_matrix(geometry.lattice_points(p))
    if args.minkowski:
        doc["minkowski"] = serialize.minkowski_json(
            geometry.minkowski_decomposition_witness(p)
        )
    return doc


def _cmd_faces(args) -> dict:
    f = _polynomial(args)
    return {"faces": [serialize.face_json(fd, f) for fd in geometry.faces(f)]}


def _cmd_trop(args) -> dict:
    f = _polynomial(args)
    if args.classify is not None:
        weight = _parse_vector(args.classify)
        subset = fan.classify_weight(f, weight)
        return {
            "weight": serialize.encode_vector(weight),
            "S": list(subset),
            "in_tropical_variety": fan.in_tropical_variety(f, weight),
        }
    return {"cones": [serialize.cone_json(c) for c in fan.tropical_variety(f)]}


def _cmd_matrix(args) -> dict:
    f = _polynomial(args)
    if args.S is None:
        raise UsageError("--S is required")
    m = okounkov.valuation_matrix(f, _parse_subset(args.S))
    return serialize.matrix_json(m, f.variables)


def _cmd_nok(args) -> dict:
    f = _polynomial(args)
    if args.cone_row is not None:
        generators = okounkov.global_nok_cone(f, _parse_vector(args.cone_row))
        return {
            "extra_row": serialize.encode_vector(_parse_vector(args.cone_row)),
            "generators": serialize.encode_matrix(generators),
        }
    if args.S is None or args.degree is None:
        raise UsageError("either --cone-row or both --S and --degree are required")
    subset = _parse_subset(args.S)
    degree = _parse_ints(args.degree)
    body = okounkov.nok_body(f, degree, subset)
    doc = {"S": list(sorted(subset)), "degree": list(degree)}
    doc.update(serialize.body_json(body))
    return doc


def _cmd_graded(args) -> dict:
    constraints, n = _constraints(args)
    component = okounkov.graded_component(constraints, n)
    return {
        "n": n,
        "count": len(component),
        "exponents": serialize.encode_matrix(component),
    }


def _cmd_project(args) -> dict:
    if args.rows is None:
        raise UsageError("--rows is required")
    rows = _parse_rows(args.rows)
    if args.points is not None:
        points = _load_points(args.points)
    else:
        constraints, n = _constraints(args)
        points = okounkov.equality_polytope_vertices(constraints, n)
    if any(len(r) != len(points[0]) for r in rows):
        raise UsageError("projection rows must match the point dimension")
    body = okounkov.projected_body(points, rows)
    return serialize.body_json(body)


_COMMANDS = {
    "check": _cmd_check,
    "polytope": _cmd_polytope,
    "faces": _cmd_faces,
    "trop": _cmd_trop,
    "matrix": _cmd_matrix,
    "nok": _cmd_nok,
    "graded": _cmd_graded,
    "project": _cmd_project,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wellpoised",
        description="Exact well-poised hypersurface toolkit with JSON output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, polynomial=True):
        if polynomial:
            p.add_argument("polynomial", help="polynomial text, e.g. 'x^2+y^3+z^5'")
            p.add_argument("--vars", help="comma-separated variable names, in order")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--output", help="write the document to this path")

    common(sub.add_parser("check", help="well-poised classification"))

    p = sub.add_parser("polytope", help="Newton polytope vertices")
    common(p)
    p.add_argument("--lattice", action="store_true", help="include the lattice census")
    p.add_argument(
        "--minkowski", action="store_true", help="include the decomposition witness"
    )

    common(sub.add_parser("faces", help="faces as term subsets with weights"))

    p = sub.add_parser("trop", help="tropical cones, or classify one weight")
    common(p)
    p.add_argument("--classify", help="weight vector to classify, e.g. '0,0,-1,-1'")

    p = sub.add_parser("matrix", help="valuation matrix for a 2-element subset")
    common(p)
    p.add_argument("--S", help="two 1-based term indices, e.g. '2,3'")

    p = sub.add_parser("nok", help="Newton-Okounkov body or global cone generators")
    common(p)
    p.add_argument("--S", help="two 1-based term indices")
    p.add_argument("--degree", help="positive integer grading, e.g. '2,1,1,1'")
    p.add_argument("--cone-row", dest="cone_row", help="extra row for the global cone")

    p = sub.add_parser("graded", help="enumerate a graded component exactly")
    common(p, polynomial=False)
    p.add_argument("--eq-rows", dest="eq_rows", help="rows 'a,b,...;c,d,...'")
    p.add_argument("--eq-targets", dest="eq_targets", help="one target per row")
    p.add_argument("--dim", type=int, help="number of variables")

    p = sub.add_parser("project", help="project polytope vertices to a planar body")
    common(p, polynomial=False)
    p.add_argument("--points", help="JSON file with a list of points")
    p.add_argument("--rows", help="projection rows 'a,b,...;c,d,...'")
    p.add_argument("--eq-rows", dest="eq_rows", help="equality rows defining P")
    p.add_argument("--eq-targets", dest="eq_targets", help="equality targets")
    p.add_argument("--dim", type=int, help="ambient dimension of P")

    return parser


def _emit_error(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}) + "\n")


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        doc = serialize.document(_COMMANDS[args.command](args))
    except UsageError as exc:
        _emit_error("validation_error", str(exc))
        return EXIT_VALIDATION
    except ParseError as exc:
        _emit_error("parse_error", str(exc))
        return EXIT_VALIDATION
    except PreconditionError as exc:
        _emit_error("precondition_violation", str(exc))
        return EXIT_PRECONDITION
    text = (
        serialize.dumps(doc)
        if args.format == "json"
        else serialize.render_table(doc)
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
