"""Canonical JSON encoding of the library's result types.

Integers are emitted as bare JSON numbers; non-integral rationals become
"p/q" strings so nothing is ever rounded.  Key order is fixed so identical
inputs always produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from .fan import TropicalCone
from .geometry import FaceDescriptor, LatticePolytope, MinkowskiReport
from .okounkov import GradingImage, OkounkovBody, ValuationMatrix
from .polynomial import (
    CommonFactorWitness,
    SharedVariableWitness,
    SparsePolynomial,
    WellPoisedReport,
    initial_form,
    to_string,
)

SCHEMA_VERSION = 1


def encode_scalar(x):
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def encode_vector(v: Sequence) -> list:
    return [encode_scalar(x) for x in v]


def encode_matrix(rows: Sequence[Sequence]) -> list[list]:
    return [encode_vector(r) for r in rows]


def report_json(report: WellPoisedReport, variables: Sequence[str]) -> dict:
    witness = None
    if isinstance(report.witness, SharedVariableWitness):
        witness = {
            "shared_variable": variables[report.witness.variable],
            "terms": list(report.witness.terms),
        }
    elif isinstance(report.witness, CommonFactorWitness):
        witness = {
            "gcd": report.witness.gcd,
            "terms": list(report.witness.terms),
        }
    return {
        "well_poised": report.well_poised,
        "monomial": report.monomial,
        "witness": witness,
    }


def polytope_json(p: LatticePolytope) -> dict:
    return {"n": p.n, "vertices": encode_matrix(p.vertices)}


def minkowski_json(report: MinkowskiReport) -> dict:
    return {
        "trivial_only": report.trivial_only,
        "census": encode_matrix(report.census),
        "non_vertex_points": encode_matrix(report.non_vertex_points),
    }


def face_json(face: FaceDescriptor, f: SparsePolynomial) -> dict:
    return {
        "S": list(face.term_indices),
        "weight": encode_vector(face.supporting_weight),
        "initial_form": to_string(initial_form(f, face.supporting_weight)),
    }


def cone_json(c: TropicalCone) -> dict:
    return {
        "S": list(c.S),
        "dim": c.dim,
        "lineality": encode_matrix(c.lineality.rows),
        "rays": encode_matrix(ray.w for ray in c.rays),
    }


def matrix_json(m: ValuationMatrix, variables: Sequence[str]) -> dict:
    return {
        "S": list(m.S),
        "rows": encode_matrix(m.rows),
        "valuations": [
            {"variable": variables[j], "value": encode_vector(col)}
            for j, col in enumerate(m.columns())
        ],
    }


def body_json(body: OkounkovBody) -> dict:
    return {
        "points": encode_matrix(body.points),
        "vertices": encode_matrix(body.vertices),
        "boundary": None if body.boundary is None else encode_matrix(body.boundary),
        "area": None if body.area is None else encode_scalar(body.area),
    }


def grading_image_json(image: GradingImage, variables: Sequence[str]) -> dict:
    return {
        "degrees": [
            {"variable": variables[j], "degree": encode_vector(d)}
            for j, d in enumerate(image.degrees)
        ],
        "minimal_generators": encode_matrix(image.minimal_generators),
    }


def document(payload: dict) -> dict:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(payload)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_table(doc: dict) -> str:
    """Human-oriented rendering; not covered by byte-stability guarantees."""
    lines: list[str] = []

    def emit(key: Optional[str], value, indent: int) -> None:
        pad = "  " * indent
        label = f"{key}: " if key is not None else ""
        if isinstance(value, dict):
            if key is not None:
                lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + (key is not None))
        elif isinstance(value, list) and value and all(
            isinstance(r, list) for r in value
        ):
            lines.append(f"{pad}{key}:")
            cells = [[str(x) for x in row] for row in value]
            widths = [
                max(len(row[c]) for row in cells) for c in range(len(cells[0]))
            ] if cells and cells[0] else []
            for row in cells:
                padded = "  ".join(x.rjust(w) for x, w in zip(row, widths))
                lines.append(f"{pad}  [{padded}]")
        elif isinstance(value, list) and value and all(
            isinstance(r, dict) for r in value
        ):
            lines.append(f"{pad}{key}:")
            for item in value:
                emit(None, item, indent + 1)
                lines.append("")
        else:
            lines.append(f"{pad}{label}{value}")

    emit(None, doc, 0)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines) + "\n"
