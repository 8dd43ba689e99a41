"""Valuation matrices of maximal prime cones and their Newton-Okounkov data.

For a two-element term subset S the matrix M_S stacks the homogeneity vector,
the kernel basis vectors, and the rays of the complement of S; its columns
are the variable valuations and generate the value semigroup.  Dividing each
column by the degree its variable carries under a positive grading and taking
the convex hull produces the Newton-Okounkov body.  The module also handles
the bounded enumeration of graded components and the polygon projections used
to reproduce planar bodies exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import linalg
from .fan import lineality_basis, ray_generator
from .geometry import (
    canonical_point,
    convex_hull_2d,
    extreme_points,
    shoelace_area,
)
from .polynomial import (
    Exponent,
    PreconditionError,
    SparsePolynomial,
    graded_lex_key,
)

Point = tuple

# An equality constraint (row, target) stands for  row . a == target.
Constraint = tuple[Sequence, int]


@dataclass(frozen=True)
class ValuationMatrix:
    """(n-1) x n integer matrix of full rational rank, rows in fixed order:
    homogeneity vector, kernel vectors, then rays of the complement of S."""

    S: tuple[int, int]
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.rows) for j in range(self.n)]


def valuation_matrix(f: SparsePolynomial, subset: Iterable[int]) -> ValuationMatrix:
    s = tuple(sorted(set(subset)))
    if len(s) != 2:
        raise PreconditionError("the subset S must have exactly two elements")
    if s[0] < 1 or s[1] > f.k:
        raise PreconditionError(f"subset {s} not contained in 1..{f.k}")
    basis = lineality_basis(f)
    rows = list(basis.rows)
    for i in range(1, f.k + 1):
        if i not in s:
            rows.append(ray_generator(f, i).w)
    matrix = ValuationMatrix((s[0], s[1]), tuple(rows))
    if len(rows) != f.n - 1 or linalg.rank(rows) != f.n - 1:
        raise PreconditionError("valuation matrix is rank deficient")
    return matrix


def variable_valuations(m: ValuationMatrix) -> list[tuple[int, tuple[int, ...]]]:
    """The matrix columns, labeled by 0-based variable index.

    These vectors generate the value semigroup under addition.
    """
    return list(enumerate(m.columns()))


def _positive_functional(vectors: Sequence[Point]) -> Optional[tuple[Fraction, ...]]:
    # phi with phi(v) >= 1 for all v; exists iff phi(v) > 0 is solvable
    if not vectors:
        return None
    dim = len(vectors[0])
    ineqs = [(tuple(Fraction(x) for x in v), Fraction(1)) for v in vectors]
    return linalg.fm_feasible_point(ineqs, dim)


def _in_semigroup(target: Point, generators: Sequence[Point], phi) -> bool:
    # bounded search: phi is strictly positive on every generator
    def value(v) -> Fraction:
        return sum(p * Fraction(x) for p, x in zip(phi, v))

    def descend(idx: int, remainder: tuple[Fraction, ...]) -> bool:
        if all(x == 0 for x in remainder):
            return True
        if idx == len(generators):
            return False
        budget = value(remainder)
        if budget < 0:
            return False
        gen = generators[idx]
        step = value(gen)
        max_count = int(budget / step)
        for count in range(max_count + 1):
            rest = tuple(r - count * Fraction(g) for r, g in zip(remainder, gen))
            if descend(idx + 1, rest):
                return True
        return False

    return descend(0, tuple(Fraction(x) for x in target))


def minimal_semigroup_generators(vectors: Iterable[Sequence]) -> tuple[Point, ...]:
    """Irredundant subset of the given generators, found by bounded search.

    Requires a linear functional strictly positive on every generator (so the
    generated semigroup is pointed and the minimal set is unique).
    """
    gens = sorted({canonical_point(v) for v in vectors}, key=graded_lex_key)
    phi = _positive_functional(gens)
    if phi is None:
        raise PreconditionError(
            "no strictly positive functional; minimal generators are undefined"
        )
    kept = list(gens)
    for g in gens:
        if g not in kept:
            continue
        others = [h for h in kept if h != g]
        if others and _in_semigroup(g, others, phi):
            kept = others
    return tuple(kept)


@dataclass(frozen=True)
class GradingImage:
    """Degrees of the variables under a grading matrix, plus the minimal
    generating set of the semigroup those degrees generate."""

    degrees: tuple[Point, ...]
    minimal_generators: tuple[Point, ...]


def grading_image(
    f: SparsePolynomial, rows: Optional[Sequence[Sequence]] = None
) -> GradingImage:
    """Image of each variable under the grading rows (default: lineality basis)."""
    if rows is None:
        rows = lineality_basis(f).rows
    rows = [tuple(r) for r in rows]
    if any(len(r) != f.n for r in rows):
        raise PreconditionError("grading rows must have one entry per variable")
    degrees = tuple(
        canonical_point(tuple(row[j] for row in rows)) for j in range(f.n)
    )
    return GradingImage(degrees, minimal_semigroup_generators(degrees))


@dataclass(frozen=True)
class Grading:
    """Strictly positive integer degrees making every term of f weigh the same."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or any(e <= 0 for e in self.entries):
            raise PreconditionError("grading entries must be positive integers")

    def __getitem__(self, j: int) -> int:
        return self.entries[j]


def _check_grading(f: SparsePolynomial, grading) -> Grading:
    d = grading if isinstance(grading, Grading) else Grading(tuple(int(x) for x in grading))
    if len(d.entries) != f.n:
        raise PreconditionError("grading length differs from variable count")
    values = {sum(e * w for e, w in zip(t.exponent, d.entries)) for t in f.terms}
    if len(values) != 1:
        raise PreconditionError("polynomial is not homogeneous for this grading")
    return d


@dataclass(frozen=True)
class OkounkovBody:
    """A convex body given by its defining points and exact hull data.

    vertices is the minimal V-representation.  For planar bodies, boundary is
    the counter-clockwise cycle (from the lex-min point) of all defining
    points on the hull's boundary, including non-extreme ones, and area is
    the exact shoelace area; both are None in higher ambient dimension.
    """

    points: tuple[Point, ...]
    vertices: tuple[Point, ...]
    boundary: Optional[tuple[Point, ...]]
    area: Optional[Fraction]


def _make_body(points: Sequence[Sequence]) -> OkounkovBody:
    pts = tuple(canonical_point(p) for p in points)
    if not pts:
        raise PreconditionError("a body needs at least one point")
    ambient = len(pts[0])
    if ambient == 2:
        vertices = tuple(convex_hull_2d(pts))
        boundary = tuple(convex_hull_2d(pts, keep_boundary=True))
        area = shoelace_area(vertices) if len(vertices) >= 3 else Fraction(0)
        return OkounkovBody(pts, vertices, boundary, area)
    vertices = tuple(extreme_points(pts))
    return OkounkovBody(pts, vertices, None, None)


def nok_body(f: SparsePolynomial, grading, subset: Iterable[int]) -> OkounkovBody:
    """Hull of the valuation-matrix columns scaled by 1/degree of each variable."""
    d = _check_grading(f, grading)
    matrix = valuation_matrix(f, subset)
    points = [
        tuple(Fraction(x, d[j]) for x in col) for j, col in enumerate(matrix.columns())
    ]
    return _make_body(points)


def global_nok_cone(
    f: SparsePolynomial, extra_row: Sequence
) -> tuple[Point, ...]:
    """Columns of the lineality basis with one extra row appended underneath.

    The returned vectors generate the global body's cone over the
    non-negative rationals.
    """
    row = tuple(extra_row)
    if len(row) != f.n:
        raise PreconditionError("extra row length differs from variable count")
    rows = list(lineality_basis(f).rows) + [row]
    return tuple(
        canonical_point(tuple(r[j] for r in rows)) for j in range(f.n)
    )


def _nonnegative_system(constraints: Sequence[Constraint], n: int):
    ineqs = []
    zero = tuple(Fraction(0) for _ in range(n))
    for j in range(n):
        coeffs = list(zero)
        coeffs[j] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(0)))
    for row, target in constraints:
        if len(row) != n:
            raise PreconditionError("constraint row length differs from dimension")
        r = tuple(Fraction(x) for x in row)
        t = Fraction(target)
        ineqs.append((r, t))
        ineqs.append((tuple(-x for x in r), -t))
    return ineqs


def graded_component(constraints: Sequence[Constraint], n: int) -> list[Exponent]:
    """All non-negative integer solutions of the given equalities.

    Each coordinate is first bounded exactly by Fourier-Motzkin projection;
    a coordinate with no finite upper bound makes the component infinite and
    raises.  Output is sorted in graded-lex order.
    """
    if not constraints:
        raise PreconditionError("at least one constraint row is required")
    ineqs = _nonnegative_system(constraints, n)
    axes = []
    for j in range(n):
        interval = linalg.variable_interval(ineqs, n, j)
        if interval is None:
            return []
        low, high = interval
        if high is None:
            raise PreconditionError(
                f"coordinate {j} is unbounded; the graded component is infinite"
            )
        lo = max(0, math.ceil(low)) if low is not None else 0
        axes.append(range(lo, math.floor(high) + 1))
    rows = [tuple(Fraction(x) for x in row) for row, _ in constraints]
    targets = [Fraction(t) for _, t in constraints]
    out = []
    for candidate in itertools.product(*axes):
        if all(
            sum(r * c for r, c in zip(row, candidate)) == t
            for row, t in zip(rows, targets)
        ):
            out.append(candidate)
    return sorted(out, key=graded_lex_key)


def equality_polytope_vertices(
    constraints: Sequence[Constraint], n: int
) -> list[Point]:
    """Vertices of {a >= 0 : row . a = target for all constraints}.

    Every subset of coordinates is pinned to zero in turn; uniquely solvable
    non-negative solutions of the remaining square system are the vertices.
    """
    if not constraints:
        raise PreconditionError("at least one constraint row is required")
    rows = [tuple(Fraction(x) for x in row) for row, _ in constraints]
    targets = [Fraction(t) for _, t in constraints]
    if any(len(r) != n for r in rows):
        raise PreconditionError("constraint row length differs from dimension")
    found = set()
    for r in range(n + 1):
        for zeros in itertools.combinations(range(n), r):
            free = [j for j in range(n) if j not in zeros]
            if free:
                system = [[row[j] for j in free] for row in rows]
                sol = linalg.solve_unique(system, targets)
                if sol is None or any(x < 0 for x in sol):
                    continue
                point = [Fraction(0)] * n
                for j, value in zip(free, sol):
                    point[j] = value
            else:
                if any(t != 0 for t in targets):
                    continue
                point = [Fraction(0)] * n
            found.add(canonical_point(point))
    return sorted(found, key=graded_lex_key)


def projected_body(points: Sequence[Sequence], rows: Sequence[Sequence]) -> OkounkovBody:
    """Image of a vertex set under the linear map given by the rows, hulled.

    Planar images come back with the canonical boundary cycle and exact area;
    higher-dimensional images carry hull vertices only.
    """
    if not points:
        raise PreconditionError("projection needs at least one point")
    proj = [tuple(Fraction(x) for x in row) for row in rows]
    images = [
        tuple(sum(r * Fraction(x) for r, x in zip(row, p)) for row in proj)
        for p in points
    ]
    return _make_body(images)
