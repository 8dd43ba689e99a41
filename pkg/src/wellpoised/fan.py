"""Cone decomposition of the tropical hypersurface of a disjointly supported
polynomial.

Every weight space decomposes into cones C_S = L + sum of open rays, where L
is the common homogeneity (lineality) space and the ray for term i is -1 on
that term's support.  A weight lands in C_S exactly when S is the set of
terms maximizing its inner products, and C_S belongs to the tropical variety
when |S| >= 2 (the initial form is not a monomial).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .polynomial import (
    PreconditionError,
    SparsePolynomial,
    is_disjointly_supported,
    total_degree,
    weight_vector,
)

IntVector = tuple[int, ...]


def _require_fan_input(f: SparsePolynomial) -> None:
    if any(not any(t.exponent) for t in f.terms):
        raise PreconditionError("constant term present; cones are undefined")
    if not is_disjointly_supported(f):
        raise PreconditionError("overlapping supports; cones are undefined")


def _term_degrees(f: SparsePolynomial) -> list[int]:
    return [total_degree(t.exponent) for t in f.terms]


def homogeneity_vector(f: SparsePolynomial) -> IntVector:
    """The integer weight assigning lcm(degrees) to every term of f.

    Entry lcm/deg(term i) on the support of term i; variables appearing in no
    term get entry 0.
    """
    _require_fan_input(f)
    degrees = _term_degrees(f)
    ell = math.lcm(*degrees)
    v = [0] * f.n
    for term, deg in zip(f.terms, degrees):
        for j in term.support:
            v[j] = ell // deg
    return tuple(v)


@dataclass(frozen=True)
class LinealityBasis:
    """Basis of the common homogeneity space of all cones.

    kernel_vectors holds, for each term with support s_1 < ... < s_k and
    entries a_1, ..., a_k, the primitive vectors a_j*e(s_1) - a_1*e(s_j) for
    j = 2..k (term by term, in canonical term order), followed by one unit
    vector for every variable that appears in no term.
    """

    v_f: IntVector
    kernel_vectors: tuple[IntVector, ...]

    @property
    def rows(self) -> tuple[IntVector, ...]:
        return (self.v_f, *self.kernel_vectors)

    @property
    def dim(self) -> int:
        return 1 + len(self.kernel_vectors)


def lineality_basis(f: SparsePolynomial) -> LinealityBasis:
    _require_fan_input(f)
    kernel: list[IntVector] = []
    used: set[int] = set()
    for term in f.terms:
        supp = term.support
        used.update(supp)
        first = supp[0]
        for j in supp[1:]:
            vec = [0] * f.n
            vec[first] = term.exponent[j]
            vec[j] = -term.exponent[first]
            kernel.append(linalg.primitive_integer(vec))
    for c in range(f.n):
        if c not in used:
            unit = [0] * f.n
            unit[c] = 1
            kernel.append(tuple(unit))
    return LinealityBasis(homogeneity_vector(f), tuple(kernel))


@dataclass(frozen=True)
class RayGenerator:
    """Extremal ray attached to term i: entry -1 on its support, 0 elsewhere."""

    i: int
    w: IntVector


def ray_generator(f: SparsePolynomial, i: int) -> RayGenerator:
    term = f.term(i)
    w = [0] * f.n
    for j in term.support:
        w[j] = -1
    return RayGenerator(i, tuple(w))


def _check_subset(f: SparsePolynomial, subset: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(set(subset)))
    if not s:
        raise PreconditionError("subset S must be nonempty")
    if s[0] < 1 or s[-1] > f.k:
        raise PreconditionError(f"subset {s} not contained in 1..{f.k}")
    return s


@dataclass(frozen=True)
class TropicalCone:
    """C_S in generator form: lineality basis plus one open ray per term not in S."""

    S: tuple[int, ...]
    lineality: LinealityBasis
    rays: tuple[RayGenerator, ...]

    @property
    def dim(self) -> int:
        return self.lineality.dim + len(self.rays)


def cone(f: SparsePolynomial, subset: Iterable[int]) -> TropicalCone:
    s = _check_subset(f, subset)
    basis = lineality_basis(f)
    rays = tuple(ray_generator(f, i) for i in range(1, f.k + 1) if i not in s)
    return TropicalCone(s, basis, rays)


def classify_weight(f: SparsePolynomial, weight: Sequence) -> tuple[int, ...]:
    """The 1-based set of terms whose weight inner product is maximal."""
    w = weight_vector(weight, f.n)
    products = [sum(wi * e for wi, e in zip(w, t.exponent)) for t in f.terms]
    top = max(products)
    return tuple(i + 1 for i, p in enumerate(products) if p == top)


def in_tropical_variety(f: SparsePolynomial, weight: Sequence) -> bool:
    """True when the initial form at this weight is not a monomial."""
    return len(classify_weight(f, weight)) >= 2


def tropical_variety(f: SparsePolynomial) -> list[TropicalCone]:
    """All cones C_S with |S| >= 2, by decreasing dimension then lex subset.

    The maximal cones are exactly the two-element subsets: K*(K-1)/2 of them.
    """
    _require_fan_input(f)
    cones = []
    for size in range(2, f.k + 1):
        for subset in itertools.combinations(range(1, f.k + 1), size):
            cones.append(cone(f, subset))
    return cones


@dataclass(frozen=True)
class WeightDecomposition:
    """Exact certificate that a weight lies in the cone of its classified S.

    weight = sum(lineality_coefficients * basis rows)
           + sum(ray_coefficients * rays),   all ray coefficients > 0.
    """

    S: tuple[int, ...]
    lineality: LinealityBasis
    lineality_coefficients: tuple[Fraction, ...]
    rays: tuple[RayGenerator, ...]
    ray_coefficients: tuple[Fraction, ...]

    def reconstruct(self) -> tuple[Fraction, ...]:
        n = len(self.lineality.v_f)
        out = [Fraction(0)] * n
        for coeff, row in zip(self.lineality_coefficients, self.lineality.rows):
            for j in range(n):
                out[j] += coeff * row[j]
        for coeff, ray in zip(self.ray_coefficients, self.rays):
            for j in range(n):
                out[j] += coeff * ray.w[j]
        return tuple(out)


def decompose_weight(f: SparsePolynomial, weight: Sequence) -> WeightDecomposition:
    """Split a weight into lineality part plus positive ray combination.

    Subtracting (top - product_i)/degree_i times ray i for every term i
    outside the argmax set leaves a vector weighting all terms equally, which
    is then expressed in the lineality basis by an exact linear solve.
    """
    _require_fan_input(f)
    w = weight_vector(weight, f.n)
    s = classify_weight(f, w)
    degrees = _term_degrees(f)
    products = [sum(wi * e for wi, e in zip(w, t.exponent)) for t in f.terms]
    top = max(products)
    rays = []
    ray_coeffs = []
    residual = list(w)
    for i in range(1, f.k + 1):
        if i in s:
            continue
        lam = Fraction(top - products[i - 1], degrees[i - 1])
        ray = ray_generator(f, i)
        rays.append(ray)
        ray_coeffs.append(lam)
        for j in range(f.n):
            residual[j] -= lam * ray.w[j]
    basis = lineality_basis(f)
    columns = basis.rows
    rows = [[Fraction(col[j]) for col in columns] for j in range(f.n)]
    coeffs = linalg.solve_unique(rows, residual)
    if coeffs is None:
        raise PreconditionError("weight does not decompose; input violates contract")
    return WeightDecomposition(s, basis, coeffs, tuple(rays), tuple(ray_coeffs))
