"""Exact linear algebra over the rationals.

Everything here works on plain tuples of ``fractions.Fraction`` (or ints).
The systems in this package are tiny, so Gaussian elimination and
Fourier-Motzkin elimination are used directly instead of floating-point
solvers: every answer is exact and every certificate is checkable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

Scalar = int | Fraction
Vector = tuple[Fraction, ...]

# An inequality (c, lo) stands for  c . x >= lo.
Inequality = tuple[Vector, Fraction]


def as_fractions(values: Sequence[Scalar]) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]):
    return sum(a * b for a, b in zip(u, v))


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def row_space_equal(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> bool:
    """Exact equality of the rational row spaces of two matrices."""
    return rref(a)[0] == rref(b)[0]


def solve_affine(rows, rhs) -> Optional[tuple[Vector, list[Vector]]]:
    """Solve A x = b exactly.

    Returns (particular solution, basis of the null space of A), or None when
    the system is inconsistent.
    """
    if not rows:
        raise ValueError("solve_affine requires at least one equation")
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:  # pivot in the rhs column: inconsistent
        return None
    particular = [Fraction(0)] * ncols
    for row, c in zip(reduced, pivots):
        particular[c] = row[-1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, c in zip(reduced, pivots):
            v[c] = -row[fcol]
        basis.append(tuple(v))
    return tuple(particular), basis


def solve_unique(rows, rhs) -> Optional[Vector]:
    """The unique solution of A x = b, or None (inconsistent or underdetermined)."""
    sol = solve_affine(rows, rhs)
    if sol is None or sol[1]:
        return None
    return sol[0]


def _normalized(coeffs: Vector, lo: Fraction) -> Inequality:
    # inequalities may only be scaled by positive factors
    lead = next((x for x in coeffs if x != 0), None)
    if lead is None:
        return coeffs, lo
    s = abs(lead)
    return tuple(x / s for x in coeffs), lo / s


def _contradiction(ineqs) -> bool:
    return any(all(x == 0 for x in c) and lo > 0 for c, lo in ineqs)


def fm_eliminate(ineqs: Sequence[Inequality], var: int) -> list[Inequality]:
    """One Fourier-Motzkin step: project {x : c.x >= lo} along coordinate var."""
    pos, neg, rest = [], [], []
    for c, lo in ineqs:
        cv = c[var]
        if cv > 0:
            pos.append((c, lo))
        elif cv < 0:
            neg.append((c, lo))
        else:
            rest.append(_normalized(c, lo))
    out = set(rest)
    for cp, lp in pos:
        for cn, ln in neg:
            a = -cn[var]
            b = cp[var]
            comb = tuple(a * x + b * y for x, y in zip(cp, cn))
            out.add(_normalized(comb, a * lp + b * ln))
    return sorted(out)


def fm_feasible_point(ineqs: Sequence[Inequality], nvars: int) -> Optional[Vector]:
    """An exact rational point satisfying every inequality, or None.

    Eliminates the variables in order, then back-substitutes, picking an
    attained bound (the system is non-strict) or 0 for free coordinates.
    """
    current = [_normalized(as_fractions(c), Fraction(lo)) for c, lo in ineqs]
    if _contradiction(current):
        return None
    stages = [current]
    for v in range(nvars):
        current = fm_eliminate(current, v)
        if _contradiction(current):
            return None
        stages.append(current)
    x = [Fraction(0)] * nvars
    for v in reversed(range(nvars)):
        low: Optional[Fraction] = None
        high: Optional[Fraction] = None
        for c, lo in stages[v]:
            cv = c[v]
            if cv == 0:
                continue
            bound = (lo - sum(c[j] * x[j] for j in range(v + 1, nvars))) / cv
            if cv > 0:
                low = bound if low is None else max(low, bound)
            else:
                high = bound if high is None else min(high, bound)
        if low is not None:
            x[v] = low
        elif high is not None:
            x[v] = high
    return tuple(x)


def variable_interval(ineqs: Sequence[Inequality], nvars: int, target: int):
    """Project the system onto one coordinate.

    Returns (low, high) where None encodes an infinite end, or None when the
    whole system is infeasible.
    """
    current = [_normalized(as_fractions(c), Fraction(lo)) for c, lo in ineqs]
    for v in range(nvars):
        if v == target:
            continue
        current = fm_eliminate(current, v)
        if _contradiction(current):
            return None
    low: Optional[Fraction] = None
    high: Optional[Fraction] = None
    for c, lo in current:
        cv = c[target]
        if cv == 0:
            if lo > 0:
                return None
        elif cv > 0:
            low = lo / cv if low is None else max(low, lo / cv)
        else:
            high = lo / cv if high is None else min(high, lo / cv)
    if low is not None and high is not None and low > high:
        return None
    return low, high


def nonnegative_solution_exists(rows, rhs) -> bool:
    """Does A x = b admit a componentwise non-negative solution?"""
    sol = solve_affine(rows, rhs)
    if sol is None:
        return False
    particular, basis = sol
    if not basis:
        return all(x >= 0 for x in particular)
    ineqs = []
    for i in range(len(particular)):
        coeffs = tuple(Fraction(b[i]) for b in basis)
        ineqs.append((coeffs, -particular[i]))
    return fm_feasible_point(ineqs, len(basis)) is not None


def integer_scaled(row: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale a rational row by the lcm of denominators to an integer row."""
    fracs = [Fraction(x) for x in row]
    den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return tuple(int(f * den) for f in fracs)


def primitive_integer(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (no-op on zero)."""
    ints = [int(x) for x in vec]
    g = math.gcd(*(abs(x) for x in ints)) if ints else 0
    if g > 1:
        return tuple(x // g for x in ints)
    return tuple(ints)
