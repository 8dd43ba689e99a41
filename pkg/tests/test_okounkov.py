import itertools
import random
from fractions import Fraction

import pytest

from wellpoised import (
    PreconditionError,
    equality_polytope_vertices,
    global_nok_cone,
    graded_component,
    grading_image,
    homogeneity_vector,
    minimal_semigroup_generators,
    nok_body,
    parse,
    projected_body,
    valuation_matrix,
    variable_valuations,
)
from oracles import random_disjoint_polynomial, triangulation_area

XYZW = ["x", "y", "z", "w"]
F = parse("x + y^2 + z*w", XYZW)
DP = parse("T1*T2 + T3^2 + T4*T5", ["T1", "T2", "T3", "T4", "T5"])

DP_CONSTRAINTS = [((1, -1, 0, -1, 1), 0), ((1, 1, 1, 0, 2), 6)]


def test_valuation_matrices_byte_exact():
    assert valuation_matrix(F, (1, 2)).rows == (
        (2, 1, 1, 1),
        (0, 0, 1, -1),
        (0, 0, -1, -1),
    )
    assert valuation_matrix(F, (1, 3)).rows == (
        (2, 1, 1, 1),
        (0, 0, 1, -1),
        (0, -1, 0, 0),
    )
    assert valuation_matrix(F, (2, 3)).rows == (
        (2, 1, 1, 1),
        (0, 0, 1, -1),
        (-1, 0, 0, 0),
    )


def test_valuation_matrix_validation():
    with pytest.raises(PreconditionError):
        valuation_matrix(F, (1,))
    with pytest.raises(PreconditionError):
        valuation_matrix(F, (1, 2, 3))
    with pytest.raises(PreconditionError):
        valuation_matrix(F, (0, 2))


def test_valuation_matrix_shape_and_rank():
    from wellpoised import linalg

    rng = random.Random(71)
    for _ in range(20):
        f = random_disjoint_polynomial(rng)
        for subset in itertools.combinations(range(1, f.k + 1), 2):
            m = valuation_matrix(f, subset)
            assert len(m.rows) == f.n - 1
            assert linalg.rank(m.rows) == f.n - 1


def test_adjacent_matrices_differ_in_one_row():
    # adjacency swaps exactly one row (set-wise; ray positions shift for k > 3)
    rng = random.Random(73)
    polys = [F, DP] + [random_disjoint_polynomial(rng) for _ in range(10)]
    for f in polys:
        subsets = list(itertools.combinations(range(1, f.k + 1), 2))
        for s, t in itertools.combinations(subsets, 2):
            if len(set(s) & set(t)) != 1:
                continue
            rows_s = valuation_matrix(f, s).rows
            rows_t = valuation_matrix(f, t).rows
            assert len(set(rows_s) - set(rows_t)) == 1
            assert len(set(rows_t) - set(rows_s)) == 1
            if f.k == 3:
                differing = sum(1 for a, b in zip(rows_s, rows_t) if a != b)
                assert differing == 1


def test_variable_valuations_columns():
    m = valuation_matrix(F, (2, 3))
    valuations = dict(variable_valuations(m))
    assert valuations[0] == (2, 0, -1)  # x
    assert valuations[1] == (1, 0, 0)  # y
    assert valuations[2] == (1, 1, 0)  # z
    assert valuations[3] == (1, -1, 0)  # w
    # semigroup closure under addition
    assert tuple(a + b for a, b in zip(valuations[1], valuations[2])) == (2, 1, 0)


def test_columns_of_terms_in_s_have_zero_ray_block():
    rng = random.Random(79)
    for f in [F, DP] + [random_disjoint_polynomial(rng) for _ in range(10)]:
        v_f = homogeneity_vector(f)
        for subset in itertools.combinations(range(1, f.k + 1), 2):
            m = valuation_matrix(f, subset)
            columns = m.columns()
            for j, col in enumerate(columns):
                assert col[0] == v_f[j]
            block = f.k - 2  # number of trailing ray rows
            for i in subset:
                for j in f.term(i).support:
                    if block:
                        assert all(x == 0 for x in columns[j][-block:])


def test_terms_of_s_share_their_valuation():
    rng = random.Random(83)
    for f in [F, DP] + [random_disjoint_polynomial(rng) for _ in range(10)]:
        for subset in itertools.combinations(range(1, f.k + 1), 2):
            m = valuation_matrix(f, subset)
            s, t = subset
            val_s = tuple(
                sum(r * e for r, e in zip(row, f.term(s).exponent)) for row in m.rows
            )
            val_t = tuple(
                sum(r * e for r, e in zip(row, f.term(t).exponent)) for row in m.rows
            )
            assert val_s == val_t


def test_grading_image_example():
    image = grading_image(F)
    assert image.degrees == ((2, 0), (1, 0), (1, 1), (1, -1))
    assert set(image.minimal_generators) == {(1, 0), (1, 1), (1, -1)}


def test_grading_image_homogeneous_binomial():
    image = grading_image(parse("x + y", ["x", "y"]))
    assert image.degrees == ((1,), (1,))
    assert image.minimal_generators == ((1,),)


def test_grading_image_with_explicit_rows():
    image = grading_image(DP, rows=[(1, -1, 0, -1, 1), (1, 1, 1, 0, 2)])
    assert image.degrees == ((1, 1), (-1, 1), (0, 1), (-1, 0), (1, 2))


def test_minimal_semigroup_generators():
    gens = minimal_semigroup_generators([(2, 0), (1, 0), (1, 1), (1, -1)])
    assert set(gens) == {(1, 0), (1, 1), (1, -1)}
    assert minimal_semigroup_generators([(1,), (2,), (3,)]) == ((1,),)
    with pytest.raises(PreconditionError):
        minimal_semigroup_generators([(1, 0), (-1, 0)])


def test_nok_body_example():
    body = nok_body(F, (2, 1, 1, 1), (2, 3))
    assert set(body.points) == {
        (1, 0, Fraction(-1, 2)),
        (1, 0, 0),
        (1, 1, 0),
        (1, -1, 0),
    }
    assert all(p[0] == 1 for p in body.points)
    # (1, 0, 0) is the midpoint of (1, 1, 0) and (1, -1, 0)
    assert set(body.vertices) == {(1, 0, Fraction(-1, 2)), (1, 1, 0), (1, -1, 0)}
    assert body.area is None and body.boundary is None


def test_nok_body_degenerate_point():
    body = nok_body(parse("x + y", ["x", "y"]), (1, 1), (1, 2))
    assert body.points == ((1,), (1,))
    assert body.vertices == ((1,),)


def test_nok_body_rejects_bad_grading():
    with pytest.raises(PreconditionError):
        nok_body(F, (1, 1, 1, 1), (2, 3))  # weighs x and y^2 differently
    with pytest.raises(PreconditionError):
        nok_body(F, (2, 1, 1), (2, 3))
    with pytest.raises(PreconditionError):
        nok_body(F, (0, 1, 1, 1), (2, 3))


def test_global_nok_cone():
    generators = global_nok_cone(DP, (1, 1, 1, 0, 0))
    assert len(generators) == 5
    assert all(len(g) == 4 for g in generators)
    assert generators == (
        (1, 1, 0, 1),
        (1, -1, 0, 1),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
        (1, 0, -1, 0),
    )
    padded = global_nok_cone(DP, (0, 0, 0, 0, 0))
    assert all(g[-1] == 0 for g in padded)
    with pytest.raises(PreconditionError):
        global_nok_cone(DP, (1, 1))


def test_graded_component_trivial_and_homogeneous_cases():
    assert graded_component([((1, 1), 0)], 2) == [(0, 0)]
    component = graded_component([((2, 1, 1, 1), 2), ((0, 0, 1, -1), 0)], 4)
    assert component == [(1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 1, 1)]


def test_graded_component_matches_closed_form_oracle():
    component = graded_component(DP_CONSTRAINTS, 5)
    expected = set()
    for a1 in range(7):
        for a2 in range(7 - a1):
            for a5 in range((6 - a1 - a2) // 2 + 1):
                a3 = 6 - a1 - a2 - 2 * a5
                a4 = a1 - a2 + a5
                if a4 >= 0:
                    expected.add((a1, a2, a3, a4, a5))
    assert set(component) == expected
    assert len(component) == 34
    for a in component:
        assert a[0] - a[1] - a[3] + a[4] == 0
        assert a[0] + a[1] + a[2] + 2 * a[4] == 6


def test_graded_component_unbounded_raises():
    with pytest.raises(PreconditionError):
        graded_component([((1, -1), 0)], 2)


def test_equality_polytope_vertices_del_pezzo():
    vertices = equality_polytope_vertices(DP_CONSTRAINTS, 5)
    assert set(vertices) == {
        (0, 0, 0, 3, 3),
        (0, 0, 6, 0, 0),
        (0, 2, 0, 0, 2),
        (3, 3, 0, 0, 0),
        (6, 0, 0, 6, 0),
    }
    for v in vertices:
        assert all(x >= 0 for x in v)
        assert v[0] - v[1] - v[3] + v[4] == 0
        assert v[0] + v[1] + v[2] + 2 * v[4] == 6


def test_projected_bodies_reproduce_planar_figures():
    vertices = equality_polytope_vertices(DP_CONSTRAINTS, 5)
    ones = (1, 1, 1, 1, 1)

    body1 = projected_body(vertices, [ones, (1, 1, 1, 0, 0)])
    assert set(body1.boundary) == {(6, 0), (4, 2), (6, 6), (12, 6)}
    assert set(body1.vertices) == {(6, 0), (4, 2), (6, 6), (12, 6)}
    assert body1.area == 24

    body2 = projected_body(vertices, [ones, (1, 1, 0, 1, 1)])
    assert set(body2.boundary) == {(6, 0), (4, 4), (6, 6), (12, 12)}
    # (6, 6) sits on the edge from (4, 4) to (12, 12): boundary, not a vertex
    assert set(body2.vertices) == {(6, 0), (4, 4), (12, 12)}
    assert body2.area == 24

    body3 = projected_body(vertices, [ones, (0, 0, 1, 1, 1)])
    assert set(body3.boundary) == set(body1.boundary)
    assert body3.vertices == body1.vertices
    assert body3.area == 24


def test_projected_body_higher_dimensional_image():
    body = projected_body([(0, 0), (1, 0), (0, 1)], [(1, 0), (0, 1), (1, 1)])
    assert body.area is None and body.boundary is None
    assert len(body.vertices) == 3


def test_shoelace_matches_triangulation():
    rng = random.Random(89)
    from wellpoised import convex_hull_2d, shoelace_area

    for _ in range(30):
        pts = {
            (rng.randint(-6, 6), rng.randint(-6, 6))
            for _ in range(rng.randint(3, 9))
        }
        cycle = convex_hull_2d(pts)
        if len(cycle) < 3:
            continue
        assert shoelace_area(cycle) == triangulation_area(cycle)
