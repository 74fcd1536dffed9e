import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bartholdi.arcs import build_arcs, matrix_J, matrix_T
from bartholdi.errors import PoleError
from bartholdi.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    line_graph,
    path_graph,
    random_graph,
    realize_degree_sequence,
    rewire,
    star_graph,
)
from bartholdi.linalg import IntPoly, charpoly, determinant, matmul
from bartholdi.zeta import (
    bartholdi_edge_eval,
    bartholdi_evaluate,
    bartholdi_vertex_eval,
    coefficient_d,
    ihara_reciprocal,
    random_rational_points,
    reduced_bartholdi_det,
    reduced_bartholdi_product,
)
from conftest import EXAMPLE_DEGREES, EXAMPLE_DESCENDING, det_cofactor, graphs, lagrange_interpolate

EDGE = Graph(2, ((0, 1),))
K3 = complete_graph(3)


def _T_plus_uJ_poly(g):
    a = build_arcs(g)
    T, J = matrix_T(a), matrix_J(g.m)
    N = a.size
    return [[IntPoly([T[i][j], J[i][j]]) for j in range(N)] for i in range(N)]


# Ihara


def test_ihara_examples():
    assert ihara_reciprocal(EDGE) == IntPoly([1])
    assert ihara_reciprocal(K3) == IntPoly([1, 0, 0, -1]) ** 2
    assert ihara_reciprocal(K3, "berkowitz") == IntPoly([1, 0, 0, -2, 0, 0, 1])


@pytest.mark.parametrize("g", [path_graph(n) for n in range(1, 7)] + [star_graph(k) for k in range(1, 6)])
def test_ihara_trees_are_trivial(g):
    assert ihara_reciprocal(g) == IntPoly([1])
    T = matrix_T(build_arcs(g))
    P = T
    for _ in range(len(T)):
        P = matmul(P, T)
    assert all(x == 0 for row in P for x in row)  # nilpotent


def test_ihara_cycle():
    # C_n: two directed n-cycles of non-backtracking arcs
    for n in range(3, 7):
        assert ihara_reciprocal(cycle_graph(n)) == IntPoly([1] + [0] * (n - 1) + [-1]) ** 2


# reduced polynomial: determinant and product pipelines


def test_reduced_single_edge():
    assert reduced_bartholdi_det(EDGE).poly == IntPoly([0, 0, -1])
    assert reduced_bartholdi_product(EDGE).poly == IntPoly([0, 0, -1])


def test_reduced_triangle_against_symbolic_determinant():
    expected = det_cofactor(_T_plus_uJ_poly(K3))
    assert expected == IntPoly([1, 0, -3, 0, 3, 0, -1])
    assert reduced_bartholdi_det(K3).poly == expected
    assert reduced_bartholdi_product(K3).poly == expected


def test_reduced_example_degrees():
    g = realize_degree_sequence(EXAMPLE_DEGREES)
    expected = IntPoly.from_descending(EXAMPLE_DESCENDING)
    assert reduced_bartholdi_det(g).poly == expected
    assert reduced_bartholdi_det(g, "berkowitz").poly == expected
    p = reduced_bartholdi_product(g)
    assert p.poly == expected
    assert coefficient_d(p, 5) == -1708


@pytest.mark.parametrize("seed", range(12))
def test_det_pipeline_matches_interpolation(seed):
    # independent route: evaluate det(T + uJ) at 2m + 1 integers and interpolate
    g = random_graph(6, "1/2", seed)
    a = build_arcs(g)
    T, J = matrix_T(a), matrix_J(g.m)
    xs = list(range(-g.m, g.m + 1))
    ys = [determinant([[T[i][j] + x * J[i][j] for j in range(a.size)] for i in range(a.size)]) for x in xs]
    assert reduced_bartholdi_det(g).poly == lagrange_interpolate(xs, ys)


@pytest.mark.parametrize("seed", range(8))
def test_v_zero_slice_of_bivariate_charpoly(seed):
    # det(vI - (T + uJ)) at v = 0, for several integer u, equals the reduced polynomial at u
    g = random_graph(6, "1/2", seed)
    a = build_arcs(g)
    T, J = matrix_T(a), matrix_J(g.m)
    r = reduced_bartholdi_det(g).poly
    for u in (-3, -1, 0, 2, 5):
        M = [[T[i][j] + u * J[i][j] for j in range(a.size)] for i in range(a.size)]
        assert charpoly(M)(0) * (-1) ** (2 * g.m) == r(u)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_det_equals_product(g):
    assert reduced_bartholdi_det(g).poly == reduced_bartholdi_product(g).poly


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_low_coefficients(g):
    r = reduced_bartholdi_det(g)
    assert r.poly.degree == 2 * g.m
    assert coefficient_d(r, 0) == (-1) ** g.m
    if g.m:
        assert coefficient_d(r, 1) == 0
        assert coefficient_d(r, 2) == (-1) ** (g.m + 1) * line_graph(g).m


def test_degree_sequence_determinacy():
    base = realize_degree_sequence(EXAMPLE_DEGREES)
    ref = reduced_bartholdi_det(base).poly
    seen = {base}
    for seed in range(6):
        h = rewire(base, 25, seed)
        seen.add(h)
        assert reduced_bartholdi_det(h).poly == ref
    assert len(seen) > 2


def test_coefficient_d_range():
    r = reduced_bartholdi_det(K3)
    assert [coefficient_d(r, k) for k in range(7)] == [-1, 0, 3, 0, -3, 0, 1]
    with pytest.raises(ValueError):
        coefficient_d(r, 7)
    with pytest.raises(ValueError):
        coefficient_d(r, -1)


def test_result_serialization():
    r = reduced_bartholdi_det(K3)
    data = json.loads(r.to_json())
    assert data["n"] == 3 and data["m"] == 3 and data["method"] == "det"
    assert data["coeffs_ascending"] == ["1", "0", "-3", "0", "3", "0", "-1"]
    assert data["d"]["4"] == "-3"
    assert r.to_text() == "-u^6 + 3u^4 - 3u^2 + 1"


# two-variable evaluations


def test_edge_eval_examples():
    for u in (Fraction(0), Fraction(3, 2), Fraction(-7)):
        assert bartholdi_edge_eval(K3, u, 0) == 1
    t = Fraction(1, 2)
    assert bartholdi_edge_eval(K3, 0, t) == ihara_reciprocal(K3)(t)
    a = build_arcs(K3)
    T, J = matrix_T(a), matrix_J(3)
    oracle = det_cofactor([[Fraction(int(i == j)) - (T[i][j] + J[i][j]) * t for j in range(6)] for i in range(6)])
    assert bartholdi_edge_eval(K3, 1, t) == oracle


def test_vertex_eval_examples():
    for u in (Fraction(0), Fraction(2, 3)):
        assert bartholdi_vertex_eval(K3, u, 0) == 1
    # one edge, u=1, t=1: prefactor base 1 raised to -1, det(I - A) = 0
    assert bartholdi_vertex_eval(path_graph(2), 1, 1) == 0
    assert bartholdi_edge_eval(path_graph(2), 1, 1) == 0


def test_vertex_eval_pole():
    g = path_graph(3)  # m - n = -1
    with pytest.raises(PoleError):
        bartholdi_vertex_eval(g, 0, 1)
    ev = bartholdi_evaluate(g, 0, 1)
    assert ev.vertex_value is None and ev.agree is None


def test_vertex_eval_zero_base_nonnegative_exponent():
    # K4: m - n = 2, so a vanishing base just gives zero
    g = complete_graph(4)
    assert bartholdi_vertex_eval(g, 0, 1) == 0
    assert bartholdi_edge_eval(g, 0, 1) == 0


@given(graphs(max_n=6), st.fractions(-3, 3, max_denominator=9), st.fractions(-3, 3, max_denominator=9))
@settings(max_examples=80, deadline=None)
def test_edge_and_vertex_forms_agree(g, u, t):
    try:
        vertex = bartholdi_vertex_eval(g, u, t)
    except PoleError:
        return
    assert bartholdi_edge_eval(g, u, t) == vertex


def test_edge_eval_polynomial_in_t_at_u_zero():
    g = random_graph(6, "1/2", 4)
    ih = ihara_reciprocal(g)
    for _, t in random_rational_points(10, 3):
        assert bartholdi_edge_eval(g, 0, t) == ih(t)


def test_random_rational_points_deterministic():
    pts = random_rational_points(20, 7)
    assert pts == random_rational_points(20, 7)
    assert all(abs(x.numerator) <= 9 and 1 <= x.denominator <= 9 for p in pts for x in p)
