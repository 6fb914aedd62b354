from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from golden import K4_EDGE_NAMES, K4_TERMS, from_named_terms
from kirchhoff import corpus
from kirchhoff.graphs import builtin_graph, complete_graph, cycle_graph, from_edges, path_graph
from kirchhoff.matrixtree import (
    PolynomialMatrix,
    bareiss,
    cofactor,
    fraction_free_determinant,
    kirchhoff_polynomial,
    laplacian,
    rational_determinant,
    signed_cofactor_determinant,
)
from kirchhoff.poly import Polynomial


def var(name: str) -> Polynomial:
    # x_ij and x_ji name the same edge variable
    key = "".join(sorted(name))
    return Polynomial.variable(6, K4_EDGE_NAMES.index(key))


def matrix_from_names(rows):
    out = []
    for row in rows:
        cells = []
        for entry in row:
            p = Polynomial.zero(6)
            for sign, name in entry:
                p = p + var(name) * sign
            cells.append(p)
        out.append(cells)
    return PolynomialMatrix.from_rows(out, 6)


# The displayed Laplacian of K4, one (sign, x_ij) list per cell.
L_K4 = matrix_from_names([
    [[(1, "12"), (1, "13"), (1, "14")], [(-1, "12")], [(-1, "13")], [(-1, "14")]],
    [[(-1, "21")], [(1, "21"), (1, "23"), (1, "24")], [(-1, "23")], [(-1, "24")]],
    [[(-1, "31")], [(-1, "32")], [(1, "31"), (1, "32"), (1, "34")], [(-1, "34")]],
    [[(-1, "41")], [(-1, "42")], [(-1, "43")], [(1, "41"), (1, "42"), (1, "43")]],
])
L_K4_11 = matrix_from_names([
    [[(1, "21"), (1, "23"), (1, "24")], [(-1, "23")], [(-1, "24")]],
    [[(-1, "32")], [(1, "31"), (1, "32"), (1, "34")], [(-1, "34")]],
    [[(-1, "42")], [(-1, "43")], [(1, "41"), (1, "42"), (1, "43")]],
])


def leibniz_det(rows):
    """Oracle: permutation expansion."""
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term = term * rows[i][p[i]]
        total = total + term
    return total


def test_laplacian_of_k4_matches_display():
    assert laplacian(complete_graph(4)) == L_K4


def test_small_laplacians():
    x = Polynomial.variable(1, 0)
    assert laplacian(from_edges(2, [(1, 2)])).rows == ((x, -x), (-x, x))
    loops = laplacian(from_edges(2, [(1, 1), (2, 2)]))
    assert all(p.is_zero() for row in loops.rows for p in row)


def test_cofactor_examples():
    assert cofactor(L_K4, 0, 0) == L_K4_11
    one = PolynomialMatrix.from_rows([[Polynomial.variable(1, 0)]], 1)
    empty = cofactor(one, 0, 0)
    assert empty.dim == 0
    assert fraction_free_determinant(empty) == Polynomial.constant(1, 1)
    minor = cofactor(L_K4, 0, 1)
    assert minor.dim == 3 and not minor.is_symmetric()


def test_determinant_examples():
    x = Polynomial.variable(1, 0)
    one = Polynomial.constant(1, 1)
    zero = Polynomial.zero(1)
    assert fraction_free_determinant(PolynomialMatrix.from_rows([[x, one], [one, x]], 1)) == x ** 2 - 1
    ident = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert fraction_free_determinant(PolynomialMatrix.from_rows(ident, 1)) == one
    assert fraction_free_determinant(L_K4_11) == from_named_terms(K4_TERMS)


def test_symbolic_determinant_matches_leibniz_oracle():
    assert fraction_free_determinant(L_K4_11) == leibniz_det(L_K4_11.rows)
    g = builtin_graph("K5-1.2")
    M = cofactor(laplacian(g), 2, 2)
    assert fraction_free_determinant(M) == leibniz_det(M.rows)


def test_kirchhoff_examples():
    assert kirchhoff_polynomial(complete_graph(4), "matrix_tree") == from_named_terms(K4_TERMS)
    assert kirchhoff_polynomial(complete_graph(4), "enumeration") == from_named_terms(K4_TERMS)
    tree = path_graph(5)
    assert kirchhoff_polynomial(tree) == Polynomial.monomial(4, range(4))
    x = [Polynomial.variable(3, i) for i in range(3)]
    assert kirchhoff_polynomial(cycle_graph(3)) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    with pytest.raises(ValueError):
        kirchhoff_polynomial(tree, "nope")


def test_disconnected_gives_zero_with_warning(caplog):
    g = from_edges(4, [(1, 2), (3, 4)])
    for route in ("matrix_tree", "enumeration"):
        caplog.clear()
        assert kirchhoff_polynomial(g, route).is_zero()
        assert "disconnected" in caplog.text


@pytest.mark.parametrize("g", corpus.connected_simple_graphs(5) + corpus.multigraph_corpus(),
                         ids=lambda g: g.name)
def test_cofactor_invariance_and_row_sums(g):
    L = laplacian(g)
    for row in L.rows:
        total = Polynomial.zero(g.num_edges)
        for p in row:
            total = total + p
        assert total.is_zero()
    F = kirchhoff_polynomial(g, "enumeration")
    n = g.num_vertices
    for i in range(n):
        for j in range(n):
            assert signed_cofactor_determinant(g, i, j) == F


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_key_observation(r):
    M = cofactor(laplacian(complete_graph(r + 1)), 0, 0)
    assert M.is_symmetric()
    seen = []
    for i in range(r):
        for j in range(i + 1, r):
            entry = M[i, j]
            assert len(entry) == 1
            (e, c), = entry.items()
            assert c == -1 and sum(e) == 1
            seen.append(e.index(1))
    # every x_ij with 2 <= i < j appears exactly once
    assert len(seen) == len(set(seen)) == r * (r - 1) // 2


small_ints = st.integers(-6, 6)


def exact_int_div(p: int, q: int) -> int:
    assert p % q == 0, "Bareiss division must be exact"
    return p // q


@given(st.integers(0, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_bareiss_over_integers_matches_leibniz(rows):
    got = bareiss(rows, 1, lambda v: v == 0, exact_int_div)
    assert got == leibniz_det(rows)
    assert rational_determinant(rows) == Fraction(leibniz_det(rows))
