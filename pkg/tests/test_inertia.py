from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kirchhoff.graphs import complete_graph
from kirchhoff.hessian import hessian_and_gradient_at
from kirchhoff.inertia import (
    Inertia,
    SymmetricRationalMatrix,
    characteristic_polynomial,
    congruence_reduce,
    inertia,
    inertia_by_charpoly,
    primitive_integer_vector,
    rank_one,
    rational_nullspace,
)
from kirchhoff.matrixtree import kirchhoff_polynomial, rational_determinant
from kirchhoff.poly import RationalPoint

entries = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


@st.composite
def symmetric(draw, min_n=1, max_n=6, values=entries):
    n = draw(st.integers(min_n, max_n))
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(values)
    return SymmetricRationalMatrix.of(a)


nonzero = entries.filter(bool)


@st.composite
def invertible(draw, n):
    """L U with L unit lower triangular and U upper triangular with nonzero diagonal."""
    L = [[Fraction(int(i == j)) if j >= i else draw(entries) for j in range(n)] for i in range(n)]
    U = [[draw(nonzero) if j == i else draw(entries) if j > i else Fraction(0)
          for j in range(n)] for i in range(n)]
    return [[sum(L[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def k4_hessian_at_ones():
    F = kirchhoff_polynomial(complete_graph(4))
    return hessian_and_gradient_at(F, RationalPoint.ones(6)).hessian


def test_examples():
    assert inertia(SymmetricRationalMatrix.identity(3)) == Inertia(3, 0, 0)
    assert inertia(SymmetricRationalMatrix.diagonal([1, -2, 0])) == Inertia(1, 1, 1)
    H = k4_hessian_at_ones()
    assert inertia(H) == Inertia(1, 5, 0)
    assert inertia_by_charpoly(H) == Inertia(1, 5, 0)


def test_k4_hessian_eigenvalues():
    # det(tI - H) = (t - 16)(t + 2)^2 (t + 4)^3, expanded independently
    roots = [16, -2, -2, -4, -4, -4]
    coeffs = [Fraction(1)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        coeffs = [shifted[k] - r * (coeffs[k] if k < len(coeffs) else 0) for k in range(len(shifted))]
    assert characteristic_polynomial(k4_hessian_at_ones()) == coeffs


def test_zero_diagonal_repair():
    M = SymmetricRationalMatrix.of([[0, 1], [1, 0]])
    red = congruence_reduce(M)
    assert red.inertia() == Inertia(1, 1, 0)
    assert inertia(SymmetricRationalMatrix.of([[0, 0], [0, 0]])) == Inertia(0, 0, 2)


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        SymmetricRationalMatrix.of([[1, 2], [3, 4]])


def test_nullspace_and_primitive_vectors():
    ker = rational_nullspace([[1, 1, 0], [0, 1, 1]], 3)
    assert ker == [(Fraction(1), Fraction(-1), Fraction(1))]
    assert primitive_integer_vector([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)


@given(symmetric(max_n=8))
def test_congruence_reduction_is_a_valid_diagonalization(M):
    red = congruence_reduce(M)
    P = [list(row) for row in red.transform]
    assert rational_determinant(P) != 0
    D = M.congruent(P)
    n = M.dim
    assert all(D[i, j] == (red.diagonal[i] if i == j else 0) for i in range(n) for j in range(n))
    for v in red.kernel_basis():
        assert not any(M.matvec(v))


@given(symmetric(max_n=8))
def test_oracle_agreement(M):
    assert inertia(M) == inertia_by_charpoly(M)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(symmetric(n, n), invertible(n))))
def test_sylvester_invariance(pair):
    M, P = pair
    assert inertia(M.congruent(P)) == inertia(M)


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(symmetric(n, n), st.lists(entries, min_size=n, max_size=n))))
def test_rank_one_interlacing(pair):
    A, v = pair
    B = A + rank_one(v)
    a, b = inertia(A), inertia(B)
    assert a.n_plus <= b.n_plus <= a.n_plus + 1
    assert b.n_minus <= a.n_minus <= b.n_minus + 1
