"""Weighted Laplacians, fraction-free determinants and the Matrix-Tree route."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from .graphs import Graph, spanning_trees
from .poly import Polynomial

log = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class PolynomialMatrix:
    rows: tuple[tuple[Polynomial, ...], ...]
    num_vars: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.rows):
                raise ValueError("matrix must be square")
            for p in row:
                if p.num_vars != self.num_vars:
                    raise ValueError("all entries must share num_vars")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]], num_vars: int) -> "PolynomialMatrix":
        return cls(tuple(tuple(r) for r in rows), num_vars)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def evaluate(self, point):
        return [[p.evaluate(point) for p in row] for row in self.rows]

    def to_text(self) -> str:
        return "\n".join(" ; ".join(p.to_text() for p in row) for row in self.rows)


def laplacian(g: Graph) -> PolynomialMatrix:
    n, m = g.num_vertices, g.num_edges
    cells = [[Polynomial.zero(m) for _ in range(n)] for _ in range(n)]
    for k, e in enumerate(g.edges):
        if e.is_loop:
            continue
        x = Polynomial.variable(m, k)
        i, j = e.u - 1, e.v - 1
        cells[i][i] = cells[i][i] + x
        cells[j][j] = cells[j][j] + x
        cells[i][j] = cells[i][j] - x
        cells[j][i] = cells[j][i] - x
    return PolynomialMatrix.from_rows(cells, m)


def cofactor(M: PolynomialMatrix, i: int, j: int) -> PolynomialMatrix:
    """Submatrix with row i and column j removed (0-based)."""
    if not (0 <= i < M.dim and 0 <= j < M.dim):
        raise IndexError(f"({i}, {j}) out of range for a {M.dim}x{M.dim} matrix")
    rows = [row[:j] + row[j + 1:] for r, row in enumerate(M.rows) if r != i]
    return PolynomialMatrix.from_rows(rows, M.num_vars)


def bareiss(rows: Sequence[Sequence[T]], one: T, is_zero: Callable[[T], bool],
            exact_div: Callable[[T, T], T]) -> T:
    """Determinant by Bareiss fraction-free elimination over an integral domain."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pivot - aik * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = one * 0
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def fraction_free_determinant(M: PolynomialMatrix) -> Polynomial:
    one = Polynomial.constant(M.num_vars, 1)

    def div(p: Polynomial, q: Polynomial) -> Polynomial:
        try:
            return p.divide_exact(q)
        except ArithmeticError as exc:  # pragma: no cover - would be a bug
            raise AssertionError("Bareiss step produced an inexact division") from exc

    return bareiss(M.rows, one, Polynomial.is_zero, div)


def rational_determinant(rows) -> Fraction:
    return bareiss([[Fraction(x) for x in r] for r in rows], Fraction(1),
                   lambda x: x == 0, lambda p, q: p / q)


def kirchhoff_polynomial(g: Graph, route: str = "matrix_tree") -> Polynomial:
    """Spanning-tree generating polynomial, by cofactor determinant or enumeration."""
    if route == "enumeration":
        trees = spanning_trees(g)
        if trees.disconnected:
            log.warning("graph is disconnected; Kirchhoff polynomial is zero")
        terms = {}
        for t in trees:
            e = [0] * g.num_edges
            for k in t:
                e[k] = 1
            terms[tuple(e)] = 1
        return Polynomial(g.num_edges, terms)
    if route == "matrix_tree":
        if not g.is_connected():
            log.warning("graph is disconnected; Kirchhoff polynomial is zero")
        return fraction_free_determinant(cofactor(laplacian(g), 0, 0))
    raise ValueError(f"unknown route {route!r}")


def signed_cofactor_determinant(g: Graph, i: int, j: int) -> Polynomial:
    d = fraction_free_determinant(cofactor(laplacian(g), i, j))
    return d if (i + j) % 2 == 0 else -d
