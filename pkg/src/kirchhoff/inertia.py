"""Exact symmetric rational matrices and their inertia.

Signatures come from a symmetric congruence reduction P^T M P = D that is
tracked explicitly, so every zero or negative diagonal entry of D hands back
a concrete witness vector y = P e_k with y^T M y = D_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, gcd
from typing import Sequence

from .poly import as_rational

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def __post_init__(self):
        if min(self.n_plus, self.n_minus, self.n_zero) < 0:
            raise ValueError("inertia counts are non-negative")

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_list(self) -> list[int]:
        return [self.n_plus, self.n_minus, self.n_zero]

    def __str__(self) -> str:
        return f"({self.n_plus}, {self.n_minus}, {self.n_zero})"


@dataclass(frozen=True)
class SymmetricRationalMatrix:
    rows: tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in r) for r in self.rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i}, {j})")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows) -> "SymmetricRationalMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "SymmetricRationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values) -> "SymmetricRationalMatrix":
        vals = [as_rational(v) for v in values]
        n = len(vals)
        return cls(tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n))
                         for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "SymmetricRationalMatrix") -> "SymmetricRationalMatrix":
        return SymmetricRationalMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def scale(self, c) -> "SymmetricRationalMatrix":
        c = as_rational(c)
        return SymmetricRationalMatrix(tuple(tuple(c * x for x in r) for r in self.rows))

    def matvec(self, v: Sequence) -> Vector:
        return tuple(sum((a * as_rational(b) for a, b in zip(r, v)), Fraction(0))
                     for r in self.rows)

    def quadratic_form(self, v: Sequence) -> Fraction:
        return sum((as_rational(a) * b for a, b in zip(v, self.matvec(v))), Fraction(0))

    def congruent(self, P: Sequence[Sequence]) -> "SymmetricRationalMatrix":
        """P^T M P."""
        n = self.dim
        P = [[as_rational(x) for x in r] for r in P]
        MP = [[sum(self.rows[i][k] * P[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        return SymmetricRationalMatrix(tuple(
            tuple(sum(P[k][i] * MP[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]


def rank_one(v: Sequence, c=1) -> SymmetricRationalMatrix:
    """c * v v^T."""
    v = [as_rational(x) for x in v]
    c = as_rational(c)
    return SymmetricRationalMatrix(tuple(tuple(c * a * b for b in v) for a in v))


@dataclass(frozen=True)
class CongruenceReduction:
    diagonal: Vector
    transform: tuple[Vector, ...]  # P, row-major; P^T M P = diag(diagonal)

    def column(self, k: int) -> Vector:
        return tuple(row[k] for row in self.transform)

    def inertia(self) -> Inertia:
        d = self.diagonal
        return Inertia(sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d))

    def kernel_basis(self) -> list[Vector]:
        return [self.column(k) for k, x in enumerate(self.diagonal) if x == 0]

    def nonpositive_direction(self) -> Vector | None:
        for k, x in enumerate(self.diagonal):
            if x <= 0:
                return self.column(k)
        return None

    def negative_direction(self) -> Vector | None:
        for k, x in enumerate(self.diagonal):
            if x < 0:
                return self.column(k)
        return None


def congruence_reduce(M: SymmetricRationalMatrix) -> CongruenceReduction:
    """Diagonalize by symmetric row/column operations.

    Pivot: the first nonzero diagonal entry among unprocessed indices.  When
    every remaining diagonal entry vanishes but some M[i][j] does not, adding
    row/column j to row/column i makes the (i, i) entry 2 M[i][j] != 0.
    """
    n = M.dim
    A = [list(r) for r in M.rows]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    order: list[int] = []

    def add_col(dst: int, src: int, c: Fraction):
        # A <- E^T A E with E = I + c e_src e_dst^T  (column dst += c column src)
        for r in range(n):
            A[r][dst] += c * A[r][src]
        for r in range(n):
            A[dst][r] += c * A[src][r]
        for r in range(n):
            P[r][dst] += c * P[r][src]

    while remaining:
        pivot = next((i for i in remaining if A[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in remaining for j in remaining
                         if i < j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            add_col(i, j, Fraction(1))
            pivot = i
        remaining.remove(pivot)
        order.append(pivot)
        d = A[pivot][pivot]
        for j in remaining:
            if A[pivot][j] != 0:
                add_col(j, pivot, -A[pivot][j] / d)
    order.extend(remaining)
    diag = tuple(A[k][k] for k in order)
    transform = tuple(tuple(P[r][k] for k in order) for r in range(n))
    return CongruenceReduction(diag, transform)


def inertia(M: SymmetricRationalMatrix) -> Inertia:
    return congruence_reduce(M).inertia()


# -- independent oracle ----------------------------------------------------------

def characteristic_polynomial(M: SymmetricRationalMatrix) -> list[Fraction]:
    """Coefficients c_0..c_n of det(t I - M) by Faddeev-LeVerrier."""
    n = M.dim
    A = [list(r) for r in M.rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- A Mk + c_{n-k+1} I
        prev = Mk
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            Mk[i][i] += coeffs[n - k + 1]
        AM = [[sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(AM[i][i] for i in range(n)) / k
    return coeffs


def _sign_changes(seq: Sequence[Fraction]) -> int:
    signs = [x > 0 for x in seq if x != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def inertia_by_charpoly(M: SymmetricRationalMatrix) -> Inertia:
    """Descartes' rule on the characteristic polynomial (exact for real-rooted ones)."""
    c = characteristic_polynomial(M)
    n_zero = next(k for k, x in enumerate(c) if x != 0)
    n_plus = _sign_changes(c)
    n_minus = _sign_changes([x if k % 2 == 0 else -x for k, x in enumerate(c)])
    return Inertia(n_plus, n_minus, n_zero)


# -- generic exact linear algebra -------------------------------------------------

def rational_nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {c : A c = 0} from the reduced row echelon form."""
    A = [[as_rational(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][f]
        basis.append(primitive_integer_vector(v))
    return basis


def primitive_integer_vector(v: Sequence) -> Vector:
    """Scale to coprime integers (sign kept)."""
    v = [as_rational(x) for x in v]
    if not any(v):
        return tuple(v)
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    return tuple(Fraction(x) for x in ints)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((as_rational(a) * as_rational(b) for a, b in zip(u, v)), Fraction(0))
