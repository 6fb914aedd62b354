"""Exact Hessians, log-concavity certificates and Hessian identities.

Everything here is decided in exact rational arithmetic; a verdict never
passes through floating point.  For a homogeneous F of degree r the central
object is

    M(s, a) = -F(a) H_F(a) + s grad F(a) grad F(a)^T,

with threshold s0 = (r - 1) / r.  Euler's identity gives M(s0, a) a = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, log2
from typing import Callable, Sequence, Union

from .graphs import complete_graph, spanning_trees
from .inertia import (
    Inertia,
    SymmetricRationalMatrix,
    congruence_reduce,
    dot,
    rank_one,
)
from .matrixtree import (
    PolynomialMatrix,
    fraction_free_determinant,
    kirchhoff_polynomial,
    rational_determinant,
)
from .poly import (
    Polynomial,
    RationalPoint,
    _coords,
    as_rational,
    elementary_symmetric,
    iterated_directional_derivative,
)
from .report import VerificationReport

MODES = ("plain", "strict", "homogeneous", "strict_homogeneous")
DEFAULT_TRIALS = 20
COORDINATE_RANGE = (1, 2 ** 20)


@dataclass(frozen=True)
class HessianData:
    hessian: SymmetricRationalMatrix
    gradient: tuple[Fraction, ...]
    value: Fraction


def hessian_and_gradient_at(F: Polynomial, a) -> HessianData:
    coords = _coords(a, F.num_vars)
    n = F.num_vars
    H = [[Fraction(0)] * n for _ in range(n)]
    g = [Fraction(0)] * n
    value = Fraction(0)
    for exp, c in F.items():
        support = [i for i, k in enumerate(exp) if k]
        e = list(exp)

        def mono() -> Fraction:
            v = c
            for i in support:
                if e[i]:
                    v *= coords[i] ** e[i]
            return v

        value += mono()
        for i in support:
            ki = e[i]
            e[i] -= 1
            g[i] += ki * mono()
            for j in support:
                if j < i or not e[j]:
                    continue
                kj = e[j]
                e[j] -= 1
                h = ki * kj * mono()
                e[j] += 1
                H[i][j] += h
                if j != i:
                    H[j][i] += h
            e[i] += 1
    return HessianData(SymmetricRationalMatrix(tuple(tuple(r) for r in H)), tuple(g), value)


def hessian_matrix(F: Polynomial) -> PolynomialMatrix:
    grads = F.gradient()
    n = F.num_vars
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = grads[i].partial(j)
    return PolynomialMatrix.from_rows(rows, n)


def _degree(F: Polynomial, minimum: int) -> int:
    prof = F.homogeneity_profile()
    if not prof.is_homogeneous or prof.degree is None:
        raise ValueError("polynomial must be homogeneous and nonzero")
    if prof.degree < minimum:
        raise ValueError(f"degree {prof.degree} < {minimum}")
    return prof.degree


def threshold(r: int) -> Fraction:
    return Fraction(r - 1, r)


def log_concavity_matrix(F: Polynomial, a, s) -> SymmetricRationalMatrix:
    _degree(F, 2)
    data = hessian_and_gradient_at(F, a)
    return _lc_matrix(data, as_rational(s))


def _lc_matrix(data: HessianData, s: Fraction) -> SymmetricRationalMatrix:
    return data.hessian.scale(-data.value) + rank_one(data.gradient, s)


@dataclass(frozen=True)
class LogConcavityVerdict:
    mode: str
    s_parameter: Fraction
    quantified: bool  # True: claim is "for every s >= s0" (or > s0)
    verdict: bool
    witness: tuple[Fraction, ...] | None = None
    reason: str = ""
    inertia: Inertia | None = None
    value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "s": str(self.s_parameter),
            "quantified": self.quantified,
            "verdict": self.verdict,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "reason": self.reason,
            "inertia": None if self.inertia is None else self.inertia.as_list(),
            "value": None if self.value is None else str(self.value),
        }


def check_log_concavity(F: Polynomial, a, mode: str = "strict_homogeneous",
                        s=None) -> LogConcavityVerdict:
    """Certify (strict) (homogeneous) log-concavity of F at a.

    Without ``s`` the homogeneous modes certify the quantified claim over all
    s >= s0 (resp. s > s0) from a single reduction of M(s0): since
    M(s) = M(s0) + (s - s0) g g^T, positivity for every s > s0 holds exactly
    when M(s0) is PSD with at most a one-dimensional kernel not orthogonal to g.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    homogeneous = mode in ("homogeneous", "strict_homogeneous")
    strict = mode in ("strict", "strict_homogeneous")
    r = _degree(F, 3 if homogeneous else 2)
    point = a if isinstance(a, RationalPoint) else RationalPoint.of(a)
    if strict and not point.is_nonnegative():
        raise ValueError("strict modes are only defined on the closed positive orthant")
    data = hessian_and_gradient_at(F, point)
    s0 = threshold(r)

    if s is not None:
        s = as_rational(s)
        if mode == "homogeneous" and s < s0:
            raise ValueError(f"s must be >= {s0}")
        if mode == "strict_homogeneous" and s <= s0:
            raise ValueError(f"s must be > {s0}")
    elif not homogeneous:
        s = Fraction(1)

    quantified = homogeneous and s is None
    s_used = s0 if quantified else s
    red = congruence_reduce(_lc_matrix(data, s_used))
    inert = red.inertia()
    vanished = strict and data.value == 0

    def verdict(ok: bool, witness=None, reason=""):
        if vanished:
            ok, reason = False, "value vanished"
            if witness is None:
                witness = red.nonpositive_direction()
        return LogConcavityVerdict(mode, s_used, quantified, ok, witness, reason, inert, data.value)

    if not strict:
        w = red.negative_direction()
        return verdict(w is None, w, "" if w is None else "negative direction")
    if not quantified:
        w = red.nonpositive_direction()
        return verdict(w is None, w, "" if w is None else "non-positive direction")

    neg = red.negative_direction()
    if neg is not None:
        return verdict(False, neg, "M(s0) is not positive semidefinite")
    kernel = red.kernel_basis()
    if not kernel:
        return verdict(True)
    g = data.gradient
    if len(kernel) == 1:
        if dot(g, kernel[0]) != 0:
            return verdict(True)
        return verdict(False, kernel[0], "kernel of M(s0) is orthogonal to the gradient")
    k1, k2 = kernel[0], kernel[1]
    y = tuple(dot(g, k2) * u - dot(g, k1) * v for u, v in zip(k1, k2))
    if not any(y):
        y = k1
    return verdict(False, y, "kernel of M(s0) has dimension >= 2")


# -- identities --------------------------------------------------------------------

@dataclass(frozen=True)
class EulerCheck:
    holds: bool
    residual: Polynomial | None = None
    which: str = ""

    def __bool__(self) -> bool:
        return self.holds


def euler_check(F: Polynomial) -> EulerCheck:
    """r(r-1) F = x^T H x  and  (r-1) grad F = H x, symbolically."""
    r = _degree(F, 2)
    n = F.num_vars
    xs = [Polynomial.variable(n, i) for i in range(n)]
    H = hessian_matrix(F)
    grads = F.gradient()
    Hx = []
    for i in range(n):
        acc = Polynomial.zero(n)
        for j in range(n):
            if H[i, j]:
                acc = acc + H[i, j] * xs[j]
        Hx.append(acc)
    for i in range(n):
        res = Hx[i] - grads[i] * (r - 1)
        if res:
            return EulerCheck(False, res, f"gradient component {i + 1}")
    xHx = Polynomial.zero(n)
    for i in range(n):
        if Hx[i]:
            xHx = xHx + xs[i] * Hx[i]
    res = xHx - F * (r * (r - 1))
    if res:
        return EulerCheck(False, res, "quadratic form")
    return EulerCheck(True)


def rank_one_det_check(v: Sequence, s) -> bool:
    """det(I - s v v^T) == 1 - s tr(v v^T), exactly."""
    s = as_rational(s)
    v = [as_rational(x) for x in v]
    n = len(v)
    rows = [[Fraction(int(i == j)) - s * v[i] * v[j] for j in range(n)] for i in range(n)]
    return rational_determinant(rows) == 1 - s * sum(x * x for x in v)


@dataclass(frozen=True)
class IdentityTestResult:
    passed: bool
    trials: int
    seed: int
    degree_bound: int
    coordinate_range: tuple[int, int]
    witness: tuple | None = None
    lhs_value: Fraction | None = None
    rhs_value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failure_bound(self) -> Fraction:
        """Probability that distinct polynomials agree on every sampled point."""
        lo, hi = self.coordinate_range
        size = hi - lo + 1
        per_trial = min(Fraction(self.degree_bound, size), Fraction(1))
        return per_trial ** self.trials

    @property
    def failure_bound_log2(self) -> float:
        b = self.failure_bound
        return float("-inf") if b == 0 else log2(b.numerator) - log2(b.denominator)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "trials": self.trials,
            "seed": self.seed,
            "degree_bound": self.degree_bound,
            "coordinate_range": list(self.coordinate_range),
            "failure_bound": str(self.failure_bound),
            "failure_bound_log2": round(self.failure_bound_log2, 3),
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "lhs": None if self.lhs_value is None else str(self.lhs_value),
            "rhs": None if self.rhs_value is None else str(self.rhs_value),
        }


Evaluator = Union[Polynomial, Callable[[tuple[Fraction, ...]], Fraction]]


def _as_evaluator(side: Evaluator):
    if isinstance(side, Polynomial):
        return side.evaluate
    return side


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed + trial)


def polynomial_identity_test(lhs: Evaluator, rhs: Evaluator, num_vars: int,
                             degree_bound: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
                             coordinate_range: tuple[int, int] = COORDINATE_RANGE,
                             ) -> IdentityTestResult:
    """Schwartz-Zippel check by exact evaluation at seeded random integer points.

    Trial t draws its point from ``random.Random(seed + t)``.  The first
    disagreeing point (in trial order) is returned as the witness.
    """
    for side in (lhs, rhs):
        if isinstance(side, Polynomial) and side.num_vars != num_vars:
            raise ValueError("variable-count mismatch")
    f, g = _as_evaluator(lhs), _as_evaluator(rhs)
    lo, hi = coordinate_range
    for t in range(trials):
        rng = trial_rng(seed, t)
        point = tuple(Fraction(rng.randint(lo, hi)) for _ in range(num_vars))
        lv, rv = f(point), g(point)
        if lv != rv:
            return IdentityTestResult(False, trials, seed, degree_bound, coordinate_range,
                                      point, lv, rv)
    return IdentityTestResult(True, trials, seed, degree_bound, coordinate_range)


def identity1_sides(F: Polynomial, a, s) -> tuple[Fraction, Fraction]:
    """Both sides of det(-F H + s g g^T) = (-1)^(n-1) r/(r-1) (s - s0) F^n det H at a."""
    r = _degree(F, 2)
    n = F.num_vars
    s = as_rational(s)
    data = hessian_and_gradient_at(F, a)
    lhs = rational_determinant(_lc_matrix(data, s).rows)
    det_h = rational_determinant(data.hessian.rows)
    rhs = (-1) ** (n - 1) * Fraction(r, r - 1) * (s - threshold(r)) * data.value ** n * det_h
    return lhs, rhs


def identity1_symbolic(F: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Both sides as polynomials in x_1..x_n and s (the last variable)."""
    r = _degree(F, 2)
    n = F.num_vars
    big = F.embed(n + 1, list(range(n)))
    s = Polynomial.variable(n + 1, n)
    grads = [big.partial(i) for i in range(n)]
    H = [[grads[i].partial(j) for j in range(n)] for i in range(n)]
    M = [[-(big * H[i][j]) + s * grads[i] * grads[j] for j in range(n)] for i in range(n)]
    lhs = fraction_free_determinant(PolynomialMatrix.from_rows(M, n + 1))
    det_h = fraction_free_determinant(PolynomialMatrix.from_rows(H, n + 1))
    rhs = (s - threshold(r)) * big ** n * det_h * (Fraction(r, r - 1) * (-1) ** (n - 1))
    return lhs, rhs


SYMBOLIC_IDENTITY1_MAX_VARS = 4


def identity1_check(F: Polynomial, trials: int = DEFAULT_TRIALS, seed: int = 0,
                    mode: str | None = None) -> VerificationReport:
    r = _degree(F, 2)
    n = F.num_vars
    if mode is None:
        mode = "symbolic" if n <= SYMBOLIC_IDENTITY1_MAX_VARS else "evaluation"
    params = {"num_vars": n, "degree": r}
    if mode == "symbolic":
        lhs, rhs = identity1_symbolic(F)
        ok = lhs == rhs
        return VerificationReport(
            "hessian-rank-one-determinant-identity", ok, params, mode,
            witness=None if ok else {"difference": (lhs - rhs).to_text()},
            details={"lhs": lhs.to_text()})
    if mode != "evaluation":
        raise ValueError(f"unknown mode {mode!r}")
    lo, hi = COORDINATE_RANGE
    for t in range(trials):
        rng = trial_rng(seed, t)
        point = tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))
        s = Fraction(rng.randint(-hi, hi), rng.randint(1, 2 ** 10))
        lhs, rhs = identity1_sides(F, point, s)
        if lhs != rhs:
            return VerificationReport(
                "hessian-rank-one-determinant-identity", False, params, mode, seed, trials,
                witness={"point": point, "s": s, "lhs": lhs, "rhs": rhs})
    # total degree of either side in (x, s) is at most n (2r - 1)
    deg = n * (2 * r - 1)
    res = IdentityTestResult(True, trials, seed, deg, COORDINATE_RANGE)
    return VerificationReport("hessian-rank-one-determinant-identity", True, params, mode,
                              seed, trials, details={"identity_test": res.to_dict()})


# -- complete graphs -----------------------------------------------------------------

def complete_graph_constants(r: int) -> dict:
    N = comb(r + 1, 2)
    c_r = 2 ** (N - r) * (r - 1)
    sign = (-1) ** (N - 1)
    return {"r": r, "N": N, "c_r": c_r, "sign": sign, "constant": sign * c_r,
            "exponent": N - r - 1, "degree": N * (r - 2)}


SYMBOLIC_MAX_R = 3


def complete_graph_hessian_identity(r: int, mode: str = "evaluation",
                                    trials: int = DEFAULT_TRIALS,
                                    seed: int = 0) -> VerificationReport:
    """det H_F = (-1)^(N-1) 2^(N-r) (r-1) F^(N-r-1) for F the Kirchhoff polynomial of K_{r+1}."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if mode not in ("symbolic", "evaluation"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "symbolic" and r > SYMBOLIC_MAX_R:
        raise ValueError(f"r = {r} is too large for symbolic mode (max {SYMBOLIC_MAX_R})")
    k = complete_graph_constants(r)
    F = kirchhoff_polynomial(complete_graph(r + 1), route="enumeration")
    params = {"r": r, "N": k["N"]}
    details = {"constant": k["constant"], "exponent": k["exponent"],
               "degree_bound": k["degree"]}
    claim = "complete-graph-hessian-identity"
    if mode == "symbolic":
        det_h = fraction_free_determinant(hessian_matrix(F))
        rhs = F ** k["exponent"] * k["constant"]
        ok = det_h == rhs
        details["det_terms"] = len(det_h)
        return VerificationReport(claim, ok, params, mode, details=details,
                                  witness=None if ok else {"difference": (det_h - rhs).to_text()})

    def lhs(point):
        return rational_determinant(hessian_and_gradient_at(F, point).hessian.rows)

    def rhs(point):
        return k["constant"] * F.evaluate(point) ** k["exponent"]

    res = polynomial_identity_test(lhs, rhs, F.num_vars, k["degree"], trials, seed)
    details["identity_test"] = res.to_dict()
    witness = None if res.passed else res.to_dict()
    return VerificationReport(claim, res.passed, params, mode, seed, trials, witness, details)


def hessian_at_ones_report(r: int) -> VerificationReport:
    """det H at (1, ..., 1) for K_{r+1} against both published closed forms.

    The second form (through the spanning-tree count) is the one asserted; the
    first form is reported alongside, with its ratio to the exact value.
    """
    k = complete_graph_constants(r)
    N = k["N"]
    F = kirchhoff_polynomial(complete_graph(r + 1), route="enumeration")
    ones = RationalPoint.ones(N)
    data = hessian_and_gradient_at(F, ones)
    value = rational_determinant(data.hessian.rows)
    trees = len(spanning_trees(complete_graph(r + 1)))
    first = k["sign"] * Fraction(2) ** (N - (r + 1)) * Fraction(r + 1) ** (r + 1 + N * (r - 3)) * (r - 1)
    second = k["sign"] * 2 ** (N - r) * (r - 1) * Fraction(trees) ** (N - r - 1)
    ok = value == second
    notes = []
    if value != first:
        notes.append(f"first closed form gives {first}, exact value is {value} "
                     f"(ratio {first / value if value else 'undefined'})")
    return VerificationReport(
        "complete-graph-hessian-at-ones", ok, {"r": r, "N": N},
        details={"value": value, "first_form": first, "second_form": second,
                 "matches_first_form": value == first, "matches_second_form": value == second,
                 "first_form_ratio": first / value if value else None,
                 "spanning_trees": trees},
        notes=notes)


CAYLEY_RANGE = (2, 7)


def cayley_check(r: int) -> bool:
    lo, hi = CAYLEY_RANGE
    if not lo <= r <= hi:
        raise ValueError(f"r must lie in [{lo}, {hi}]")
    return len(spanning_trees(complete_graph(r + 1))) == (r + 1) ** (r - 1)


# -- deletion/contraction form of the log-concavity matrix ------------------------

def split_condition_matrix(F: Polynomial, a, k: int, s) -> SymmetricRationalMatrix:
    """The (N-1)x(N-1) matrix equivalent to M(s, a) via F = F0 + x_k Fk.

    F must be multi-affine in x_k; rows/columns for x_k are dropped.
    """
    if any(e[k] > 1 for e, _ in F.items()):
        raise ValueError(f"F is not affine in variable {k}")
    s = as_rational(s)
    coords = _coords(a, F.num_vars)
    F0 = F.restrict_to_zero([k])
    Fk = F.partial(k)
    d0 = hessian_and_gradient_at(F0, coords)
    dk = hessian_and_gradient_at(Fk, coords)
    keep = [i for i in range(F.num_vars) if i != k]
    f0, fk, xk = d0.value, dk.value, coords[k]
    g0 = [d0.gradient[i] for i in keep]
    gk = [dk.gradient[i] for i in keep]
    H0 = [[d0.hessian[i, j] for j in keep] for i in keep]
    Hk = [[dk.hessian[i, j] for j in keep] for i in keep]
    w = [s * fk * u - f0 * v for u, v in zip(g0, gk)]
    m = len(keep)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            first = s * xk * f0 * fk * (-fk * Hk[i][j] + (2 * s - 1) / s * gk[i] * gk[j])
            second = s * fk * fk * (-f0 * H0[i][j] + s * g0[i] * g0[j])
            row.append(first + second - w[i] * w[j])
        rows.append(tuple(row))
    return SymmetricRationalMatrix(tuple(rows))


@dataclass
class ElementarySymmetricIdentity:
    n: int
    ell: int
    derivative_equals_factorial_multiple: bool  # d_1^ell e_n == ell! e_{n-ell}
    factorial_on_derivative_side: bool  # e_{n-ell} == ell! d_1^ell e_n
    details: dict = field(default_factory=dict)


def elementary_symmetric_identity(n: int, ell: int) -> ElementarySymmetricIdentity:
    if not 0 <= ell <= n:
        raise ValueError("need 0 <= ell <= n")
    ones = RationalPoint.ones(n)
    d = iterated_directional_derivative(elementary_symmetric(n, n), ones, ell)
    target = elementary_symmetric(n, n - ell)
    f = factorial(ell)
    return ElementarySymmetricIdentity(n, ell, d == target * f, target == d * f)
