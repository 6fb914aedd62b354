"""Degree-one strong Lefschetz and Hodge-Riemann checks via the Hessian criterion.

The algebra Q[x]/Ann(F) is never built.  In degree one everything is read off
F itself: linear relations among the partials, F(a), and the Hessian at a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .graphs import Graph, graph_simplicity
from .hessian import _degree, elementary_symmetric_identity, hessian_and_gradient_at
from .inertia import Inertia, SymmetricRationalMatrix, inertia, rational_nullspace
from .matrixtree import kirchhoff_polynomial, rational_determinant
from .poly import Polynomial, RationalPoint, _coords, elementary_symmetric


@dataclass(frozen=True)
class DegreeOneStructure:
    partials: tuple[Polynomial, ...]
    dependency_kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.partials) - len(self.dependency_kernel)

    @property
    def independent(self) -> bool:
        return not self.dependency_kernel


def degree_one_kernel(F: Polynomial) -> DegreeOneStructure:
    """Rational relations sum c_i dF/dx_i = 0 among the first partials."""
    if F.is_zero():
        raise ValueError("the zero polynomial has no degree-one structure")
    partials = tuple(F.gradient())
    monomials = sorted({e for p in partials for e, _ in p.items()})
    rows = [[p.terms.get(m, 0) for p in partials] for m in monomials]
    kernel = rational_nullspace(rows, F.num_vars)
    return DegreeOneStructure(partials, tuple(kernel))


def _sign(x: Fraction) -> str:
    return "+" if x > 0 else "-" if x < 0 else "0"


@dataclass(frozen=True)
class SLPReport:
    f_value: Fraction
    hessian_det_sign: str
    slp_holds: bool
    hr_inertia: Inertia
    hr_relation_holds: bool
    kernel_dim: int = 0
    hessian_det: Fraction | None = None

    def __bool__(self) -> bool:
        return self.slp_holds and self.hr_relation_holds

    def to_dict(self) -> dict:
        return {
            "f_value": str(self.f_value),
            "det_sign": self.hessian_det_sign,
            "slp": self.slp_holds,
            "inertia": self.hr_inertia.as_list(),
            "hr": self.hr_relation_holds,
            "kernel_dim": self.kernel_dim,
        }


def hodge_riemann_form(F: Polynomial, a) -> SymmetricRationalMatrix:
    """(r-2)! times the Hessian at a."""
    r = _degree(F, 2)
    return hessian_and_gradient_at(F, a).hessian.scale(factorial(r - 2))


@dataclass(frozen=True)
class HodgeRiemannResult:
    holds: bool
    inertia: Inertia

    def __bool__(self) -> bool:
        return self.holds


def hodge_riemann_relation(F: Polynomial, a) -> HodgeRiemannResult:
    """With F(a) > 0 the relation holds iff the form has inertia (1, n-1, 0)."""
    value = F.evaluate(a)
    if value <= 0:
        raise ValueError(f"F(a) = {value} must be positive")
    inert = inertia(hodge_riemann_form(F, a))
    return HodgeRiemannResult(inert == Inertia(1, F.num_vars - 1, 0), inert)


def slp_degree_one(F: Polynomial, a) -> SLPReport:
    """Hessian criterion: SLP at degree one iff F(a) != 0 and det H(a) != 0.

    A nontrivial degree-one kernel (x_1..x_n dependent in the quotient) is
    reported through ``kernel_dim``; it forces det H == 0.
    """
    r = _degree(F, 2)
    coords = _coords(a, F.num_vars)
    data = hessian_and_gradient_at(F, coords)
    det = rational_determinant(data.hessian.rows)
    form = data.hessian.scale(factorial(r - 2))
    inert = inertia(form)
    kernel_dim = len(degree_one_kernel(F).dependency_kernel)
    hr = data.value > 0 and inert == Inertia(1, F.num_vars - 1, 0)
    return SLPReport(data.value, _sign(det), data.value != 0 and det != 0, inert, hr,
                     kernel_dim, det)


@dataclass(frozen=True)
class ElementarySymmetricSLP:
    n: int
    ell: int
    report: SLPReport
    identity_holds: bool  # d_1^ell e_n == ell! e_{n-ell}
    reversed_factor_identity_holds: bool  # e_{n-ell} == ell! d_1^ell e_n

    def __bool__(self) -> bool:
        return self.report.slp_holds and self.identity_holds


def elementary_symmetric_slp(n: int, ell: int, a=None) -> ElementarySymmetricSLP:
    if not 0 <= ell <= n - 2:
        raise ValueError(f"need 0 <= ell <= n - 2, got n={n}, ell={ell}")
    point = RationalPoint.ones(n) if a is None else a
    F = elementary_symmetric(n, n - ell)
    ident = elementary_symmetric_identity(n, ell)
    return ElementarySymmetricSLP(n, ell, slp_degree_one(F, point),
                                  ident.derivative_equals_factorial_multiple,
                                  ident.factorial_on_derivative_side)


class NotSimpleGraphError(ValueError):
    pass


def graph_slp_report(g: Graph, a) -> SLPReport:
    simp = graph_simplicity(g)
    if not simp.simple:
        raise NotSimpleGraphError(
            f"graph is not simple (loops {list(simp.loops)}, parallel {list(simp.parallel_pairs)})")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    coords = _coords(a, g.num_edges)
    if not all(c > 0 for c in coords):
        raise ValueError("all coordinates must be strictly positive")
    return slp_degree_one(kirchhoff_polynomial(g), coords)
