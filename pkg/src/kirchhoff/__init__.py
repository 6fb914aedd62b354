"""Exact Kirchhoff polynomials, matroid basis generating functions and
log-concavity / Lefschetz certificates."""

from .graphs import (
    Graph,
    Matroid,
    basis_generating_function,
    builtin_graph,
    complete_graph,
    delete_contract,
    from_edges,
    fundamental_circuit,
    graphic_matroid,
    parse_graph,
    simplicity_check,
    spanning_trees,
    validate_exchange,
)
from .hessian import (
    check_log_concavity,
    complete_graph_hessian_identity,
    euler_check,
    hessian_and_gradient_at,
    identity1_check,
    log_concavity_matrix,
    polynomial_identity_test,
    rank_one_det_check,
)
from .inertia import Inertia, SymmetricRationalMatrix, inertia
from .lefschetz import (
    degree_one_kernel,
    elementary_symmetric_slp,
    graph_slp_report,
    hodge_riemann_form,
    hodge_riemann_relation,
    slp_degree_one,
)
from .matrixtree import (
    cofactor,
    fraction_free_determinant,
    kirchhoff_polynomial,
    laplacian,
)
from .poly import Polynomial, RationalPoint, elementary_symmetric, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Inertia",
    "Matroid",
    "Polynomial",
    "RationalPoint",
    "SymmetricRationalMatrix",
    "basis_generating_function",
    "builtin_graph",
    "check_log_concavity",
    "cofactor",
    "complete_graph",
    "complete_graph_hessian_identity",
    "degree_one_kernel",
    "delete_contract",
    "elementary_symmetric",
    "elementary_symmetric_slp",
    "euler_check",
    "fraction_free_determinant",
    "from_edges",
    "fundamental_circuit",
    "graph_slp_report",
    "graphic_matroid",
    "hessian_and_gradient_at",
    "hodge_riemann_form",
    "hodge_riemann_relation",
    "identity1_check",
    "inertia",
    "kirchhoff_polynomial",
    "laplacian",
    "log_concavity_matrix",
    "parse_graph",
    "parse_polynomial",
    "polynomial_identity_test",
    "rank_one_det_check",
    "simplicity_check",
    "slp_degree_one",
    "spanning_trees",
    "validate_exchange",
]
