"""Golden data transcribed from the worked K4 example."""

from fractions import Fraction

from kirchhoff.poly import Polynomial

# K4 edge order is lexicographic: x1=12, x2=13, x3=14, x4=23, x5=24, x6=34.
K4_EDGE_NAMES = ["12", "13", "14", "23", "24", "34"]

K4_TERMS = [
    ("12", "13", "14"), ("12", "14", "23"), ("13", "14", "23"), ("12", "13", "24"),
    ("13", "14", "24"), ("12", "23", "24"), ("13", "23", "24"), ("14", "23", "24"),
    ("12", "13", "34"), ("12", "14", "34"), ("12", "23", "34"), ("13", "23", "34"),
    ("14", "23", "34"), ("12", "24", "34"), ("13", "24", "34"), ("14", "24", "34"),
]
K4_MINUS_23_TERMS = [
    ("12", "13", "14"), ("12", "13", "24"), ("13", "14", "24"), ("12", "13", "34"),
    ("12", "14", "34"), ("12", "24", "34"), ("13", "24", "34"), ("14", "24", "34"),
]


def from_named_terms(terms, names=K4_EDGE_NAMES) -> Polynomial:
    index = {name: k for k, name in enumerate(names)}
    out = {}
    for t in terms:
        e = [0] * len(names)
        for name in t:
            e[index[name]] += 1
        out[tuple(e)] = out.get(tuple(e), Fraction(0)) + 1
    return Polynomial(len(names), out)


def remark_polynomial() -> Polynomial:
    """x1x2 + x1x3 + 4x1x4 + x2x3 + x2x4 + x3x4."""
    coeffs = {(0, 1): 1, (0, 2): 1, (0, 3): 4, (1, 2): 1, (1, 3): 1, (2, 3): 1}
    return Polynomial(4, {
        tuple(1 if i in pair else 0 for i in range(4)): c for pair, c in coeffs.items()})
