"""Test corpora: isomorphism-free connected graphs, multigraphs, seeded points."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from .graphs import (
    Graph,
    Matroid,
    complete_graph,
    cycle_graph,
    from_edges,
    graphic_matroid,
    path_graph,
    uniform_matroid,
)
from .poly import RationalPoint


def _canonical_mask(m: int, edges: list[tuple[int, int]], edge_bit: dict, perms) -> int:
    best = None
    for p in perms:
        mask = 0
        for u, v in edges:
            a, b = p[u], p[v]
            mask |= edge_bit[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    return best


@lru_cache(maxsize=None)
def connected_edge_subset_graphs(m: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on m vertices.

    Generated by running over every edge subset of K_m and keeping the subset
    whose canonical bitmask (minimum over vertex permutations) is new.
    """
    all_edges = list(combinations(range(1, m + 1), 2))
    edge_bit = {e: 1 << k for k, e in enumerate(all_edges)}
    perms = [dict(zip(range(1, m + 1), p)) for p in permutations(range(1, m + 1))]
    seen = set()
    out = []
    for size in range(m - 1, len(all_edges) + 1):
        for subset in combinations(all_edges, size):
            g = from_edges(m, subset)
            if not g.is_connected():
                continue
            key = _canonical_mask(m, list(subset), edge_bit, perms)
            if key in seen:
                continue
            seen.add(key)
            out.append(Graph(m, g.edges, f"S{m}.{len(out)}"))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_simple_graphs(max_vertices: int, min_vertices: int = 3) -> tuple[Graph, ...]:
    """Connected simple graphs from the networkx graph atlas (up to 7 vertices)."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for idx, h in enumerate(graph_atlas_g()):
        n = h.number_of_nodes()
        if not (min_vertices <= n <= max_vertices) or not nx.is_connected(h):
            continue
        pairs = sorted((min(u, v) + 1, max(u, v) + 1) for u, v in h.edges())
        out.append(from_edges(n, pairs, f"G{idx}"))
    return tuple(out)


def multigraph_corpus() -> tuple[Graph, ...]:
    """Connected graphs with a loop or a parallel pair."""
    k3, k4, c4 = complete_graph(3), complete_graph(4), cycle_graph(4)
    items = [
        ("K3+12", k3.with_edges([(1, 2)])),
        ("K3+loop1", k3.with_edges([(1, 1)])),
        ("P3+loop2", path_graph(3).with_edges([(2, 2)])),
        ("C4+13+13", c4.with_edges([(1, 3), (1, 3)])),
        ("C4+loop3", c4.with_edges([(3, 3)])),
        ("K4+12", k4.with_edges([(1, 2)])),
        ("K4+loop4", k4.with_edges([(4, 4)])),
        ("P4+23", path_graph(4).with_edges([(2, 3)])),
        ("K4+34+loop1", k4.with_edges([(3, 4), (1, 1)])),
        ("C5+14+14", cycle_graph(5).with_edges([(1, 4), (1, 4)])),
    ]
    return tuple(Graph(g.num_vertices, g.edges, name) for name, g in items)


def matroid_corpus() -> list[tuple[str, Matroid]]:
    out = [(g.name, graphic_matroid(g)) for g in connected_simple_graphs(5, 3)]
    out += [(g.name, graphic_matroid(g)) for g in multigraph_corpus()]
    out += [(f"U{r},{n}", uniform_matroid(r, n)) for r, n in [(2, 4), (3, 5), (3, 6), (4, 6)]]
    return out


def random_rational(rng: random.Random, lo: int = 1, hi: int = 20, max_den: int = 7) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def positive_points(n: int, count: int, seed: int) -> list[RationalPoint]:
    """``count`` seeded points with all coordinates strictly positive; ones first."""
    rng = random.Random(seed)
    pts = [RationalPoint.ones(n)]
    while len(pts) < count:
        pts.append(RationalPoint(tuple(random_rational(rng) for _ in range(n))))
    return pts[:count]


def nonnegative_points(n: int, count: int, seed: int, zero_prob: float = 0.3) -> list[RationalPoint]:
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append(RationalPoint(tuple(
            Fraction(0) if rng.random() < zero_prob else random_rational(rng)
            for _ in range(n))))
    return pts


def cone_points(n: int, tree, count: int, seed: int) -> list[RationalPoint]:
    """Points of the cone {x_i > 0 on the tree, x_j >= 0 elsewhere}.

    The first point vanishes on every edge outside the tree; later points zero
    out a random part of the complement.
    """
    rng = random.Random(seed)
    tree = frozenset(tree)
    pts = []
    for k in range(count):
        coords = []
        for i in range(n):
            if i in tree:
                coords.append(random_rational(rng))
            elif k == 0 or rng.random() < 0.5:
                coords.append(Fraction(0))
            else:
                coords.append(random_rational(rng))
        pts.append(RationalPoint(tuple(coords), tree))
    return pts
