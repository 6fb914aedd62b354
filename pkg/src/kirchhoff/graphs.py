"""Multigraphs, graphic matroids, spanning trees and basis generating functions.

Vertices are 1-based (as in the graph file format); edges and matroid elements
are 0-based indices, and edge k is the variable x_{k+1} of every polynomial
built from the graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .poly import Polynomial


class GraphFormatError(ValueError):
    pass


class DisconnectedGraphError(ValueError):
    pass


class LoopElementError(ValueError):
    pass


class ColoopElementError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: str

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def key(self) -> tuple[int, int]:
        return (min(self.u, self.v), max(self.u, self.v))


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[Edge, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.num_vertices < 1:
            raise GraphFormatError("a graph needs at least one vertex")
        for e in self.edges:
            for w in (e.u, e.v):
                if not 1 <= w <= self.num_vertices:
                    raise GraphFormatError(
                        f"vertex {w} out of range 1..{self.num_vertices} in edge {e.label}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.edges]

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def is_connected(self) -> bool:
        return _count_components(self.num_vertices, self.pairs()) == 1

    def delete_edges(self, indices: Iterable[int]) -> "Graph":
        drop = set(indices)
        kept = tuple(e for k, e in enumerate(self.edges) if k not in drop)
        return Graph(self.num_vertices, kept, "")

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        new = list(self.edges)
        for u, v in extra:
            new.append(Edge(u, v, _default_label(u, v, new)))
        return Graph(self.num_vertices, tuple(new), "")

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for k, e in enumerate(self.edges):
            if e.key() == key:
                return k
        raise KeyError(f"no edge {{{u},{v}}}")

    def to_text(self) -> str:
        lines = [f"p {self.num_vertices} {self.num_edges}"]
        lines += [f"e {e.u} {e.v} {e.label}" for e in self.edges]
        return "\n".join(lines) + "\n"


def _default_label(u: int, v: int, existing: Sequence[Edge]) -> str:
    base = f"{min(u, v)}{max(u, v)}" if max(u, v) < 10 else f"{min(u, v)}-{max(u, v)}"
    taken = {e.label for e in existing}
    if base not in taken:
        return base
    k = 2
    while f"{base}#{k}" in taken:
        k += 1
    return f"{base}#{k}"


def from_edges(num_vertices: int, pairs: Iterable[tuple[int, int]], name: str = "") -> Graph:
    edges: list[Edge] = []
    for u, v in pairs:
        edges.append(Edge(int(u), int(v), _default_label(int(u), int(v), edges)))
    return Graph(num_vertices, tuple(edges), name)


def complete_graph(m: int) -> Graph:
    """K_m with edges (i, j), i < j, in lexicographic order."""
    if m < 2:
        raise GraphFormatError("complete_graph needs at least 2 vertices")
    return from_edges(m, combinations(range(1, m + 1), 2), f"K{m}")


def path_graph(m: int) -> Graph:
    return from_edges(m, [(i, i + 1) for i in range(1, m)], f"P{m}")


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphFormatError("cycle_graph needs at least 3 vertices")
    return from_edges(m, [(i, i + 1) for i in range(1, m)] + [(1, m)], f"C{m}")


_BUILTIN_RE = re.compile(r"^([KPC])(\d+)((?:-\d+\.\d+)*)$")


def builtin_graph(name: str) -> Graph:
    """``K<m>``, ``P<m>``, ``C<m>``, optionally minus edges: ``K4-2.3``."""
    m = _BUILTIN_RE.match(name.strip())
    if not m:
        raise GraphFormatError(f"unknown builtin graph {name!r}")
    kind, size, removals = m.group(1), int(m.group(2)), m.group(3)
    g = {"K": complete_graph, "P": path_graph, "C": cycle_graph}[kind](size)
    drop = []
    for item in filter(None, removals.split("-")):
        u, v = (int(t) for t in item.split("."))
        try:
            drop.append(g.edge_index(u, v))
        except KeyError:
            raise GraphFormatError(f"{name}: no edge {{{u},{v}}} to delete") from None
    if drop:
        return Graph(g.num_vertices, g.delete_edges(drop).edges, name)
    return g


def parse_graph(text: str, name: str = "") -> Graph:
    """Read ``p <n> <m>`` followed by ``e <u> <v> [label]`` lines."""
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "p":
                if header is not None or len(tok) != 3:
                    raise GraphFormatError(f"line {lineno}: bad or repeated header")
                header = (int(tok[1]), int(tok[2]))
            elif tok[0] == "e":
                if header is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                if len(tok) not in (3, 4):
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v> [label]'")
                u, v = int(tok[1]), int(tok[2])
                if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                    raise GraphFormatError(f"line {lineno}: vertex out of range")
                label = tok[3] if len(tok) == 4 else _default_label(u, v, edges)
                edges.append(Edge(u, v, label))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {tok[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise GraphFormatError("missing 'p' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges), name)


def load_graph(source: str) -> Graph:
    """Builtin name or path to a graph file."""
    if _BUILTIN_RE.match(source.strip()):
        return builtin_graph(source)
    with open(source, encoding="utf-8") as fh:
        return parse_graph(fh.read(), name=source)


# -- spanning trees ------------------------------------------------------------

def _count_components(n: int, pairs: Sequence[tuple[int, int]]) -> int:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


@dataclass(frozen=True)
class SpanningTreeSet:
    trees: tuple[tuple[int, ...], ...]
    disconnected: bool = False

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)


def spanning_trees(g: Graph) -> SpanningTreeSet:
    """All spanning trees as sorted tuples of edge indices.

    Recursive deletion-contraction over the edge list; a branch is cut as soon
    as the chosen edges plus the undecided ones cannot connect the graph.
    """
    n = g.num_vertices
    pairs = [(e.u - 1, e.v - 1) for e in g.edges]
    if _count_components(n, [(u + 1, v + 1) for u, v in pairs]) != 1:
        return SpanningTreeSet((), disconnected=True)
    if n == 1:
        return SpanningTreeSet(((),))
    m = len(pairs)
    out: list[tuple[int, ...]] = []

    def spans(comp: list[int], start: int, ncomp: int) -> bool:
        # can edges[start:] merge the current components into one?
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        left = ncomp
        for u, v in pairs[start:]:
            ru, rv = find(comp[u]), find(comp[v])
            if ru != rv:
                parent[ru] = rv
                left -= 1
                if left == 1:
                    return True
        return left == 1

    def rec(k: int, comp: list[int], chosen: list[int], ncomp: int):
        if ncomp == 1:
            out.append(tuple(chosen))
            return
        if k == m or not spans(comp, k, ncomp):
            return
        u, v = pairs[k]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            merged = [cu if c == cv else c for c in comp]
            chosen.append(k)
            rec(k + 1, merged, chosen, ncomp - 1)
            chosen.pop()
        rec(k + 1, comp, chosen, ncomp)

    rec(0, list(range(n)), [], n)
    return SpanningTreeSet(tuple(sorted(out)))


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    loops: tuple[int, ...]
    parallel_pairs: tuple[tuple[int, int], ...]


def graph_simplicity(g: Graph) -> SimplicityReport:
    loops = tuple(k for k, e in enumerate(g.edges) if e.is_loop)
    parallel = []
    for a, b in combinations(range(g.num_edges), 2):
        ea, eb = g.edges[a], g.edges[b]
        if not ea.is_loop and ea.key() == eb.key():
            parallel.append((a, b))
    return SimplicityReport(not loops and not parallel, loops, tuple(parallel))


# -- matroids --------------------------------------------------------------------

@dataclass(frozen=True)
class Matroid:
    """Matroid on {0, ..., ground_size-1} given by its explicit basis family.

    Deletion keeps the ground set so variable indices stay aligned; the deleted
    element simply lies in no basis.
    """

    ground_size: int
    bases: frozenset[frozenset[int]]
    rank: int = field(init=False)

    def __post_init__(self):
        bases = frozenset(frozenset(b) for b in self.bases)
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {len(b) for b in bases}
        if len(sizes) != 1:
            raise ValueError(f"bases are not equicardinal: sizes {sorted(sizes)}")
        for b in bases:
            if any(not 0 <= x < self.ground_size for x in b):
                raise ValueError("basis element outside the ground set")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "rank", sizes.pop())

    @classmethod
    def from_bases(cls, ground_size: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        return cls(ground_size, frozenset(frozenset(b) for b in bases))

    def sorted_bases(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.bases)

    def loops(self) -> list[int]:
        used = set().union(*self.bases)
        return [e for e in range(self.ground_size) if e not in used]

    def coloops(self) -> list[int]:
        common = frozenset.intersection(*self.bases)
        return sorted(common)

    def is_loop(self, e: int) -> bool:
        return all(e not in b for b in self.bases)

    def is_coloop(self, e: int) -> bool:
        return all(e in b for b in self.bases)


def graphic_matroid(g: Graph) -> Matroid:
    trees = spanning_trees(g)
    if trees.disconnected:
        raise DisconnectedGraphError("graphic matroid of a disconnected graph has no bases here")
    return Matroid.from_bases(g.num_edges, trees.trees)


def uniform_matroid(rank: int, size: int) -> Matroid:
    return Matroid.from_bases(size, combinations(range(size), rank))


def validate_exchange(m: Matroid) -> bool:
    bases = m.bases
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                rest = b1 - {x}
                if not any((rest | {y}) in bases for y in b2 - b1):
                    return False
    return True


def matroid_simplicity(m: Matroid) -> SimplicityReport:
    loops = m.loops()
    live = [e for e in range(m.ground_size) if e not in loops]
    parallel = []
    for a, b in combinations(live, 2):
        if not any(a in B and b in B for B in m.bases):
            parallel.append((a, b))
    return SimplicityReport(not loops and not parallel, tuple(loops), tuple(parallel))


def simplicity_check(obj) -> SimplicityReport:
    if isinstance(obj, Graph):
        return graph_simplicity(obj)
    if isinstance(obj, Matroid):
        return matroid_simplicity(obj)
    raise TypeError("simplicity_check expects a Graph or a Matroid")


def delete_contract(m: Matroid, e: int) -> tuple[Matroid, Matroid]:
    """(deletion, contraction) at an element that is neither loop nor coloop."""
    if not 0 <= e < m.ground_size:
        raise IndexError(f"element {e} outside ground set")
    if m.is_loop(e):
        raise LoopElementError(f"element {e} is a loop")
    if m.is_coloop(e):
        raise ColoopElementError(f"element {e} is a coloop")
    deletion = Matroid.from_bases(m.ground_size, [b for b in m.bases if e not in b])
    contraction = Matroid.from_bases(m.ground_size, [b - {e} for b in m.bases if e in b])
    return deletion, contraction


def delete_elements(m: Matroid, elements: Iterable[int]) -> Matroid:
    """Submatroid without ``elements``; raises if the rank would drop."""
    drop = set(elements)
    kept = [b for b in m.bases if not (b & drop)]
    if not kept:
        raise ValueError("deleting these elements lowers the rank")
    return Matroid.from_bases(m.ground_size, kept)


def basis_generating_function(m: Matroid) -> Polynomial:
    terms = {}
    for b in m.bases:
        e = [0] * m.ground_size
        for i in b:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(m.ground_size, terms)


def fundamental_circuit(m: Matroid, e: int, basis: Iterable[int]) -> frozenset[int]:
    """The unique circuit inside B + e."""
    b = frozenset(basis)
    if b not in m.bases:
        raise ValueError("not a basis of the matroid")
    if e in b:
        raise ValueError(f"element {e} already lies in the basis")
    if m.is_loop(e):
        raise LoopElementError(f"element {e} is a loop")
    return frozenset({e} | {x for x in b if ((b - {x}) | {e}) in m.bases})
