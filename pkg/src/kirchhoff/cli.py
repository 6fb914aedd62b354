"""Command-line front end.

Exit codes: 0 every verdict positive, 1 some verdict negative, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any

from . import corpus
from .graphs import Graph, GraphFormatError, load_graph, parse_graph, spanning_trees
from .hessian import (
    DEFAULT_TRIALS,
    MODES,
    cayley_check,
    check_log_concavity,
    complete_graph_hessian_identity,
    euler_check,
    hessian_and_gradient_at,
    hessian_at_ones_report,
    identity1_check,
)
from .inertia import inertia
from .lefschetz import graph_slp_report, hodge_riemann_relation, slp_degree_one
from .matrixtree import kirchhoff_polynomial, rational_determinant
from .poly import Polynomial, RationalPoint, as_rational, parse_polynomial
from .report import SCHEMA_VERSION, jsonable

class InputError(Exception):
    pass


def parse_point(text: str, cone_tag=None) -> RationalPoint:
    """Comma-separated exact rationals such as ``3/7,2,5/2``."""
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in tokens):
        raise InputError(f"malformed point {text!r}")
    try:
        coords = tuple(as_rational(t) for t in tokens)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    return RationalPoint(coords, cone_tag)


def classify_point(p: RationalPoint) -> str:
    if p.is_positive():
        return "positive"
    if p.is_nonnegative():
        return "nonnegative"
    return "mixed"


@dataclass
class Outcome:
    results: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    text: list = field(default_factory=list)

    def add(self, result: dict, verdict: bool | None, *lines: str):
        self.results.append(result)
        if verdict is not None:
            self.verdicts.append(bool(verdict))
        self.text.extend(lines)

    @property
    def verdict(self) -> bool:
        return all(self.verdicts)


# -- input resolution -------------------------------------------------------------

def _graph(args) -> Graph:
    source = args.graph_pos or args.graph
    try:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                return parse_graph(fh.read(), name=args.file)
        if source:
            return load_graph(source)
    except (OSError, GraphFormatError) as exc:
        raise InputError(str(exc)) from None
    raise InputError("a graph is required (positional name, --graph or --file)")


def _target(args) -> tuple[Polynomial, Graph | None]:
    if getattr(args, "poly", None):
        try:
            return parse_polynomial(args.poly, args.num_vars), None
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc)) from None
    g = _graph(args)
    return kirchhoff_polynomial(g, route="enumeration"), g


def _point(args, n: int) -> RationalPoint:
    if not args.point:
        return RationalPoint.ones(n)
    p = parse_point(args.point)
    if len(p) != n:
        raise InputError(f"point has {len(p)} coordinates, expected {n}")
    return p


def _graph_params(g: Graph | None, F: Polynomial) -> dict:
    if g is None:
        return {"polynomial": F.to_text(), "num_vars": F.num_vars}
    return {"graph": g.name or "<anonymous>", "vertices": g.num_vertices,
            "edges": [f"{e.u}-{e.v}:{e.label}" for e in g.edges]}


# -- commands ---------------------------------------------------------------------

def cmd_kirchhoff(args, out: Outcome) -> dict:
    g = _graph(args)
    trees = spanning_trees(g)
    via_det = kirchhoff_polynomial(g, "matrix_tree")
    via_enum = kirchhoff_polynomial(g, "enumeration")
    match = via_det == via_enum
    out.add({"route": "matrix_tree", "polynomial": via_det.to_text(), "terms": len(via_det)}, None)
    out.add({"route": "enumeration", "polynomial": via_enum.to_text(), "terms": len(via_enum)}, None)
    out.add({"match": match, "spanning_trees": len(trees), "disconnected": trees.disconnected},
            match,
            f"graph {g.name or '<file>'}: {g.num_vertices} vertices, {g.num_edges} edges",
            "variables: " + ", ".join(f"x{k + 1}={e.label}" for k, e in enumerate(g.edges)),
            f"matrix_tree: {via_det.to_text()}",
            f"enumeration: {via_enum.to_text()}",
            f"terms: {len(via_enum)}  spanning trees: {len(trees)}  match: {str(match).lower()}")
    if trees.disconnected:
        out.text.append("warning: graph is disconnected, Kirchhoff polynomial is zero")
    return _graph_params(g, via_enum)


def cmd_trees(args, out: Outcome) -> dict:
    g = _graph(args)
    trees = spanning_trees(g)
    res: dict[str, Any] = {"count": len(trees), "disconnected": trees.disconnected}
    lines = [f"spanning trees: {len(trees)}"]
    if args.list:
        labels = g.labels
        res["trees"] = [[labels[k] for k in t] for t in trees]
        lines += [" ".join(labels[k] for k in t) for t in trees]
    out.add(res, not trees.disconnected, *lines)
    return {"graph": g.name or "<file>"}


def cmd_logconcavity(args, out: Outcome) -> dict:
    F, g = _target(args)
    a = _point(args, F.num_vars)
    try:
        v = check_log_concavity(F, a, args.mode, args.s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    out.add(v.to_dict(), v.verdict,
            f"mode {v.mode}, s = {v.s_parameter}{' (quantified)' if v.quantified else ''}",
            f"F(a) = {v.value}, inertia of M = {v.inertia.as_list() if v.inertia else None}",
            f"certificate: {str(v.verdict).lower()}" + (f" ({v.reason})" if v.reason else ""),
            *([f"witness: ({', '.join(str(x) for x in v.witness)})"] if v.witness else []))
    params = _graph_params(g, F)
    params.update(point=[str(x) for x in a], point_class=classify_point(a), mode=args.mode,
                  s=args.s)
    return params


def cmd_hessian_identity(args, out: Outcome) -> dict:
    try:
        rep = complete_graph_hessian_identity(args.r, args.mode, args.trials, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    d = rep.details
    lines = [f"r = {args.r}, N = {rep.params['N']}, mode {args.mode}",
             f"det H = {d['constant']} * F^{d['exponent']}: {'pass' if rep.verdict else 'FAIL'}"]
    if "identity_test" in d:
        t = d["identity_test"]
        lines.append(f"{t['trials']} trials, seed {t['seed']}, degree {t['degree_bound']}, "
                     f"failure bound 2^{t['failure_bound_log2']}")
    out.add(rep.to_dict(), rep.verdict, *lines)
    if args.r <= 5:
        ones = hessian_at_ones_report(args.r)
        od = ones.details
        out.add(ones.to_dict(), ones.verdict,
                f"det H at ones = {od['value']} (second closed form {od['second_form']}, "
                f"first closed form {od['first_form']})",
                *[f"note: {n}" for n in ones.notes])
    return {"r": args.r, "mode": args.mode}


def _slp_lines(rep) -> list[str]:
    return [f"F(a) = {rep.f_value}, det H sign {rep.hessian_det_sign}, "
            f"degree-one kernel dim {rep.kernel_dim}",
            f"slp = {str(rep.slp_holds).lower()}, inertia = {rep.hr_inertia.as_list()}, "
            f"hr = {str(rep.hr_relation_holds).lower()}"]


def cmd_slp(args, out: Outcome) -> dict:
    F, g = _target(args)
    a = _point(args, F.num_vars)
    try:
        rep = graph_slp_report(g, a) if g is not None else slp_degree_one(F, a)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.add(rep.to_dict(), rep.slp_holds, *_slp_lines(rep))
    params = _graph_params(g, F)
    params["point"] = [str(x) for x in a]
    return params


def cmd_hodge_riemann(args, out: Outcome) -> dict:
    F, g = _target(args)
    a = _point(args, F.num_vars)
    try:
        res = hodge_riemann_relation(F, a)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.add({"hr": res.holds, "inertia": res.inertia.as_list()}, res.holds,
            f"Hodge-Riemann form inertia {res.inertia.as_list()}: "
            f"{'holds' if res.holds else 'fails'}")
    params = _graph_params(g, F)
    params["point"] = [str(x) for x in a]
    return params


def cmd_euler(args, out: Outcome) -> dict:
    F, g = _target(args)
    try:
        res = euler_check(F)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.add({"holds": res.holds, "residual": None if res.residual is None else res.residual.to_text(),
             "where": res.which}, res.holds,
            f"Euler identities: {'hold' if res.holds else 'fail at ' + res.which}")
    return _graph_params(g, F)


def cmd_identity1(args, out: Outcome) -> dict:
    F, g = _target(args)
    try:
        rep = identity1_check(F, args.trials, args.seed, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.add(rep.to_dict(), rep.verdict,
            f"det(-F H + s g g^T) identity ({rep.mode}): {'pass' if rep.verdict else 'FAIL'}")
    return _graph_params(g, F)


def cmd_cayley(args, out: Outcome) -> dict:
    try:
        ok = cayley_check(args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    expected = (args.r + 1) ** (args.r - 1)
    out.add({"r": args.r, "expected": expected, "holds": ok}, ok,
            f"K{args.r + 1}: (r+1)^(r-1) = {expected} spanning trees: {'pass' if ok else 'FAIL'}")
    return {"r": args.r}


def cmd_sweep(args, out: Outcome) -> dict:
    """Signature, strict log-concavity and SLP over the simple corpus; degeneracy on multigraphs."""
    graphs = corpus.connected_simple_graphs(args.max_vertices, 3)
    for g in graphs:
        F = kirchhoff_polynomial(g, route="enumeration")
        n = g.num_edges
        r = g.num_vertices - 1
        for k, a in enumerate(corpus.positive_points(n, args.points, args.seed)):
            data = hessian_and_gradient_at(F, a)
            inert = inertia(data.hessian)
            sig_ok = inert.as_list() == [1, n - 1, 0]
            entry = {"graph": g.name, "edges": n, "point": k, "inertia": inert.as_list(),
                     "signature": sig_ok}
            ok = sig_ok
            if r >= 3:
                lc = check_log_concavity(F, a, "strict_homogeneous")
                entry["strict_homogeneous"] = lc.verdict
                ok = ok and lc.verdict
            slp = slp_degree_one(F, a)
            entry["slp"] = slp.slp_holds
            entry["hr"] = slp.hr_relation_holds
            ok = ok and slp.slp_holds and slp.hr_relation_holds
            out.add(entry, ok)
            if not ok:
                out.text.append(f"FAIL {g.name} point {k}: {entry}")
    for g in corpus.multigraph_corpus():
        F = kirchhoff_polynomial(g, route="enumeration")
        a = RationalPoint.ones(g.num_edges)
        det = rational_determinant(hessian_and_gradient_at(F, a).hessian.rows)
        strict = check_log_concavity(F, a, "strict")
        ok = det == 0 and not strict.verdict
        out.add({"graph": g.name, "det_hessian_at_ones": str(det), "strict": strict.verdict,
                 "degenerate": ok}, ok)
        if not ok:
            out.text.append(f"FAIL degeneracy {g.name}")
    passed = sum(out.verdicts)
    out.text.insert(0, f"{passed}/{len(out.verdicts)} checks passed "
                       f"({len(graphs)} simple graphs, {args.points} points each, "
                       f"{len(corpus.multigraph_corpus())} multigraphs)")
    return {"max_vertices": args.max_vertices, "points": args.points}


COMMANDS = {
    "kirchhoff": cmd_kirchhoff,
    "trees": cmd_trees,
    "logconcavity": cmd_logconcavity,
    "hessian-identity": cmd_hessian_identity,
    "slp": cmd_slp,
    "hodge-riemann": cmd_hodge_riemann,
    "euler": cmd_euler,
    "identity1": cmd_identity1,
    "cayley": cmd_cayley,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--format", choices=("text", "json"), default="text")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph_pos", nargs="?", metavar="GRAPH",
                          help="builtin name (K4, C5, P3, K4-2.3) or graph file")
    graph_in.add_argument("--graph", help="builtin graph name or graph file")
    graph_in.add_argument("--file", help="graph file ('p n m' / 'e u v [label]')")

    poly_in = argparse.ArgumentParser(add_help=False)
    poly_in.add_argument("--poly", help="polynomial in canonical text form")
    poly_in.add_argument("--num-vars", type=int, default=None)

    point_in = argparse.ArgumentParser(add_help=False)
    point_in.add_argument("--point", help="comma-separated rationals, default all ones")

    parser = argparse.ArgumentParser(prog="kirchhoff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("kirchhoff", parents=[common, graph_in], help="Kirchhoff polynomial, both routes")
    p = sub.add_parser("trees", parents=[common, graph_in], help="count spanning trees")
    p.add_argument("--list", action="store_true")
    p = sub.add_parser("logconcavity", parents=[common, graph_in, poly_in, point_in],
                       help="log-concavity certificate at a point")
    p.add_argument("--mode", choices=MODES, default="strict_homogeneous")
    p.add_argument("--s", default=None, help="fixed rational s instead of the quantified claim")
    p = sub.add_parser("hessian-identity", parents=[common],
                       help="complete-graph Hessian determinant identity")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("symbolic", "evaluation"), default="evaluation")
    sub.add_parser("slp", parents=[common, graph_in, poly_in, point_in],
                   help="strong Lefschetz property at degree one")
    sub.add_parser("hodge-riemann", parents=[common, graph_in, poly_in, point_in],
                   help="Hodge-Riemann relation at degree one")
    sub.add_parser("euler", parents=[common, graph_in, poly_in], help="Euler identities")
    p = sub.add_parser("identity1", parents=[common, graph_in, poly_in],
                       help="determinant identity for -F H + s g g^T")
    p.add_argument("--mode", choices=("symbolic", "evaluation"), default=None)
    p = sub.add_parser("cayley", parents=[common], help="Cayley's formula for K_{r+1}")
    p.add_argument("--r", type=int, required=True)
    p = sub.add_parser("sweep", parents=[common], help="corpus property sweep")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--points", type=int, default=5)
    return parser


def render(command: str, params: dict, args, out: Outcome) -> str:
    if args.format == "json":
        doc = {"schema": SCHEMA_VERSION, "command": command, "params": jsonable(params),
               "seed": args.seed, "trials": args.trials, "results": jsonable(out.results),
               "verdict": out.verdict}
        return json.dumps(doc, indent=2)
    lines = [f"# {command}  seed={args.seed} trials={args.trials}"] + out.text
    lines.append(f"verdict: {'PASS' if out.verdict else 'FAIL'}")
    return "\n".join(lines)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.trials < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return 2
    if getattr(args, "s", None) is not None:
        try:
            args.s = str(as_rational(args.s))
        except (ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    out = Outcome()
    try:
        params = COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(args.command, params, args, out))
    return 0 if out.verdict else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
