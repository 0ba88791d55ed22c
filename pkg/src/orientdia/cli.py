"""Command-line interface: ``orientdia <command> ...``.

Exit codes: 0 success, 1 input error, 2 infeasible structure (a bridge, or
an orientation that fails verification), 3 internal contract violation.
JSON goes to stdout as one key-sorted object per run.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from orientdia.decomposition import decompose
from orientdia.errors import ContractViolation, InfeasibleError, InputError
from orientdia.exact import oriented_diameter
from orientdia.families import (
    bound_value,
    bounds,
    gen_block_extremal_with_orientation,
    gen_gnp_extremal,
    gen_random_block_graph,
    gen_random_bridgeless,
)
from orientdia.graph import INFINITE, Digraph, MultiGraph, diameter, diametral_pair, is_strongly_connected
from orientdia.io import dumps, format_digraph, format_graph, read_digraph, read_graph, to_dot
from orientdia.orient import blockgraph_orientation, robbins_report, theorem1_orientation

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_CONTRACT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; that code means "infeasible" here
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_decompose(args: argparse.Namespace) -> int:
    _emit(decompose(read_graph(args.graph)).to_json())
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.graph is not None:
        if any(v is not None for v in (args.n, args.p, args.s)):
            raise InputError("give either a graph file or --n/--p/--s, not both")
        dec = decompose(read_graph(args.graph))
        n, p, s = dec.n, dec.p, dec.s
    else:
        if args.n is None or args.p is None or args.s is None:
            raise InputError("bounds needs a graph file or all of --n, --p, --s")
        n, p, s = args.n, args.p, args.s
    _emit(bounds(n, p, s).to_json())
    return EXIT_OK


def cmd_orient(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.strategy == "theorem1":
        d, report = theorem1_orientation(g)
    elif args.strategy == "blockgraph":
        d, report = blockgraph_orientation(g, seed=args.seed)
    else:
        d, report = robbins_report(g)
    if args.out:
        _write(args.out, format_digraph(d))
    if args.dot:
        _write(args.dot, to_dot(d))
    _emit(report.to_json())
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    kwargs: dict[str, Any] = {}
    if args.method == "brute":
        kwargs["edge_budget"] = args.edge_budget
        kwargs["workers"] = args.workers
    cert = oriented_diameter(g, method=args.method, **kwargs)
    if args.out:
        _write(args.out, format_digraph(cert.witness))
    _emit(cert.to_json())
    return EXIT_OK


def _generate(args: argparse.Namespace) -> tuple[MultiGraph, Digraph | None, str]:
    if args.n is None:
        raise InputError("--n is required")
    fam = args.family
    if fam == "gnp":
        if args.p is None:
            raise InputError("--family gnp needs --p")
        g, d = gen_gnp_extremal(args.n, args.p)
        return g, d, f"G(n={args.n}, p={args.p}) extremal chain"
    if fam == "block":
        g, d = gen_block_extremal_with_orientation(args.n)
        return g, d, f"G'(n={args.n}) extremal block graph"
    if fam == "random-bridgeless":
        if args.p is None:
            raise InputError("--family random-bridgeless needs --p")
        return gen_random_bridgeless(args.n, args.p, args.seed), None, f"random bridgeless n={args.n} p={args.p} seed={args.seed}"
    return gen_random_block_graph(args.n, args.seed), None, f"random block graph n={args.n} seed={args.seed}"


def cmd_generate(args: argparse.Namespace) -> int:
    g, d, label = _generate(args)
    if args.emit_orientation:
        if d is None:
            raise InputError(f"--family {args.family} has no canonical orientation")
        _write(args.emit_orientation, format_digraph(d, comment=f"canonical orientation of {label}"))
    _write(args.out, format_graph(g, comment=label))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    d = read_digraph(args.arcs)
    if d.vertex_count != g.vertex_count or not d.is_orientation_of(g):
        raise InputError("arc file is not an orientation of the graph file")
    strong = is_strongly_connected(d)
    diam = diameter(d)
    report: dict[str, Any] = {
        "strong": strong,
        "diameter": None if diam is INFINITE else diam,
        "witness_pair": list(pair) if (pair := diametral_pair(d)) else None,
    }
    ok = strong
    if args.bound:
        dec = decompose(g)
        bound = bound_value(args.bound, dec.n, dec.p, dec.s)
        within = strong and diam <= bound  # type: ignore[operator]
        report.update(bound=bound, bound_name=args.bound, within_bound=within)
        ok = within
    _emit(report)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orientdia", description="Oriented diameter of bridgeless graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="blocks, cut vertices and bridges as JSON")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bounds", help="closed-form upper bounds from (n, p, s) or a graph")
    p.add_argument("graph", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("orient", help="construct a strong orientation and report its diameter")
    p.add_argument("graph")
    p.add_argument("--strategy", choices=["robbins", "theorem1", "blockgraph"], default="theorem1")
    p.add_argument("--out", help="write the arcs to this file ('-' for stdout)")
    p.add_argument("--dot", help="write a DOT rendering to this file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("exact", help="exact oriented diameter with a witness")
    p.add_argument("graph")
    p.add_argument("--method", choices=["auto", "brute", "decomposed"], default="auto")
    p.add_argument("--edge-budget", type=int, default=22)
    p.add_argument("--workers", type=int, help="defaults to ORIENTDIA_THREADS or the CPU count")
    p.add_argument("--out", help="write the witness arcs to this file")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("generate", help="write a family member as an edge list")
    p.add_argument("--family", choices=["gnp", "block", "random-bridgeless", "random-block"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.add_argument("--emit-orientation", metavar="PATH", help="also write the canonical orientation")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check an arc file against a graph and a named bound")
    p.add_argument("graph")
    p.add_argument("arcs")
    p.add_argument("--bound", choices=["theorem1", "corollary", "blockgraph", "trivial"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args))
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
