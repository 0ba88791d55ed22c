"""Orientations meeting the order/blocks bound and the block-graph bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from orientdia.decomposition import BlockDecomposition, branches_at, decompose, is_block_graph
from orientdia.errors import ContractViolation, InputError
from orientdia.families import blockgraph_bound, theorem1_bound
from orientdia.graph import INFINITE, Digraph, MultiGraph, bfs_adjacency, diameter, diametral_pair
from orientdia.orient.basic import (
    apply_arcs,
    complete_orientation,
    orient_by_tournament,
    require_bridgeless,
    robbins_orientation,
)
from orientdia.orient.lemma import lemma1_orientation
from orientdia.orient.tree_extension import ExtPath, TreeExtension, tree_extension_orientation


@dataclass
class OrientationReport:
    strategy: str
    diameter: int
    bound: int
    bound_name: str
    witness_pair: tuple[int, int] | None
    case_trace: list[dict[str, Any]] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return self.diameter <= self.bound

    def to_json(self) -> dict[str, Any]:
        return {
            "strategy": self.strategy,
            "diameter": self.diameter,
            "bound": self.bound,
            "bound_name": self.bound_name,
            "satisfied": self.satisfied,
            "witness_pair": list(self.witness_pair) if self.witness_pair else None,
            "case_trace": self.case_trace,
        }


def _report(strategy: str, d: Digraph, bound: int, bound_name: str, trace: list[dict[str, Any]]) -> OrientationReport:
    diam = diameter(d)
    if diam is INFINITE:
        raise ContractViolation(f"{strategy} produced an orientation that is not strongly connected")
    return OrientationReport(strategy, diam, bound, bound_name, diametral_pair(d), trace)  # type: ignore[arg-type]


def robbins_report(g: MultiGraph) -> tuple[Digraph, OrientationReport]:
    """DFS orientation reported against the trivial bound ``n - 1``."""
    d = robbins_orientation(g)
    return d, _report("robbins", d, max(g.vertex_count - 1, 0), "trivial", [{"depth": 0, "case": "robbins"}])


# -- order and number of blocks ---------------------------------------------


def _first_pair_of_two_cut_blocks(dec: BlockDecomposition) -> tuple[int, int, int, int, int] | None:
    """``(A, B, x, y, z)``: blocks with exactly two cut vertices sharing ``y``."""
    owners = dec.blocks_of_vertex
    cuts = [dec.cuts_in(b) for b in range(dec.p)]
    for a in range(dec.p):
        if len(cuts[a]) != 2:
            continue
        for y in cuts[a]:
            for b in owners[y]:
                if b != a and len(cuts[b]) == 2:
                    x = next(c for c in cuts[a] if c != y)
                    z = next(c for c in cuts[b] if c != y)
                    return a, b, x, y, z
    return None


def _identify(g: MultiGraph, merged: set[int], keep_edges: list[int]) -> tuple[MultiGraph, int]:
    """Contract ``merged`` to one new vertex; keep only ``keep_edges`` (in order)."""
    rest = [v for v in range(g.vertex_count) if v not in merged]
    new_id = {v: i for i, v in enumerate(rest)}
    hub = len(rest)
    for v in merged:
        new_id[v] = hub
    edges = []
    for e in keep_edges:
        u, v = g.edges[e]
        if new_id[u] == new_id[v]:
            raise ContractViolation(f"identification turned edge {e} into a loop")
        edges.append((new_id[u], new_id[v]))
    distinct_before = {(min(g.edges[e]), max(g.edges[e])) for e in keep_edges}
    distinct_after = {(min(p), max(p)) for p in edges}
    if len(distinct_before) != len(distinct_after):
        raise ContractViolation("identification created parallel edges")
    return MultiGraph(hub + 1, tuple(edges)), hub


def _theorem1_flags(g: MultiGraph, trace: list[dict[str, Any]], depth: int) -> list[bool]:
    dec = decompose(g)
    n, p = g.vertex_count, dec.p
    step: dict[str, Any] = {"depth": depth, "n": n, "p": p}
    trace.append(step)

    if p <= 3:
        step["case"] = "base"
        flags = robbins_orientation(g).flags_against(g)
    else:
        owners = dec.blocks_of_vertex
        busy = [v for v in dec.cut_vertices if len(owners[v]) > 2]
        pair = None if busy else _first_pair_of_two_cut_blocks(dec)
        if busy:
            v = busy[0]
            step.update(case="case1", cut_vertex=v)
            branches = sorted(branches_at(g, v), key=lambda br: -br.graph.vertex_count)
            q3_vertices = {u for br in branches[2:] for u in br.vertex_map}
            q3 = g.induced_subgraph(q3_vertices)
            flags = [False] * g.m
            for sub, _, emap in [(b.graph, b.vertex_map, b.edge_map) for b in branches[:2]] + [q3]:
                sub_flags = _theorem1_flags(sub, trace, depth + 1)
                for local, e in enumerate(emap):
                    flags[e] = sub_flags[local]
        elif pair is not None:
            a, b, x, y, z = pair
            step.update(case="case2", blocks=[a, b], x=x, y=y, z=z)
            inner = set(dec.block_edges[a]) | set(dec.block_edges[b])
            merged = set(dec.blocks[a]) | set(dec.blocks[b])
            keep = [e for e in range(g.m) if e not in inner]
            contracted, _ = _identify(g, merged, keep)
            sub_flags = _theorem1_flags(contracted, trace, depth + 1)
            flags = [False] * g.m
            for local, e in enumerate(keep):
                flags[e] = sub_flags[local]
            ab, vmap, emap = g.edge_subgraph(inner)
            local_flags = lemma1_orientation(ab, vmap.index(x), vmap.index(z)).flags_against(ab)
            for local, e in enumerate(emap):
                flags[e] = local_flags[local]
        else:
            step["case"] = "case3"
            flags = robbins_orientation(g).flags_against(g)

    d = Digraph.from_flags(g, flags)
    diam = diameter(d)
    step["diameter"] = diam
    if diam is INFINITE or diam > theorem1_bound(n, p):
        raise ContractViolation(f"level {depth} ({step['case']}): diameter {diam} exceeds n - floor(p/2) = {theorem1_bound(n, p)}")
    return flags


def theorem1_orientation(g: MultiGraph) -> tuple[Digraph, OrientationReport]:
    """Strong orientation of diameter at most ``n - floor(p/2)``.

    Recursion on the number of blocks ``p``:

    * ``p <= 3`` or no special structure: any strong orientation works.
    * a cut vertex in three or more blocks: orient the two largest branches
      at it and the union of the rest independently, then take the union.
    * two blocks with exactly two cut vertices each, sharing one: contract
      both to a single vertex, recurse, lift the arcs back, and orient the
      two blocks so their outer cut vertices are close in both directions.

    Every level's diameter is verified against its own bound.
    """
    require_bridgeless(g)
    trace: list[dict[str, Any]] = []
    flags = _theorem1_flags(g, trace, 0)
    d = Digraph.from_flags(g, flags)
    dec = decompose(g)
    return d, _report("theorem1", d, theorem1_bound(g.vertex_count, dec.p), "theorem1", trace)


# -- block graphs -------------------------------------------------------------


def _edge_between(g: MultiGraph, u: int, v: int) -> int:
    return min(e for w, e in g.adjacency[u] if w == v)


def _spanning_tree(g: MultiGraph, vertices: list[int]) -> list[int]:
    """BFS spanning tree (edge ids) of ``g[vertices]`` from its smallest vertex."""
    inside = set(vertices)
    root = min(vertices)
    seen = {root}
    queue = [root]
    tree = []
    for x in queue:
        for w, e in g.adjacency[x]:
            if w in inside and w not in seen:
                seen.add(w)
                tree.append(e)
                queue.append(w)
    if seen != inside:
        raise ContractViolation("the cut vertices do not induce a connected subgraph")
    return tree


def _min_dist_to_set(out: list[list[int]], v: int, targets: set[int]) -> int:
    row = bfs_adjacency(out, v)
    return min(row[t] for t in targets)  # type: ignore[type-var, return-value]


def blockgraph_orientation(g: MultiGraph, seed: int = 0) -> tuple[Digraph, OrientationReport]:
    """Strong orientation of a bridgeless block graph with diameter at most
    ``floor(3n/4)`` (n even) or ``floor(3(n+1)/4)`` (n odd).

    The cut vertices carry a spanning tree ``T`` of the subgraph they induce.
    Each block with two cut vertices contributes a path of length 2 through
    one of its internal vertices, each block with more contributes the
    edges between its cut vertices that ``T`` does not use. ``T`` plus those
    paths is oriented by :func:`tree_extension_orientation` with ``k = 2``;
    end blocks get a tournament in which their cut vertex has eccentricity
    2, and every other uncovered vertex ``v`` of a block is wired
    ``u -> v -> w`` between two of the block's cut vertices.
    """
    require_bridgeless(g)
    if not is_block_graph(g):
        raise InputError("blockgraph strategy needs a graph whose blocks are all complete")
    n = g.vertex_count
    bound = blockgraph_bound(n)
    dec = decompose(g)
    trace: list[dict[str, Any]] = [{"depth": 0, "n": n, "p": dec.p, "s": dec.s}]

    if dec.s == 0:
        trace[0]["case"] = "complete"
        arcs = orient_by_tournament(g, list(range(g.m)), list(range(n)), complete_orientation(n, seed=seed))
        d = apply_arcs(g, arcs)
        return d, _check_blockgraph(d, bound, trace)

    cuts = list(dec.cut_vertices)
    tree_edges = _spanning_tree(g, cuts)
    tree_pairs = {frozenset(g.edges[e]) for e in tree_edges}
    paths: list[ExtPath] = []
    for b in range(dec.p):
        bc = dec.cuts_in(b)
        if len(bc) == 2:
            u, v = bc
            w = dec.internal_vertices(b)[0]
            paths.append(ExtPath((u, w, v), (_edge_between(g, u, w), _edge_between(g, w, v))))
        elif len(bc) > 2:
            for i, u in enumerate(bc):
                for v in bc[i + 1:]:
                    if frozenset((u, v)) not in tree_pairs:
                        paths.append(ExtPath((u, v), (_edge_between(g, u, v),)))
    ext = TreeExtension(g, frozenset(cuts), tuple(tree_edges), tuple(paths), 2)
    core = tree_extension_orientation(ext, seed=seed)
    trace[0].update(case="tree-extension", tree_edges=len(tree_edges), paths=len(paths),
                    kept_vertices=len(core.vertices), tree_pair_max=core.tree_pair_max,
                    all_pair_max=core.all_pair_max)

    arcs = dict(core.arcs)
    for b in range(dec.p):
        bc = dec.cuts_in(b)
        verts = list(dec.blocks[b])
        if len(bc) == 1:
            special = verts.index(bc[0])
            tour = complete_orientation(len(verts), special=special, seed=seed)
            arcs.update(orient_by_tournament(g, list(dec.block_edges[b]), verts, tour))
            continue
        u, w = bc[0], bc[1]
        for v in verts:
            if v in core.vertices:
                continue
            for tail, head in ((u, v), (v, w)):
                e = _edge_between(g, tail, head)
                arcs.setdefault(e, (tail, head))
    for e, (a, c) in enumerate(g.edges):
        arcs.setdefault(e, (a, c))
    d = apply_arcs(g, arcs)

    # every vertex outside the oriented core is within 2 of the tree, both ways
    out = [list(a) for a in d.out_adjacency]
    inn = [list(a) for a in d.in_adjacency]
    tree = set(cuts)
    for v in range(n):
        if v in core.vertices:
            continue
        if _min_dist_to_set(out, v, tree) > 2 or _min_dist_to_set(inn, v, tree) > 2:
            raise ContractViolation(f"vertex {v} is farther than 2 from the tree")
    return d, _check_blockgraph(d, bound, trace)


def _check_blockgraph(d: Digraph, bound: int, trace: list[dict[str, Any]]) -> OrientationReport:
    report = _report("blockgraph", d, bound, "blockgraph", trace)
    if not report.satisfied:
        raise ContractViolation(f"block-graph orientation has diameter {report.diameter} > {bound}")
    return report
