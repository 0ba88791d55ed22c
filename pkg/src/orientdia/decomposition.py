"""Blocks, cut vertices, bridges, branches and the block graph.

Blocks come from an iterative articulation-point DFS over edge ids, so
parallel edges are handled (two parallel edges form a 2-vertex block that
is not a bridge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from orientdia.errors import InputError
from orientdia.graph import MultiGraph


@dataclass(frozen=True)
class BlockDecomposition:
    graph: MultiGraph = field(repr=False)
    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[int, ...], ...]
    block_of_edge: tuple[int, ...]
    cut_vertices: tuple[int, ...]
    bridges: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def p(self) -> int:
        return len(self.blocks)

    @property
    def s(self) -> int:
        return len(self.cut_vertices)

    @property
    def blocks_of_vertex(self) -> tuple[tuple[int, ...], ...]:
        owner: list[list[int]] = [[] for _ in range(self.n)]
        for b, verts in enumerate(self.blocks):
            for v in verts:
                owner[v].append(b)
        return tuple(tuple(o) for o in owner)

    def cuts_in(self, b: int) -> tuple[int, ...]:
        cuts = set(self.cut_vertices)
        return tuple(v for v in self.blocks[b] if v in cuts)

    def internal_vertices(self, b: int) -> tuple[int, ...]:
        cuts = set(self.cut_vertices)
        return tuple(v for v in self.blocks[b] if v not in cuts)

    @property
    def end_blocks(self) -> tuple[int, ...]:
        return tuple(b for b in range(self.p) if len(self.cuts_in(b)) == 1)

    @property
    def bridge_pairs(self) -> list[list[int]]:
        return [list(self.graph.edges[e]) for e in self.bridges]

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "s": self.s,
            "blocks": [list(b) for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "bridges": self.bridge_pairs,
            "is_block_graph": _all_blocks_complete(self),
        }


def decompose(g: MultiGraph) -> BlockDecomposition:
    """Block decomposition of a connected multigraph.

    Blocks are listed in the order their first edge is discovered by a DFS
    from vertex 0 (neighbours visited in edge order), each with sorted
    vertices; the output is therefore stable across runs.
    """
    n = g.vertex_count
    if n == 0:
        raise InputError("decompose needs at least one vertex")
    if not g.is_connected():
        raise InputError("decompose needs a connected graph")
    if g.m == 0:
        return BlockDecomposition(g, ((0,),), ((),), (), (), ())

    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    pushed_at: dict[int, int] = {}
    edge_stack: list[int] = []
    found: list[list[int]] = []
    clock = 0

    disc[0] = low[0] = clock
    clock += 1
    # frame: (vertex, edge id used to enter it, next adjacency index)
    frames: list[list[int]] = [[0, -1, 0]]
    while frames:
        frame = frames[-1]
        v, via, idx = frame
        if idx < len(adj[v]):
            frame[2] += 1
            w, e = adj[v][idx]
            if e == via:
                continue
            if disc[w] == -1:
                pushed_at[e] = len(pushed_at)
                edge_stack.append(e)
                disc[w] = low[w] = clock
                clock += 1
                frames.append([w, e, 0])
            elif disc[w] < disc[v]:
                pushed_at[e] = len(pushed_at)
                edge_stack.append(e)
                low[v] = min(low[v], disc[w])
            continue
        frames.pop()
        if not frames:
            break
        parent = frames[-1][0]
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            block: list[int] = []
            while True:
                e = edge_stack.pop()
                block.append(e)
                if e == via:
                    break
            found.append(block)

    found.sort(key=lambda es: min(pushed_at[e] for e in es))
    block_of_edge = [0] * g.m
    blocks = []
    block_edges = []
    for b, es in enumerate(found):
        for e in es:
            block_of_edge[e] = b
        blocks.append(tuple(sorted({x for e in es for x in g.edges[e]})))
        block_edges.append(tuple(sorted(es)))
    count = [0] * n
    for verts in blocks:
        for v in verts:
            count[v] += 1
    cuts = tuple(v for v in range(n) if count[v] > 1)
    bridges = tuple(sorted(es[0] for es in block_edges if len(es) == 1))
    return BlockDecomposition(g, tuple(blocks), tuple(block_edges), tuple(block_of_edge), cuts, bridges)


def find_bridge(g: MultiGraph) -> int | None:
    """Edge id of some bridge of a connected graph, or ``None``."""
    if g.m == 0:
        return None
    bridges = decompose(g).bridges
    return bridges[0] if bridges else None


def is_bridgeless(g: MultiGraph) -> bool:
    """Connected with no bridge."""
    return g.is_connected() and find_bridge(g) is None


@dataclass(frozen=True)
class Branch:
    """Component of ``G - v`` together with ``v``, as a standalone graph."""

    graph: MultiGraph
    vertex_map: list[int]
    edge_map: list[int]

    @property
    def vertices(self) -> list[int]:
        return self.vertex_map


def _components_without(g: MultiGraph, v: int) -> list[list[int]]:
    seen = [False] * g.vertex_count
    seen[v] = True
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def branches_at(g: MultiGraph, v: int) -> list[Branch]:
    """Branches of ``g`` at cut vertex ``v``, ordered by smallest vertex."""
    if not 0 <= v < g.vertex_count:
        raise InputError(f"vertex {v} out of range")
    if not g.is_connected():
        raise InputError("branches_at needs a connected graph")
    comps = _components_without(g, v)
    if len(comps) < 2:
        raise InputError(f"vertex {v} is not a cut vertex")
    out = []
    for comp in comps:
        sub, vmap, emap = g.induced_subgraph([*comp, v])
        out.append(Branch(sub, vmap, emap))
    return out


def separates(g: MultiGraph, y: int, a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``g - y``."""
    seen = {y, a}
    stack = [a]
    while stack:
        x = stack.pop()
        for w, _ in g.adjacency[x]:
            if w == b:
                return False
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return True


def block_graph(dec: BlockDecomposition) -> MultiGraph:
    """Graph on block indices; two blocks adjacent iff they share a cut vertex."""
    pairs = set()
    for v in dec.cut_vertices:
        owners = dec.blocks_of_vertex[v]
        for i, a in enumerate(owners):
            for b in owners[i + 1:]:
                pairs.add((min(a, b), max(a, b)))
    return MultiGraph(dec.p, tuple(sorted(pairs)))


def block_graph_is_tree(g: MultiGraph) -> tuple[bool, int | None]:
    """``(True, None)`` iff no cut vertex lies in more than two blocks.

    When no such vertex exists the block graph is checked to be a tree
    (connected with ``p - 1`` edges); otherwise the first offending cut
    vertex is returned as witness.
    """
    dec = decompose(g)
    owners = dec.blocks_of_vertex
    for v in dec.cut_vertices:
        if len(owners[v]) > 2:
            return False, v
    bg = block_graph(dec)
    if bg.m != dec.p - 1 or not bg.is_connected():
        raise AssertionError("block graph is not a tree although no cut vertex is in three blocks")
    return True, None


def is_tree(t: MultiGraph) -> bool:
    return t.vertex_count >= 1 and t.m == t.vertex_count - 1 and t.is_connected()


@dataclass(frozen=True)
class LeafBound:
    leaf_count: int
    bound: Fraction
    holds: bool


def leaf_lower_bound(t: MultiGraph) -> LeafBound:
    """Leaf count of a tree without two adjacent degree-2 vertices.

    Such a tree on ``p >= 2`` vertices has at least ``(p + 5) / 4`` leaves;
    ``holds`` reports whether the count meets that. Trees outside the
    hypothesis are rejected rather than reported.
    """
    p = t.vertex_count
    if p < 2 or not is_tree(t):
        raise InputError("leaf_lower_bound needs a tree with at least two vertices")
    deg = [t.degree(v) for v in range(p)]
    for u, v in t.edges:
        if deg[u] == 2 and deg[v] == 2:
            raise InputError(f"adjacent degree-2 vertices {u} and {v}")
    leaves = sum(1 for d in deg if d == 1)
    bound = Fraction(p + 5, 4)
    return LeafBound(leaves, bound, leaves >= bound)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rhs: int

    @property
    def slack(self) -> int:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack, "holds": self.holds}


def structural_inequalities(dec: BlockDecomposition, bridgeless: bool = True) -> list[Inequality]:
    """``n >= 2p+1``, ``n >= 2s+3``, ``p-1 >= s`` and minimum block size ``>= 3``.

    Each entry is stated as ``lhs >= rhs`` so ``slack`` is ``lhs - rhs``.
    """
    if not bridgeless or dec.bridges:
        raise InputError("structural inequalities are only claimed for bridgeless graphs")
    n, p, s = dec.n, dec.p, dec.s
    return [
        Inequality("n >= 2p+1", n, 2 * p + 1),
        Inequality("n >= 2s+3", n, 2 * s + 3),
        Inequality("p-1 >= s", p - 1, s),
        Inequality("min block size >= 3", min(len(b) for b in dec.blocks), 3),
    ]


def _all_blocks_complete(dec: BlockDecomposition) -> bool:
    g = dec.graph
    for b, verts in enumerate(dec.blocks):
        k = len(verts)
        pairs = {(min(g.edges[e]), max(g.edges[e])) for e in dec.block_edges[b]}
        if len(pairs) != k * (k - 1) // 2:
            return False
    return True


def is_block_graph(g: MultiGraph) -> bool:
    """True iff every block induces a complete graph."""
    return _all_blocks_complete(decompose(g))

