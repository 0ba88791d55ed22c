"""Baseline strong orientations: DFS (Robbins), completion of a partial
orientation, and small-diameter tournaments on complete graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from orientdia.decomposition import find_bridge
from orientdia.errors import ContractViolation, InfeasibleError, InputError
from orientdia.graph import Digraph, MultiGraph, diameter, eccentricities


def require_bridgeless(g: MultiGraph) -> None:
    """Raise unless ``g`` is connected and bridgeless."""
    if not g.is_connected():
        raise InputError("graph is not connected")
    bridge = find_bridge(g)
    if bridge is not None:
        u, v = g.edges[bridge]
        raise InfeasibleError(f"edge {u}-{v} is a bridge; no strong orientation exists", (u, v))


def robbins_orientation(g: MultiGraph) -> Digraph:
    """Strong orientation of a bridgeless graph from one DFS.

    Tree edges point away from the root, every other edge points from the
    later-discovered endpoint to its ancestor.
    """
    require_bridgeless(g)
    n = g.vertex_count
    flags = [False] * g.m
    if n <= 1:
        return Digraph.from_flags(g, flags)
    disc = [-1] * n
    disc[0] = 0
    clock = 1
    done = [False] * g.m
    stack = [(0, 0)]
    adj = g.adjacency
    while stack:
        v, idx = stack[-1]
        if idx == len(adj[v]):
            stack.pop()
            continue
        stack[-1] = (v, idx + 1)
        w, e = adj[v][idx]
        if done[e]:
            continue
        done[e] = True
        if disc[w] == -1:
            disc[w] = clock
            clock += 1
            tail, head = v, w
            stack.append((w, 0))
        else:
            tail, head = (v, w) if disc[v] > disc[w] else (w, v)
        flags[e] = (tail, head) != g.edges[e]
    return Digraph.from_flags(g, flags)


@dataclass
class PartialOrientation:
    """Mixed graph: ``assigned`` maps edge ids to a ``(tail, head)`` arc."""

    base: MultiGraph
    assigned: dict[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for e, arc in self.assigned.items():
            if not 0 <= e < self.base.m:
                raise InputError(f"edge id {e} out of range")
            if set(arc) != set(self.base.edges[e]) or arc[0] == arc[1]:
                raise InputError(f"direction {arc} does not match edge {e} = {self.base.edges[e]}")

    @property
    def free(self) -> list[int]:
        return [e for e in range(self.base.m) if e not in self.assigned]

    def assign_path(self, vertices: list[int] | tuple[int, ...], edges: list[int] | tuple[int, ...]) -> None:
        """Direct the walk ``vertices`` along ``edges`` (``edges[i]`` joins vertices i, i+1)."""
        for i, e in enumerate(edges):
            arc = (vertices[i], vertices[i + 1])
            old = self.assigned.get(e)
            if old is not None and old != arc:
                raise InputError(f"edge {e} already directed as {old}")
            if set(arc) != set(self.base.edges[e]):
                raise InputError(f"edge {e} does not join {arc}")
            self.assigned[e] = arc


def _mixed_strong(n: int, edges: tuple[tuple[int, int], ...], flags: list[bool | None]) -> bool:
    out: list[list[int]] = [[] for _ in range(n)]
    inn: list[list[int]] = [[] for _ in range(n)]
    for (u, v), f in zip(edges, flags):
        if f is None or not f:
            out[u].append(v)
            inn[v].append(u)
        if f is None or f:
            out[v].append(u)
            inn[u].append(v)
    for adj in (out, inn):
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        if not all(seen):
            return False
    return True


def extend_orientation(p: PartialOrientation) -> Digraph:
    """Direct every free edge so the result is strongly connected.

    Backtracking over free edges in id order, trying the stored direction
    first. A branch is pruned as soon as the mixed graph (free edges usable
    both ways) stops being strongly connected.
    """
    g = p.base
    n = g.vertex_count
    flags: list[bool | None] = [None] * g.m
    for e, arc in p.assigned.items():
        flags[e] = arc != g.edges[e]
    if n <= 1:
        return Digraph.from_flags(g, [bool(f) for f in flags])
    if not _mixed_strong(n, g.edges, flags):
        raise ContractViolation("partial orientation admits no strong completion")
    free = p.free
    choice = [-1] * len(free)
    i = 0
    while i < len(free):
        e = free[i]
        placed = False
        for opt in range(choice[i] + 1, 2):
            flags[e] = bool(opt)
            if _mixed_strong(n, g.edges, flags):
                choice[i] = opt
                placed = True
                break
        if placed:
            i += 1
            continue
        flags[e] = None
        choice[i] = -1
        i -= 1
        if i < 0:
            raise ContractViolation("no strong completion of the partial orientation")
    return Digraph.from_flags(g, [bool(f) for f in flags])


# K_4 orientation of diameter 3 in which vertex 0 has eccentricity 2
# (found by enumerating all 64 orientations).
_K4_SPECIAL_0 = ((0, 1), (0, 2), (3, 0), (1, 2), (1, 3), (2, 3))


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def _circulant(n: int) -> set[tuple[int, int]]:
    return {(i, (i + j) % n) for i in range(n) for j in range(1, (n - 1) // 2 + 1)}


def _tournament_arcs(n: int, seed: int) -> set[tuple[int, int]]:
    if n % 2:
        return _circulant(n)
    # Extra vertex w on top of the circulant of order n-1: w beats the first
    # (n-2)/2 even residues and loses to every other vertex.
    w = n - 1
    beaten = set(range(0, n - 3, 2))
    arcs = _circulant(n - 1)
    arcs |= {(w, i) if i in beaten else (i, w) for i in range(n - 1)}
    if diameter(Digraph(n, tuple(sorted(arcs)))) == 2:
        return arcs
    rng = random.Random(seed)
    for _ in range(10_000):
        arcs = {(u, v) if rng.random() < 0.5 else (v, u) for u, v in combinations(range(n), 2)}
        if diameter(Digraph(n, tuple(sorted(arcs)))) == 2:
            return arcs
    raise ContractViolation(f"no diameter-2 tournament found on {n} vertices")


def complete_orientation(n: int, special: int | None = None, seed: int = 0) -> Digraph:
    """Tournament on ``n >= 3`` vertices of diameter 2, or 3 when ``n == 4``.

    For ``n == 4`` vertex ``special`` (default 0) gets eccentricity 2. Arcs
    are listed in the order of ``complete_graph(n).edges``.
    """
    if n < 3:
        raise InputError(f"K_{n} has no strong orientation (need n >= 3)")
    if special is not None and not 0 <= special < n:
        raise InputError(f"special vertex {special} outside 0..{n - 1}")
    if n == 4:
        v = special or 0
        swap = {0: v, v: 0}
        arcs = {(swap.get(a, a), swap.get(b, b)) for a, b in _K4_SPECIAL_0}
    else:
        arcs = _tournament_arcs(n, seed)
    d = Digraph(n, tuple((u, v) if (u, v) in arcs else (v, u) for u, v in combinations(range(n), 2)))
    want = 3 if n == 4 else 2
    if diameter(d) != want:
        raise ContractViolation(f"tournament on {n} vertices has diameter {diameter(d)}, expected {want}")
    if special is not None and eccentricities(d, special)[2] != 2:
        raise ContractViolation(f"special vertex {special} does not have eccentricity 2")
    return d


def orient_by_tournament(
    g: MultiGraph, edge_ids: list[int], vertices: list[int], tournament: Digraph
) -> dict[int, tuple[int, int]]:
    """Direct ``edge_ids`` of ``g`` as ``tournament`` does on ``vertices``.

    ``vertices[i]`` plays tournament vertex ``i``; parallel edges all follow
    the tournament arc between their endpoints.
    """
    local = {v: i for i, v in enumerate(vertices)}
    wins = set(tournament.arcs)
    out = {}
    for e in edge_ids:
        u, v = g.edges[e]
        out[e] = (u, v) if (local[u], local[v]) in wins else (v, u)
    return out


def apply_arcs(g: MultiGraph, arcs: Mapping[int, tuple[int, int]]) -> Digraph:
    """Digraph aligned with ``g`` from a complete edge-id -> arc mapping."""
    if len(arcs) != g.m:
        missing = sorted(set(range(g.m)) - set(arcs))
        raise ContractViolation(f"edges left undirected: {missing[:5]}")
    return Digraph(g.vertex_count, tuple(arcs[e] for e in range(g.m)))
