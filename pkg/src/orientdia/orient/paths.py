"""Two disjoint paths of minimum total length via unit-capacity min-cost flow."""

from __future__ import annotations

from dataclasses import dataclass

from orientdia.errors import ContractViolation, InputError
from orientdia.graph import MultiGraph


@dataclass(frozen=True)
class PathPair:
    """Two edge-disjoint ``x -> y`` paths with ``len(p1) <= len(p2)``.

    ``e1[i]`` is the edge joining ``p1[i]`` and ``p1[i + 1]``; likewise for
    ``e2``. ``vertex_disjoint`` records whether the pair also avoids shared
    internal vertices.
    """

    p1: tuple[int, ...]
    p2: tuple[int, ...]
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    vertex_disjoint: bool

    @property
    def len1(self) -> int:
        return len(self.e1)

    @property
    def len2(self) -> int:
        return len(self.e2)


class _FlowNet:
    def __init__(self, nodes: int) -> None:
        self.head: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.tag: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(nodes)]

    def add(self, u: int, v: int, cap: int, cost: int, tag: int) -> None:
        for a, b, c, w, t in ((u, v, cap, cost, tag), (v, u, 0, -cost, -1)):
            self.out[a].append(len(self.head))
            self.head.append(b)
            self.cap.append(c)
            self.cost.append(w)
            self.tag.append(t)

    def augment(self, s: int, t: int) -> bool:
        """One shortest augmenting path (Bellman-Ford, residual costs)."""
        nodes = len(self.out)
        dist = [None] * nodes
        via = [-1] * nodes
        dist[s] = 0
        for _ in range(nodes):
            changed = False
            for u in range(nodes):
                du = dist[u]
                if du is None:
                    continue
                for a in self.out[u]:
                    if self.cap[a] <= 0:
                        continue
                    v = self.head[a]
                    nd = du + self.cost[a]
                    if dist[v] is None or nd < dist[v]:
                        dist[v] = nd
                        via[v] = a
                        changed = True
            if not changed:
                break
        if dist[t] is None:
            return False
        v = t
        while v != s:
            a = via[v]
            self.cap[a] -= 1
            self.cap[a ^ 1] += 1
            v = self.head[a ^ 1]
        return True


def _two_paths(g: MultiGraph, x: int, y: int, split: bool) -> list[tuple[list[int], list[int]]] | None:
    n = g.vertex_count
    if split:
        # vertex v -> in-node 2v, out-node 2v+1
        net = _FlowNet(2 * n)
        for v in range(n):
            net.add(2 * v, 2 * v + 1, 2 if v in (x, y) else 1, 0, -1)
        node_in = lambda v: 2 * v  # noqa: E731
        node_out = lambda v: 2 * v + 1  # noqa: E731
    else:
        net = _FlowNet(n)
        node_in = node_out = lambda v: v  # noqa: E731
    for e, (u, v) in enumerate(g.edges):
        net.add(node_out(u), node_in(v), 1, 1, e)
        net.add(node_out(v), node_in(u), 1, 1, e)
    s, t = node_out(x), node_in(y)
    for _ in range(2):
        if not net.augment(s, t):
            return None

    used: dict[int, list[tuple[int, int]]] = {}
    for a in range(0, len(net.head), 2):
        if net.tag[a] >= 0 and net.cap[a] == 0:
            u = net.head[a ^ 1]
            used.setdefault(u, []).append((a, net.tag[a]))
    paths = []
    for _ in range(2):
        verts = [x]
        edges: list[int] = []
        node = s
        while True:
            a, e = used[node].pop(0)
            v_node = net.head[a]
            v = v_node // 2 if split else v_node
            verts.append(v)
            edges.append(e)
            if v == y:
                break
            node = node_out(v)
        paths.append((verts, edges))
    return paths


def two_disjoint_paths(branch: MultiGraph, x: int, y: int) -> PathPair:
    """Two ``x -> y`` paths of minimum total length.

    Internally vertex-disjoint paths are preferred; when a cut vertex of
    ``branch`` separates ``x`` from ``y`` the search falls back to
    edge-disjoint paths. Either way the shorter path has length at most
    ``|V| - 2`` and the longer at most ``|V| - 1``; a violation raises
    :class:`ContractViolation`.
    """
    n = branch.vertex_count
    if x == y or not (0 <= x < n and 0 <= y < n):
        raise InputError(f"need two distinct vertices in 0..{n - 1}, got {x}, {y}")
    found = _two_paths(branch, x, y, split=True)
    vertex_disjoint = found is not None
    if found is None:
        found = _two_paths(branch, x, y, split=False)
    if found is None:
        raise InputError(f"no two edge-disjoint paths between {x} and {y}: the graph has a bridge")
    (pa, ea), (pb, eb) = sorted(found, key=lambda pe: (len(pe[1]), pe[0]))
    for verts in (pa, pb):
        if len(set(verts)) != len(verts):
            raise ContractViolation(f"flow decomposition produced a non-simple path {verts}")
    pair = PathPair(tuple(pa), tuple(pb), tuple(ea), tuple(eb), vertex_disjoint)
    if n >= 3 and pair.len1 > n - 2 or pair.len2 > n - 1:
        raise ContractViolation(f"path lengths {pair.len1}, {pair.len2} exceed the bounds for {n} vertices")
    return pair
