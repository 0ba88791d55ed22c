"""Undirected multigraphs, digraphs and BFS-based distance queries.

Vertices are dense integers ``0..n-1`` and an edge's identity is its
position in ``MultiGraph.edges``. An orientation of a multigraph is a
:class:`Digraph` whose ``arcs[i]`` is edge ``i`` with a direction chosen,
which keeps orientations, bitmasks and reports aligned edge by edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from orientdia.errors import ContractViolation, InputError

__all__ = [
    "INFINITE",
    "Infinite",
    "MultiGraph",
    "Digraph",
    "bfs_adjacency",
    "bfs_distances",
    "distance_matrix",
    "diameter",
    "diametral_pair",
    "is_strongly_connected",
    "eccentricities",
]


class Infinite:
    """Distance to an unreachable vertex; compares greater than every int."""

    _instance: Infinite | None = None

    def __new__(cls) -> Infinite:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("orientdia.INFINITE")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Infinite)):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, (int, Infinite)):
            return other is self
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, Infinite)):
            return other is not self
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, Infinite)):
            return True
        return NotImplemented

    def __reduce__(self) -> str:
        return "INFINITE"


INFINITE = Infinite()
Distance = Union[int, Infinite]


def _check_pairs(n: int, pairs: Iterable[Sequence[int]], what: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(n, int) or n < 0:
        raise InputError(f"vertex_count must be a non-negative integer, got {n!r}")
    out = []
    for i, pair in enumerate(pairs):
        if len(pair) != 2:
            raise InputError(f"{what} {i} is not a pair: {pair!r}")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{what} {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"{what} {i} is a loop at vertex {u}")
        out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class MultiGraph:
    """Loopless undirected multigraph; ``edges[i]`` is edge ``i``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _check_pairs(self.vertex_count, self.edges, "edge"))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbour, edge_id)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted({w for w, _ in self.adjacency[v]})

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self.adjacency[u])

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        return INFINITE not in bfs_distances(self, 0)

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple[MultiGraph, list[int], list[int]]:
        """Subgraph spanned by ``edge_ids``.

        Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
        ``edge_map[j]`` are the ids in ``self`` of local vertex ``i`` and
        local edge ``j``. Local vertices are numbered in increasing order of
        their original ids; edge endpoint order is preserved so an
        orientation of ``sub`` lifts edge by edge.
        """
        edge_map = sorted(set(edge_ids))
        vertex_map = sorted({x for e in edge_map for x in self.edges[e]})
        local = {v: i for i, v in enumerate(vertex_map)}
        sub = MultiGraph(len(vertex_map), tuple((local[self.edges[e][0]], local[self.edges[e][1]]) for e in edge_map))
        return sub, vertex_map, edge_map

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[MultiGraph, list[int], list[int]]:
        """Subgraph induced by ``vertices`` (same return convention as :meth:`edge_subgraph`)."""
        vertex_map = sorted(set(vertices))
        local = {v: i for i, v in enumerate(vertex_map)}
        edge_map = [i for i, (u, v) in enumerate(self.edges) if u in local and v in local]
        sub = MultiGraph(len(vertex_map), tuple((local[self.edges[e][0]], local[self.edges[e][1]]) for e in edge_map))
        return sub, vertex_map, edge_map

    def relabel(self, perm: Sequence[int]) -> MultiGraph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return MultiGraph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph; ``arcs[i] = (tail, head)``."""

    vertex_count: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", _check_pairs(self.vertex_count, self.arcs, "arc"))

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @classmethod
    def from_flags(cls, g: MultiGraph, reversed_flags: Sequence[bool]) -> Digraph:
        """Orientation of ``g`` in which edge ``i`` is reversed iff ``reversed_flags[i]``."""
        if len(reversed_flags) != g.m:
            raise InputError(f"expected {g.m} direction flags, got {len(reversed_flags)}")
        return cls(g.vertex_count, tuple((v, u) if r else (u, v) for (u, v), r in zip(g.edges, reversed_flags)))

    @classmethod
    def from_mask(cls, g: MultiGraph, mask: int) -> Digraph:
        """Orientation of ``g`` whose bit ``i`` set means edge ``i`` runs ``v -> u``."""
        return cls.from_flags(g, [bool(mask >> i & 1) for i in range(g.m)])

    def reverse(self) -> Digraph:
        return Digraph(self.vertex_count, tuple((v, u) for u, v in self.arcs))

    def flags_against(self, g: MultiGraph) -> list[bool]:
        """Per-edge reversal flags assuming ``arcs[i]`` orients ``g.edges[i]``."""
        if not self.is_aligned_with(g):
            raise InputError("digraph is not an edge-aligned orientation of the graph")
        return [arc != edge for arc, edge in zip(self.arcs, g.edges)]

    def is_aligned_with(self, g: MultiGraph) -> bool:
        """True iff ``arcs[i]`` has the endpoint set of ``g.edges[i]`` for every ``i``."""
        return (
            self.vertex_count == g.vertex_count
            and len(self.arcs) == g.m
            and all({a, b} == {u, v} for (a, b), (u, v) in zip(self.arcs, g.edges))
        )

    def is_orientation_of(self, g: MultiGraph) -> bool:
        """True iff some bijection maps arcs onto edges with equal endpoint sets."""
        if self.vertex_count != g.vertex_count or len(self.arcs) != g.m:
            return False
        key = lambda p: (min(p), max(p))  # noqa: E731
        return sorted(map(key, self.arcs)) == sorted(map(key, g.edges))

    def align_to(self, g: MultiGraph) -> Digraph:
        """Reorder arcs so that ``arcs[i]`` orients ``g.edges[i]``."""
        if not self.is_orientation_of(g):
            raise InputError("arc set is not an orientation of the graph")
        pool: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for a in self.arcs:
            pool.setdefault((min(a), max(a)), []).append(a)
        for bucket in pool.values():
            bucket.reverse()
        return Digraph(self.vertex_count, tuple(pool[(min(e), max(e))].pop() for e in g.edges))

    def underlying(self) -> MultiGraph:
        return MultiGraph(self.vertex_count, self.arcs)


def bfs_adjacency(adj: Sequence[Sequence[int]], source: int) -> list[Distance]:
    """BFS distances over a raw out-adjacency list."""
    dist: list[Distance] = [INFINITE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1  # type: ignore[operator]
        for y in adj[x]:
            if dist[y] is INFINITE:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs_distances(g_or_d: MultiGraph | Digraph, source: int) -> list[Distance]:
    """Hop distances from ``source``; unreachable vertices get ``INFINITE``."""
    if not 0 <= source < g_or_d.vertex_count:
        raise InputError(f"source {source} outside 0..{g_or_d.vertex_count - 1}")
    if isinstance(g_or_d, Digraph):
        return bfs_adjacency(g_or_d.out_adjacency, source)
    return bfs_adjacency([[w for w, _ in a] for a in g_or_d.adjacency], source)


def distance_matrix(d: Digraph | MultiGraph) -> list[list[Distance]]:
    return [bfs_distances(d, s) for s in range(d.vertex_count)]


def _reaches_all(adj: Sequence[Sequence[int]]) -> bool:
    seen = [False] * len(adj)
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == len(adj)


def is_strongly_connected(d: Digraph) -> bool:
    """Every ordered pair joined by a directed path (vacuous for n <= 1)."""
    if d.vertex_count <= 1:
        return True
    return _reaches_all(d.out_adjacency) and _reaches_all(d.in_adjacency)


def diameter(d: Digraph) -> Distance:
    """Largest directed distance; ``INFINITE`` unless strongly connected."""
    if d.vertex_count <= 1:
        return 0
    if not is_strongly_connected(d):
        return INFINITE
    return max(max(row) for row in distance_matrix(d))  # type: ignore[type-var]


def diametral_pair(d: Digraph) -> tuple[int, int] | None:
    """Lexicographically smallest ``(u, v)`` with ``d(u, v) = diameter(d)``."""
    if d.vertex_count <= 1:
        return (0, 0) if d.vertex_count == 1 else None
    best: Distance = -1
    pair = None
    for u in range(d.vertex_count):
        row = bfs_distances(d, u)
        for v, x in enumerate(row):
            if x > best:
                best, pair = x, (u, v)
    return pair


def eccentricities(d: Digraph, v: int) -> tuple[int, int, int]:
    """``(out_ecc, in_ecc, ecc)`` of ``v`` in a strongly connected digraph."""
    if not is_strongly_connected(d):
        raise ContractViolation("eccentricities need a strongly connected digraph")
    out_ecc = max(bfs_distances(d, v))
    in_ecc = max(bfs_adjacency(d.in_adjacency, v))
    return out_ecc, in_ecc, max(out_ecc, in_ecc)  # type: ignore[return-value]
