"""Extremal graph families, random test corpora and closed-form bounds.

Extremal chain ``G(n, p)``: a spine ``a_0 .. a_{p-1}`` where every spine
edge ``a_i a_{i+1}`` closes a triangle with an extra vertex ``b_i``, plus a
cycle of length ``n - 2(p - 1)`` through ``a_{p-1}``. Vertex ids are
``a_i = i``, ``b_i = p + i`` and the cycle vertices follow in cycle order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from orientdia.errors import InputError
from orientdia.graph import Digraph, MultiGraph

FamilyName = Literal["gnp_extremal", "block_extremal", "random_bridgeless", "random_block_graph"]


# -- bounds --------------------------------------------------------------------


def theorem1_bound(n: int, p: int) -> int:
    return n - p // 2


def corollary_bound(n: int, s: int) -> int:
    return n - (s + 1) // 2


def blockgraph_bound(n: int) -> int:
    return 3 * n // 4 if n % 2 == 0 else 3 * (n + 1) // 4


@dataclass(frozen=True)
class BoundSet:
    n: int
    p: int
    s: int
    theorem1_bound: int
    corollary_bound: int
    blockgraph_bound: int

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "s": self.s,
            "theorem1": self.theorem1_bound,
            "corollary": self.corollary_bound,
            "blockgraph": self.blockgraph_bound,
        }


def bounds(n: int, p: int, s: int) -> BoundSet:
    if n < 1 or p < 1 or s < 0:
        raise InputError("need n >= 1, p >= 1, s >= 0")
    if s > p - 1:
        raise InputError(f"s = {s} cut vertices is impossible with p = {p} blocks (at most p - 1)")
    return BoundSet(n, p, s, theorem1_bound(n, p), corollary_bound(n, s), blockgraph_bound(n))


def bound_value(name: str, n: int, p: int, s: int) -> int:
    """Look up one named bound: theorem1, corollary, blockgraph or trivial."""
    table = {
        "theorem1": lambda: theorem1_bound(n, p),
        "corollary": lambda: corollary_bound(n, s),
        "blockgraph": lambda: blockgraph_bound(n),
        "trivial": lambda: max(n - 1, 0),
    }
    if name not in table:
        raise InputError(f"unknown bound {name!r}; choose from {sorted(table)}")
    return table[name]()


@dataclass(frozen=True)
class FamilySpec:
    family: FamilyName
    n: int
    p: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family == "gnp_extremal":
            _check_gnp(self.n, self.p if self.p is not None else -1)
        elif self.family == "block_extremal" and self.n < 5:
            raise InputError(f"block_extremal needs n >= 5, got {self.n}")

    def generate(self) -> MultiGraph:
        if self.family == "gnp_extremal":
            return gen_gnp_extremal(self.n, self.p)[0]  # type: ignore[arg-type]
        if self.family == "block_extremal":
            return gen_block_extremal(self.n)
        if self.family == "random_bridgeless":
            return gen_random_bridgeless(self.n, self.p or 1, self.seed)
        return gen_random_block_graph(self.n, self.seed)


# -- extremal families ---------------------------------------------------------


def _check_gnp(n: int, p: int) -> None:
    if p < 2:
        raise InputError(f"G(n, p) needs p >= 2, got p = {p}")
    if n < 2 * p + 1:
        raise InputError(f"G(n, p) needs n >= 2p+1, got n = {n} < {2 * p + 1}")


def gen_gnp_extremal(n: int, p: int) -> tuple[MultiGraph, Digraph]:
    """The chain ``G(n, p)`` and its canonical strong orientation.

    Triangles are directed 3-cycles of alternating sense along the spine
    (``a_0 -> a_1 -> b_0 -> a_0``, then ``a_1 -> b_1 -> a_2 -> a_1``, ...) and
    the terminal cycle is one directed cycle leaving ``a_{p-1}``.
    """
    _check_gnp(n, p)
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for i in range(p - 1):
        a, a_next, b = i, i + 1, p + i
        edges += [(a, a_next), (a, b), (b, a_next)]
        if i % 2 == 0:
            arcs += [(a, a_next), (b, a), (a_next, b)]
        else:
            arcs += [(a_next, a), (a, b), (b, a_next)]
    hub = p - 1
    ring = [hub, *range(2 * p - 1, n)]
    for j, u in enumerate(ring):
        v = ring[(j + 1) % len(ring)]
        edges.append((u, v))
        arcs.append((u, v))
    return MultiGraph(n, tuple(edges)), Digraph(n, tuple(arcs))


def gen_block_extremal_with_orientation(n: int) -> tuple[MultiGraph, Digraph]:
    """Extremal block graph ``G'_n`` with an optimal orientation.

    Odd ``n``: the chain ``G(n, (n-1)/2)`` (its terminal cycle is a
    triangle). Even ``n``: ``G(n, (n-2)/2)`` with the terminal 4-cycle
    completed to ``K_4``; the ``K_4`` is oriented so that the spine end has
    eccentricity 2 inside it.
    """
    if n < 5:
        raise InputError(f"G'_n needs n >= 5, got {n}")
    if n % 2:
        return gen_gnp_extremal(n, (n - 1) // 2)
    p = (n - 2) // 2
    g, d = gen_gnp_extremal(n, p)
    hub = p - 1
    c0, c1, c2 = 2 * p - 1, 2 * p, 2 * p + 1
    g = MultiGraph(n, g.edges + ((hub, c1), (c0, c2)))
    d = Digraph(n, d.arcs + ((hub, c1), (c0, c2)))
    return g, d


def gen_block_extremal(n: int) -> MultiGraph:
    return gen_block_extremal_with_orientation(n)[0]


# -- random corpora ------------------------------------------------------------


def _rng(seed: int) -> np.random.Generator:
    # counter-based bit generator: identical streams on every platform
    return np.random.Generator(np.random.Philox(seed))


def _random_two_connected(size: int, rng: np.random.Generator, max_chords: int = 2) -> list[tuple[int, int]]:
    """Simple 2-connected graph on ``0..size-1`` by an open-ear process."""
    c = int(rng.integers(3, size + 1))
    edges = [(i, (i + 1) % c) for i in range(c)]
    present = {frozenset(e) for e in edges}
    nxt = c
    while nxt < size:
        a, b = (int(x) for x in rng.choice(nxt, size=2, replace=False))
        t = int(rng.integers(1, min(size - nxt, 3) + 1))
        chain = [a, *range(nxt, nxt + t), b]
        for u, v in zip(chain, chain[1:]):
            edges.append((u, v))
            present.add(frozenset((u, v)))
        nxt += t
    missing = [(u, v) for u in range(size) for v in range(u + 1, size) if frozenset((u, v)) not in present]
    chords = int(rng.integers(0, max_chords + 1))
    if missing and chords:
        for idx in rng.choice(len(missing), size=min(chords, len(missing)), replace=False):
            edges.append(missing[int(idx)])
    return edges


def _glue(block_edges: list[list[tuple[int, int]]], sizes: list[int], rng: np.random.Generator) -> MultiGraph:
    """Glue blocks along a random block tree and shuffle labels and edge order."""
    edges: list[tuple[int, int]] = []
    count = 0
    for size, local_edges in zip(sizes, block_edges):
        if count == 0:
            ids = list(range(size))
            count = size
        else:
            anchor = int(rng.integers(count))
            pivot = int(rng.integers(size))
            ids = []
            for j in range(size):
                if j == pivot:
                    ids.append(anchor)
                else:
                    ids.append(count)
                    count += 1
        edges += [(ids[u], ids[v]) for u, v in local_edges]
    perm = [int(x) for x in rng.permutation(count)]
    order = rng.permutation(len(edges))
    flips = rng.integers(0, 2, size=len(edges))
    shuffled = []
    for i, flip in zip(order, flips):
        u, v = perm[edges[i][0]], perm[edges[i][1]]
        shuffled.append((v, u) if flip else (u, v))
    return MultiGraph(count, tuple(shuffled))


def gen_random_bridgeless(n: int, p: int, seed: int = 0) -> MultiGraph:
    """Connected bridgeless graph on ``n`` vertices with exactly ``p`` blocks."""
    if p < 1 or n < 2 * p + 1:
        raise InputError(f"need p >= 1 and n >= 2p+1, got n = {n}, p = {p}")
    rng = _rng(seed)
    extra = rng.multinomial(n - 2 * p - 1, [1 / p] * p)
    # p - 1 vertices are shared, so block orders sum to n + p - 1
    sizes = [3 + int(x) for x in extra]
    blocks = [_random_two_connected(size, rng) for size in sizes]
    return _glue(blocks, sizes, rng)


def _clique_sizes(n: int, rng: np.random.Generator) -> list[int]:
    sizes_allowed = np.array([3, 4, 5])
    weights = np.array([0.6, 0.25, 0.15])

    def pick(remaining: int, first: bool) -> int:
        # first clique uses `size` vertices, later ones add `size - 1`
        left = remaining - (sizes_allowed if first else sizes_allowed - 1)
        w = weights * ((left >= 0) & (left != 1))
        return int(rng.choice(sizes_allowed, p=w / w.sum()))

    sizes = [pick(n, True)]
    remaining = n - sizes[0]
    while remaining:
        size = pick(remaining, False)
        sizes.append(size)
        remaining -= size - 1
    return sizes


def gen_random_block_graph(n: int, seed: int = 0) -> MultiGraph:
    """Bridgeless block graph: a random tree of cliques of order 3, 4 or 5."""
    if n < 3:
        raise InputError(f"a bridgeless block graph needs n >= 3, got {n}")
    rng = _rng(seed)
    sizes = _clique_sizes(n, rng)
    blocks = [[(u, v) for u in range(k) for v in range(u + 1, k)] for k in sizes]
    return _glue(blocks, sizes, rng)


def gen_random_leafy_tree(steps: int, seed: int = 0) -> MultiGraph:
    """Random tree without two adjacent degree-2 vertices.

    Starts from ``K_{1,3}``, turns ``steps`` random leaves into internal
    vertices of degree 3 or 4, then subdivides each edge at most once
    (with probability 1/2).
    """
    rng = _rng(seed)
    edges = [(0, 1), (0, 2), (0, 3)]
    leaves = [1, 2, 3]
    count = 4
    for _ in range(steps):
        leaf = leaves.pop(int(rng.integers(len(leaves))))
        for _ in range(int(rng.integers(2, 4))):
            edges.append((leaf, count))
            leaves.append(count)
            count += 1
    out = []
    for u, v in edges:
        if rng.random() < 0.5:
            out += [(u, count), (count, v)]
            count += 1
        else:
            out.append((u, v))
    return MultiGraph(count, tuple(out))
