"""Exact oriented diameter.

Two independent routes:

* :func:`oriented_diameter_bruteforce` enumerates orientations in batches
  and evaluates them with boolean matrix products (numpy);
* :func:`oriented_diameter_decomposed` enumerates each block separately,
  keeps Pareto-minimal distance profiles and combines them with a dynamic
  program over the block-cut tree.

Both shrink the search with forced pairs: the two edges at a vertex of
degree 2 must point one in, one out in any strong orientation, so they
are enumerated as a single two-valued choice.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterator

import numpy as np

from orientdia.decomposition import decompose
from orientdia.errors import ContractViolation, InfeasibleError, InputError, ResourceError
from orientdia.graph import INFINITE, Digraph, MultiGraph, diameter, is_strongly_connected
from orientdia.orient.basic import require_bridgeless

DEFAULT_EDGE_BUDGET = 22
DEFAULT_BLOCK_BUDGET = 1 << 20
_CHUNK = 1 << 13


@dataclass(frozen=True)
class OrientationCertificate:
    value: int
    witness: Digraph
    method: str
    explored: int

    def to_json(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method,
            "witness_arcs": [list(a) for a in self.witness.arcs],
            "explored": self.explored,
        }


# -- forced edge pairs ---------------------------------------------------------


@dataclass(frozen=True)
class EdgeGroups:
    """Edges tied together by degree-2 vertices.

    Edge ``e`` is reversed iff ``choice[group[e]] ^ parity[e]``. Group 0
    contains edge 0.
    """

    group: np.ndarray
    parity: np.ndarray
    count: int


def edge_groups(g: MultiGraph) -> EdgeGroups:
    m = g.m
    parent = list(range(m))
    rel = [0] * m  # parity relative to parent

    def find(e: int) -> tuple[int, int]:
        acc = 0
        path = []
        while parent[e] != e:
            path.append(e)
            acc ^= rel[e]
            e = parent[e]
        root, total = e, acc
        for x in path:  # compress
            nxt_acc = total
            total ^= rel[x]
            parent[x], rel[x] = root, nxt_acc
        return root, acc

    for w in range(g.vertex_count):
        if g.degree(w) != 2:
            continue
        (_, e1), (_, e2) = g.adjacency[w]
        # edge e has w as head iff reversed ^ [w == v_e]
        t1 = int(g.edges[e1][1] == w)
        t2 = int(g.edges[e2][1] == w)
        need = 1 ^ t1 ^ t2  # required reversed(e1) ^ reversed(e2)
        r1, p1 = find(e1)
        r2, p2 = find(e2)
        if r1 == r2:
            if p1 ^ p2 != need:
                raise InfeasibleError("degree-2 constraints are contradictory; no strong orientation")
            continue
        parent[r2] = r1
        rel[r2] = p1 ^ p2 ^ need

    roots: dict[int, int] = {}
    group = np.zeros(m, dtype=np.int64)
    parity = np.zeros(m, dtype=np.uint8)
    for e in range(m):
        r, par = find(e)
        if r not in roots:
            roots[r] = len(roots)
        group[e] = roots[r]
        parity[e] = par
    return EdgeGroups(group, parity, len(roots))


# -- batched evaluation ---------------------------------------------------------


def _choices(count: int, start: int, stop: int, fixed_first: bool) -> np.ndarray:
    """Rows of group choices for enumeration indices ``start..stop-1``."""
    idx = np.arange(start, stop, dtype=np.int64)
    free = count - 1 if fixed_first else count
    bits = (idx[:, None] >> np.arange(free, dtype=np.int64)) & 1
    if fixed_first:
        bits = np.concatenate([np.zeros((len(idx), 1), dtype=np.int64), bits], axis=1)
    return bits.astype(np.uint8)


def _reversed_bits(groups: EdgeGroups, choices: np.ndarray) -> np.ndarray:
    return choices[:, groups.group] ^ groups.parity[None, :]


def _adjacency(g: MultiGraph, rev: np.ndarray) -> np.ndarray:
    u = np.array([e[0] for e in g.edges], dtype=np.int64)
    v = np.array([e[1] for e in g.edges], dtype=np.int64)
    tails = np.where(rev, v[None, :], u[None, :])
    heads = np.where(rev, u[None, :], v[None, :])
    batch = rev.shape[0]
    adj = np.zeros((batch, g.vertex_count, g.vertex_count), dtype=np.float32)
    adj[np.arange(batch)[:, None], tails, heads] = 1.0
    return adj


def _batch_distances(g: MultiGraph, rev: np.ndarray) -> np.ndarray:
    """All-pairs distances per orientation; ``-1`` marks unreachable."""
    n = g.vertex_count
    adj = _adjacency(g, rev)
    batch = rev.shape[0]
    eye = np.eye(n, dtype=bool)
    reach = np.broadcast_to(eye, (batch, n, n)).copy()
    dist = np.where(reach, 0, -1).astype(np.int16)
    for step in range(1, n):
        new = (reach.astype(np.float32) @ adj) > 0
        fresh = new & ~reach
        if not fresh.any():
            break
        dist[fresh] = step
        reach |= new
    return dist


def _batch_diameters(g: MultiGraph, rev: np.ndarray, cap: int) -> np.ndarray:
    """Diameter per orientation; values above ``cap`` are reported as ``cap + 1``.

    Non-strong orientations also get ``cap + 1`` (callers pass ``cap >= n``
    when they need to tell them apart).
    """
    n = g.vertex_count
    adj = _adjacency(g, rev)
    batch = rev.shape[0]
    reach = np.broadcast_to(np.eye(n, dtype=np.float32), (batch, n, n)).copy()
    out = np.full(batch, cap + 1, dtype=np.int64)
    alive = np.arange(batch)
    for step in range(1, min(n, cap + 1)):
        reach = ((reach @ adj[alive]) + reach > 0).astype(np.float32)
        full = reach.reshape(len(alive), -1).all(axis=1)
        out[alive[full]] = step
        keep = ~full
        alive = alive[keep]
        reach = reach[keep]
        if not len(alive):
            break
    return out


def _masks(rev: np.ndarray) -> np.ndarray:
    weights = np.left_shift(np.uint64(1), np.arange(rev.shape[1], dtype=np.uint64))
    return (rev.astype(np.uint64) * weights[None, :]).sum(axis=1, dtype=np.uint64)


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("ORIENTDIA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"ORIENTDIA_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# -- brute force ------------------------------------------------------------------


def oriented_diameter_bruteforce(
    g: MultiGraph, edge_budget: int = DEFAULT_EDGE_BUDGET, workers: int | None = None
) -> OrientationCertificate:
    """Minimum diameter over every orientation of ``g``.

    Reversing all arcs preserves the diameter, so the group holding edge 0
    keeps its stored direction and only half the space is scanned. The
    witness is the smallest edge bitmask (bit ``i`` set = edge ``i``
    reversed) among optimal orientations and their reversals; the result
    does not depend on the number of workers.
    """
    if g.m > edge_budget:
        raise ResourceError(f"{g.m} edges exceed the brute-force budget of {edge_budget}; use the decomposed method")
    require_bridgeless(g)
    if g.vertex_count <= 1:
        return OrientationCertificate(0, Digraph(g.vertex_count, ()), "brute", 1)
    groups = edge_groups(g)
    total = 1 << (groups.count - 1)
    full = (1 << g.m) - 1
    cap = g.vertex_count  # a strong orientation has diameter <= n - 1

    def scan(start: int, stop: int) -> tuple[int, int]:
        rev = _reversed_bits(groups, _choices(groups.count, start, stop, fixed_first=True))
        diams = _batch_diameters(g, rev, cap)
        best = int(diams.min())
        if best > cap - 1:
            return best, -1
        masks = _masks(rev[diams == best])
        cands = [min(int(x), full ^ int(x)) for x in masks]
        return best, min(cands)

    spans = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    nworkers = min(_workers(workers), len(spans))
    if nworkers > 1:
        with ThreadPoolExecutor(nworkers) as pool:
            results = list(pool.map(lambda span: scan(*span), spans))
    else:
        results = [scan(*span) for span in spans]
    value = min(r[0] for r in results)
    if value > cap - 1:
        raise ContractViolation("bridgeless graph without a strong orientation")
    mask = min(r[1] for r in results if r[0] == value)
    witness = Digraph.from_mask(g, mask)
    _certify(witness, value)
    return OrientationCertificate(value, witness, "brute", total)


def strong_orientations(g: MultiGraph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Iterator[tuple[int, np.ndarray]]:
    """Every strong orientation as ``(mask, distance matrix)``.

    Orientations breaking a degree-2 pair are never strong and are skipped
    without evaluation.
    """
    if g.m > edge_budget:
        raise ResourceError(f"{g.m} edges exceed the enumeration budget of {edge_budget}")
    groups = edge_groups(g)
    total = 1 << groups.count
    for start in range(0, total, _CHUNK):
        rev = _reversed_bits(groups, _choices(groups.count, start, min(start + _CHUNK, total), fixed_first=False))
        dist = _batch_distances(g, rev)
        strong = (dist >= 0).reshape(len(rev), -1).all(axis=1)
        for mask, dm in zip(_masks(rev[strong]), dist[strong]):
            yield int(mask), dm


def _certify(witness: Digraph, value: int) -> None:
    if not is_strongly_connected(witness) or diameter(witness) != value:
        raise ContractViolation(f"witness does not realise the claimed value {value}")


# -- per-block profiles -----------------------------------------------------------


@dataclass(frozen=True)
class BlockProfile:
    """Distances a block orientation exposes to the rest of the graph.

    ``dist[i][j]`` is the distance between attachments ``i`` and ``j``;
    ``out_ecc[i]`` / ``in_ecc[i]`` the farthest block vertex from / to
    attachment ``i``; ``diameter`` the block's own diameter. ``mask`` is one
    block orientation realising the profile (bit ``i`` = block edge ``i``
    reversed).
    """

    attachments: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...]
    out_ecc: tuple[int, ...]
    in_ecc: tuple[int, ...]
    diameter: int
    mask: int = field(compare=False)

    def vector(self) -> tuple[int, ...]:
        flat = tuple(x for row in self.dist for x in row)
        return (*flat, *self.out_ecc, *self.in_ecc, self.diameter)


def _pareto_rows(vectors: np.ndarray) -> np.ndarray:
    """Indices of Pareto-minimal rows (first occurrence kept among duplicates)."""
    _, first = np.unique(vectors, axis=0, return_index=True)
    first = np.sort(first)
    cand = vectors[first]
    keep = []
    for i, row in enumerate(cand):
        le = (cand <= row).all(axis=1)
        lt = (cand < row).any(axis=1)
        if not (le & lt).any():
            keep.append(first[i])
    return np.array(keep, dtype=np.int64)


def block_profiles(
    block: MultiGraph, attachment: list[int] | tuple[int, ...], budget: int = DEFAULT_BLOCK_BUDGET
) -> list[BlockProfile]:
    """Pareto-minimal profiles over all strong orientations of a block."""
    require_bridgeless(block)
    att = tuple(attachment)
    if block.vertex_count == 1:
        return [BlockProfile(att, ((0,),) * len(att), (0,) * len(att), (0,) * len(att), 0, 0)]
    groups = edge_groups(block)
    total = 1 << groups.count
    if total > budget:
        raise ResourceError(f"block with {block.m} edges needs {total} orientations (budget {budget})")
    att_idx = np.array(att, dtype=np.int64)
    vecs = []
    masks = []
    for start in range(0, total, _CHUNK):
        rev = _reversed_bits(groups, _choices(groups.count, start, min(start + _CHUNK, total), fixed_first=False))
        dist = _batch_distances(block, rev).astype(np.int64)
        strong = (dist >= 0).reshape(len(rev), -1).all(axis=1)
        dist = dist[strong]
        if not len(dist):
            continue
        sub = dist[:, att_idx][:, :, att_idx].reshape(len(dist), -1)
        out_ecc = dist[:, att_idx, :].max(axis=2)
        in_ecc = dist[:, :, att_idx].max(axis=1)
        diam = dist.reshape(len(dist), -1).max(axis=1)[:, None]
        vecs.append(np.concatenate([sub, out_ecc, in_ecc, diam], axis=1))
        masks.append(_masks(rev[strong]))
    if not vecs:
        raise ContractViolation("bridgeless block without a strong orientation")
    allv = np.concatenate(vecs)
    allm = np.concatenate(masks)
    a = len(att)
    out = []
    for i in _pareto_rows(allv):
        row = [int(x) for x in allv[i]]
        dist_rows = tuple(tuple(row[r * a:(r + 1) * a]) for r in range(a))
        out.append(
            BlockProfile(att, dist_rows, tuple(row[a * a:a * a + a]), tuple(row[a * a + a:a * a + 2 * a]), row[-1], int(allm[i]))
        )
    return out


# -- decomposed exact method ----------------------------------------------------


# A state summarises everything hanging below a cut vertex (or a block)
# relative to its attachment point r: (max dist r -> part, max dist part -> r,
# diameter within part ∪ {r}, back-pointer).
State = tuple[int, int, int, Any]


def _pareto_states(states: list[State]) -> list[State]:
    states = sorted(states, key=lambda s: (s[0], s[1], s[2]))
    kept: list[State] = []
    for s in states:
        if any(k[0] <= s[0] and k[1] <= s[1] and k[2] <= s[2] for k in kept):
            continue
        kept.append(s)
    return kept


def oriented_diameter_decomposed(g: MultiGraph, block_budget: int = DEFAULT_BLOCK_BUDGET) -> OrientationCertificate:
    """Exact oriented diameter from per-block profiles.

    A path between vertices of different blocks runs through the cut
    vertices on the block-cut tree path between them, so each block's
    orientation can be chosen independently; only the profile of distances
    it exposes at its cut vertices matters. States are combined bottom-up
    from block 0 as root, keeping Pareto-minimal ``(out, in, diameter)``
    triples, which is lossless because every combination rule is monotone.
    """
    require_bridgeless(g)
    if g.vertex_count <= 1:
        return OrientationCertificate(0, Digraph(g.vertex_count, ()), "decomposed", 1)
    dec = decompose(g)
    cut_set = set(dec.cut_vertices)
    owners = dec.blocks_of_vertex

    # root the block-cut tree at block 0
    parent_cut: dict[int, int | None] = {0: None}
    child_cuts: dict[int, list[int]] = {}
    child_blocks: dict[int, list[int]] = {}
    order = [0]
    for b in order:
        kids = [c for c in dec.blocks[b] if c in cut_set and c != parent_cut[b]]
        child_cuts[b] = kids
        for c in kids:
            child_blocks[c] = [x for x in owners[c] if x != b]
            for x in child_blocks[c]:
                parent_cut[x] = c
                order.append(x)

    explored = 0
    profiles: dict[int, list[BlockProfile]] = {}
    sub_graphs: dict[int, tuple[MultiGraph, list[int], list[int]]] = {}
    for b in range(dec.p):
        sub, vmap, emap = g.edge_subgraph(dec.block_edges[b])
        sub_graphs[b] = (sub, vmap, emap)
        att_global = ([parent_cut[b]] if parent_cut[b] is not None else []) + child_cuts[b]
        att_local = [vmap.index(v) for v in att_global]  # type: ignore[arg-type]
        profiles[b] = block_profiles(sub, att_local, block_budget)
        explored += 1 << edge_groups(sub).count

    cut_states: dict[int, list[State]] = {}
    block_states: dict[int, list[State]] = {}
    root_best: tuple[int, Any] | None = None

    for b in reversed(order):
        has_parent = parent_cut[b] is not None
        kids = child_cuts[b]
        offset = 1 if has_parent else 0
        kid_lists = [cut_states[c] for c in kids]
        prof = profiles[b]
        dist = np.array([p.dist for p in prof], dtype=np.int64)  # (P, A, A)
        oute = np.array([p.out_ecc for p in prof], dtype=np.int64)  # (P, A)
        ine = np.array([p.in_ecc for p in prof], dtype=np.int64)
        bdiam = np.array([p.diameter for p in prof], dtype=np.int64)
        a = dist.shape[1]
        off_diag = ~np.eye(a, dtype=bool)
        results: list[State] = []
        for combo in product(*[range(len(lst)) for lst in kid_lists]):
            o = np.zeros(a, dtype=np.int64)
            i_ = np.zeros(a, dtype=np.int64)
            below = 0
            for j, idx in enumerate(combo):
                st = kid_lists[j][idx]
                o[offset + j], i_[offset + j] = st[0], st[1]
                below = max(below, st[2])
            cross = i_[None, :, None] + dist + o[None, None, :]
            cross = np.where(off_diag[None], cross, 0).reshape(len(prof), -1).max(axis=1, initial=0)
            total = np.maximum.reduce([
                bdiam,
                np.full(len(prof), below),
                cross,
                (ine + o[None, :]).max(axis=1, initial=0),
                (i_[None, :] + oute).max(axis=1, initial=0),
            ])
            if has_parent:
                out_r = np.maximum(oute[:, 0], (dist[:, 0, :] + o[None, :]).max(axis=1))
                in_r = np.maximum(ine[:, 0], (i_[None, :] + dist[:, :, 0]).max(axis=1))
                for pi in range(len(prof)):
                    results.append((int(out_r[pi]), int(in_r[pi]), int(total[pi]), (pi, combo)))
            else:
                pi = int(np.argmin(total))
                if root_best is None or int(total[pi]) < root_best[0]:
                    root_best = (int(total[pi]), (pi, combo))
        if has_parent:
            block_states[b] = _pareto_states(results)
            c = parent_cut[b]
            assert c is not None
            if all(x in block_states for x in child_blocks[c]):
                folded: list[State] = [(0, 0, 0, ())]
                for x in child_blocks[c]:
                    nxt = []
                    for f in folded:
                        for bi, s in enumerate(block_states[x]):
                            nxt.append((max(f[0], s[0]), max(f[1], s[1]),
                                        max(f[2], s[2], f[1] + s[0], s[1] + f[0]), (*f[3], bi)))
                    folded = _pareto_states(nxt)
                cut_states[c] = folded

    assert root_best is not None
    value, choice = root_best

    flags = [False] * g.m

    def assign_block(b: int, pick: tuple[int, tuple[int, ...]]) -> None:
        pi, combo = pick
        _, _, emap = sub_graphs[b]
        mask = profiles[b][pi].mask
        for local, e in enumerate(emap):
            flags[e] = bool(mask >> local & 1)
        for c, idx in zip(child_cuts[b], combo):
            for x, bi in zip(child_blocks[c], cut_states[c][idx][3]):
                assign_block(x, block_states[x][bi][3])

    assign_block(0, choice)
    witness = Digraph.from_flags(g, flags)
    _certify(witness, value)
    return OrientationCertificate(value, witness, "decomposed", explored)


def oriented_diameter(g: MultiGraph, method: str = "auto", **kwargs: Any) -> OrientationCertificate:
    """Dispatch to ``brute`` / ``decomposed``; ``auto`` picks brute force when it fits."""
    if method == "brute":
        return oriented_diameter_bruteforce(g, **kwargs)
    if method == "decomposed":
        return oriented_diameter_decomposed(g, **kwargs)
    if method == "auto":
        if g.m <= DEFAULT_EDGE_BUDGET:
            return oriented_diameter_bruteforce(g)
        return oriented_diameter_decomposed(g)
    raise InputError(f"unknown method {method!r}")


__all__ = [
    "INFINITE",
    "OrientationCertificate",
    "BlockProfile",
    "EdgeGroups",
    "edge_groups",
    "oriented_diameter_bruteforce",
    "oriented_diameter_decomposed",
    "oriented_diameter",
    "block_profiles",
    "strong_orientations",
]
