"""Strong orientation keeping two vertices from different blocks close."""

from __future__ import annotations

from orientdia.decomposition import branches_at, decompose, separates
from orientdia.errors import ContractViolation, InputError
from orientdia.graph import Digraph, MultiGraph, bfs_distances
from orientdia.orient.basic import PartialOrientation, extend_orientation, require_bridgeless
from orientdia.orient.paths import two_disjoint_paths


def separating_cut_vertex(g: MultiGraph, x: int, z: int) -> int:
    """Smallest cut vertex ``y`` (other than ``x``, ``z``) with ``x``, ``z`` in different components of ``g - y``."""
    dec = decompose(g)
    owners = dec.blocks_of_vertex
    if set(owners[x]) & set(owners[z]):
        raise InputError(f"vertices {x} and {z} lie in a common block")
    for y in dec.cut_vertices:
        if y not in (x, z) and separates(g, y, x, z):
            return y
    raise ContractViolation(f"no cut vertex separates {x} and {z}")


def lemma1_orientation(g: MultiGraph, x: int, z: int) -> Digraph:
    """Strong orientation of a bridgeless graph of order ``k`` with
    ``d(x, z) <= k - 2`` and ``d(z, x) <= k - 2``.

    Take a cut vertex ``y`` separating ``x`` from ``z`` and the branches
    ``B1 ∋ x`` and ``B2 ∋ z`` at ``y``. In each branch pick two disjoint
    paths to ``y``; the shorter one of ``B1`` runs ``x -> y`` and the longer
    ``y -> x``, the shorter one of ``B2`` runs ``z -> y`` and the longer
    ``y -> z``. The remaining edges are completed to a strong orientation.
    """
    k = g.vertex_count
    if not (0 <= x < k and 0 <= z < k) or x == z:
        raise InputError(f"need two distinct vertices in 0..{k - 1}, got {x}, {z}")
    require_bridgeless(g)
    y = separating_cut_vertex(g, x, z)

    partial = PartialOrientation(g)
    for branch in branches_at(g, y):
        vm = branch.vertex_map
        if x in vm:
            pair = two_disjoint_paths(branch.graph, vm.index(x), vm.index(y))
            forward, backward = pair.p1, pair.p2
            f_edges, b_edges = pair.e1, pair.e2
        elif z in vm:
            pair = two_disjoint_paths(branch.graph, vm.index(y), vm.index(z))
            forward, backward = pair.p2, pair.p1
            f_edges, b_edges = pair.e2, pair.e1
        else:
            continue
        em = branch.edge_map
        # forward path runs as found, backward path is traversed in reverse
        partial.assign_path([vm[v] for v in forward], [em[e] for e in f_edges])
        partial.assign_path([vm[v] for v in reversed(backward)], [em[e] for e in reversed(b_edges)])

    d = extend_orientation(partial)
    dxz = bfs_distances(d, x)[z]
    dzx = bfs_distances(d, z)[x]
    if dxz > k - 2 or dzx > k - 2:
        raise ContractViolation(f"d({x},{z})={dxz}, d({z},{x})={dzx} exceed k-2={k - 2}")
    return d
