"""One test per acceptance criterion; each records a PASS/FAIL line."""

from __future__ import annotations

import random
import time

from conftest import record
from orientdia.decomposition import decompose, leaf_lower_bound, structural_inequalities
from orientdia.exact import oriented_diameter_bruteforce, oriented_diameter_decomposed, strong_orientations
from orientdia.families import (
    blockgraph_bound,
    corollary_bound,
    gen_block_extremal,
    gen_gnp_extremal,
    gen_random_block_graph,
    gen_random_bridgeless,
    gen_random_leafy_tree,
    theorem1_bound,
)
from orientdia.graph import bfs_distances, diameter, eccentricities
from orientdia.orient import blockgraph_orientation, complete_orientation, lemma1_orientation, theorem1_orientation


def _corpus_params(count: int, n_max: int, n_min: int = 3) -> list[tuple[int, int, int]]:
    out = []
    for seed in range(count):
        n = n_min + seed % (n_max - n_min + 1)
        p_max = (n - 1) // 2
        out.append((n, 1 + (seed // (n_max - n_min + 1)) % p_max, seed))
    return out


BRIDGELESS_CORPUS = _corpus_params(200, 14)


def test_criterion_01_chain_sharpness() -> None:
    start = time.perf_counter()
    bad = []
    count = 0
    for n in range(5, 13):
        for p in range(2, (n - 1) // 2 + 1):
            cert = oriented_diameter_bruteforce(gen_gnp_extremal(n, p)[0])
            count += 1
            if cert.value != n - p // 2:
                bad.append((n, p, cert.value))
    took = time.perf_counter() - start
    ok = not bad and took < 60
    record(1, ok, f"{count} instances, exact = n - floor(p/2) on all, {took:.1f}s; mismatches {bad}")
    assert ok


def test_criterion_02_order_blocks_bound() -> None:
    start = time.perf_counter()
    bad = []
    for n, p, seed in BRIDGELESS_CORPUS:
        g = gen_random_bridgeless(n, p, seed)
        d, rep = theorem1_orientation(g)
        exact = oriented_diameter_decomposed(g).value
        if not (d.is_aligned_with(g) and rep.diameter <= theorem1_bound(n, p) and exact <= rep.diameter):
            bad.append((n, p, seed, rep.diameter, exact))
    took = time.perf_counter() - start
    ok = not bad and took < 300
    record(2, ok, f"{len(BRIDGELESS_CORPUS)} graphs (n <= 14), constructed <= n - floor(p/2) and exact <= constructed, {took:.1f}s; failures {bad}")
    assert ok


def test_criterion_03_block_graph_bound() -> None:
    start = time.perf_counter()
    bad = []
    for seed in range(200):
        n = 3 + seed % 14
        g = gen_random_block_graph(n, seed)
        d, rep = blockgraph_orientation(g)
        if not (d.is_aligned_with(g) and rep.diameter <= blockgraph_bound(n)):
            bad.append((n, seed, rep.diameter))
    took = time.perf_counter() - start
    ok = not bad and took < 300
    record(3, ok, f"200 block graphs (3 <= n <= 16) within the parity bound, {took:.1f}s; failures {bad}")
    assert ok


def test_criterion_04_block_graph_sharpness() -> None:
    start = time.perf_counter()
    values = {n: oriented_diameter_bruteforce(gen_block_extremal(n)).value for n in range(5, 13)}
    bad = {n: v for n, v in values.items() if v != blockgraph_bound(n)}
    took = time.perf_counter() - start
    ok = not bad and took < 60
    record(4, ok, f"exact values {values} equal the parity bound, {took:.1f}s; mismatches {bad}")
    assert ok


def test_criterion_05_cut_vertex_bound() -> None:
    bad = []
    for n, p, seed in BRIDGELESS_CORPUS:
        g = gen_random_bridgeless(n, p, seed)
        s = decompose(g).s
        _, rep = theorem1_orientation(g)
        if rep.diameter > corollary_bound(n, s):
            bad.append((n, p, seed))
    record(5, not bad, f"{len(BRIDGELESS_CORPUS)} graphs within n - floor((s+1)/2); failures {bad}")
    assert not bad


def test_criterion_06_complete_graphs() -> None:
    start = time.perf_counter()
    bad = []
    for n in range(3, 13):
        if n == 4:
            for v in range(4):
                d = complete_orientation(4, special=v)
                if diameter(d) != 3 or eccentricities(d, v)[2] != 2:
                    bad.append((4, v))
        elif diameter(complete_orientation(n)) != 2:
            bad.append(n)
    took = time.perf_counter() - start
    ok = not bad and took < 1
    record(6, ok, f"diameter 2 for n in 3..12 except n = 4 (diameter 3, ecc(special) = 2), {took:.3f}s; failures {bad}")
    assert ok


def test_criterion_07_two_vertex_lemma() -> None:
    rng = random.Random(7)
    bad = []
    count = 0
    seed = 0
    while count < 100:
        n = 5 + seed % 8
        p = 2 + seed % max(1, (n - 1) // 2 - 1)
        seed += 1
        if 2 * p + 1 > n:
            continue
        g = gen_random_bridgeless(n, p, seed)
        dec = decompose(g)
        owners = dec.blocks_of_vertex
        pairs = [(x, z) for x in range(n) for z in range(n) if x != z and not set(owners[x]) & set(owners[z])]
        if not pairs:
            continue
        x, z = rng.choice(pairs)
        d = lemma1_orientation(g, x, z)
        count += 1
        dxz, dzx = bfs_distances(d, x)[z], bfs_distances(d, z)[x]
        if not d.is_aligned_with(g) or dxz > n - 2 or dzx > n - 2:
            bad.append((n, p, seed, x, z, dxz, dzx))
    record(7, not bad, f"{count} graphs with >= 2 blocks, both distances <= n - 2; failures {bad}")
    assert not bad


def test_criterion_08_oracle_equivalence() -> None:
    start = time.perf_counter()
    bad = []
    count = 0
    seed = 0
    while count < 100:
        n = 3 + seed % 8
        p = 1 + (seed // 8) % ((n - 1) // 2)
        g = gen_random_bridgeless(n, p, seed)
        seed += 1
        if g.m > 16:
            continue
        count += 1
        brute = oriented_diameter_bruteforce(g).value
        dec = oriented_diameter_decomposed(g).value
        if brute != dec:
            bad.append((n, p, seed - 1, brute, dec))
    took = time.perf_counter() - start
    ok = not bad and took < 600
    record(8, ok, f"{count} graphs with m <= 16, decomposed == brute force, {took:.1f}s; mismatches {bad}")
    assert ok


def test_criterion_09_structure() -> None:
    bad_graphs = []
    graphs = 0
    for n, p, seed in BRIDGELESS_CORPUS:
        for g in (gen_random_bridgeless(n, p, seed), gen_random_block_graph(n, seed)):
            graphs += 1
            ineq = {i.name: i.holds for i in structural_inequalities(decompose(g))}
            if not (ineq["n >= 2p+1"] and ineq["n >= 2s+3"]):
                bad_graphs.append((n, p, seed))
    bad_trees = []
    for seed in range(100):
        res = leaf_lower_bound(gen_random_leafy_tree(1 + seed % 6, seed))
        if not res.holds:
            bad_trees.append(seed)
    ok = not bad_graphs and not bad_trees
    record(9, ok, f"{graphs} graphs satisfy n >= 2p+1 and n >= 2s+3; 100 trees meet the leaf bound; failures {bad_graphs} {bad_trees}")
    assert ok


def test_criterion_10_triangle_chain_identity() -> None:
    bad = []
    orientations = 0
    for n in range(5, 11):
        for p in range(2, (n - 1) // 2 + 1):
            g, _ = gen_gnp_extremal(n, p)
            for mask, dist in strong_orientations(g):
                orientations += 1
                for i in range(p - 1):
                    if int(dist[i, i + 1]) + int(dist[i + 1, i]) != 3:
                        bad.append((n, p, mask, i))
    record(10, not bad, f"{orientations} strong orientations of G(n, p), n <= 10: d(a_i, a_i+1) + d(a_i+1, a_i) = 3; failures {bad[:5]}")
    assert not bad
