from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import cycle, naive_oriented_diameter
from orientdia.decomposition import decompose, is_bridgeless
from orientdia.errors import InfeasibleError, ResourceError
from orientdia.exact import (
    block_profiles,
    edge_groups,
    oriented_diameter,
    oriented_diameter_bruteforce,
    oriented_diameter_decomposed,
    strong_orientations,
)
from orientdia.families import gen_gnp_extremal, gen_random_bridgeless
from orientdia.graph import Digraph, MultiGraph, diameter, is_strongly_connected
from orientdia.orient import complete_graph

def test_bruteforce_examples() -> None:
    assert oriented_diameter_bruteforce(cycle(5)).value == 4
    assert oriented_diameter_bruteforce(complete_graph(4)).value == 3
    assert oriented_diameter_bruteforce(gen_gnp_extremal(7, 3)[0]).value == 6

def test_bruteforce_witness_is_smallest_optimal_mask() -> None:
    for g in (complete_graph(4), gen_gnp_extremal(7, 3)[0], cycle(5)):
        cert = oriented_diameter_bruteforce(g)
        masks = [mask for mask in range(1 << g.m) if diameter(Digraph.from_mask(g, mask)) == cert.value]
        assert Digraph.from_mask(g, min(masks)) == cert.witness

def test_bruteforce_is_independent_of_worker_count() -> None:
    g = gen_random_bridgeless(10, 2, 3)
    one = oriented_diameter_bruteforce(g, workers=1)
    many = oriented_diameter_bruteforce(g, workers=4)
    assert one == many

def test_thread_cap_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ORIENTDIA_THREADS", "2")
    assert oriented_diameter_bruteforce(cycle(4)).value == 3
    monkeypatch.setenv("ORIENTDIA_THREADS", "many")
    with pytest.raises(ValueError):
        oriented_diameter_bruteforce(cycle(4))

def test_budget_and_bridges() -> None:
    with pytest.raises(ResourceError):
        oriented_diameter_bruteforce(complete_graph(8))
    with pytest.raises(InfeasibleError):
        oriented_diameter_bruteforce(MultiGraph(3, ((0, 1), (1, 2))))
    with pytest.raises(InfeasibleError):
        oriented_diameter_decomposed(MultiGraph(3, ((0, 1), (1, 2))))

def test_edge_groups_tie_cycle_edges() -> None:
    groups = edge_groups(cycle(6))
    assert groups.count == 1
    k4 = edge_groups(complete_graph(4))
    assert k4.count == 6

def test_profiles_triangle_two_attachments(triangle: MultiGraph) -> None:
    profs = block_profiles(triangle, [0, 1])
    assert {p.dist for p in profs} == {((0, 1), (2, 0)), ((0, 2), (1, 0))}
    assert all(p.diameter == 2 for p in profs)

def test_profiles_c4_single_attachment() -> None:
    profs = block_profiles(cycle(4), [0])
    assert len(profs) == 1 and profs[0].out_ecc == (3,) and profs[0].in_ecc == (3,)

def test_profiles_k4_attachment_eccentricity_two() -> None:
    assert any(max(p.out_ecc[0], p.in_ecc[0]) == 2 for p in block_profiles(complete_graph(4), [0]))

@pytest.mark.parametrize("seed", range(10))
def test_profiles_closed_under_reversal(seed: int) -> None:
    g = gen_random_bridgeless(6, 1, seed)
    att = [0, 2, 4]
    vecs = {p.vector() for p in block_profiles(g, att)}
    a = len(att)
    for p in block_profiles(g, att):
        dist_t = tuple(p.dist[j][i] for i in range(a) for j in range(a))
        assert (*dist_t, *p.in_ecc, *p.out_ecc, p.diameter) in vecs

def test_profile_budget() -> None:
    with pytest.raises(ResourceError):
        block_profiles(complete_graph(6), [0], budget=100)

def test_decomposed_examples(bowtie: MultiGraph) -> None:
    assert oriented_diameter_decomposed(bowtie).value == 4
    assert oriented_diameter_decomposed(gen_gnp_extremal(12, 5)[0]).value == 10
    for g in (complete_graph(5), cycle(7)):
        assert oriented_diameter_decomposed(g).value == oriented_diameter_bruteforce(g).value

def test_certificate_json() -> None:
    cert = oriented_diameter(cycle(3), method="brute")
    js = cert.to_json()
    assert set(js) == {"value", "method", "witness_arcs", "explored"} and js["value"] == 2

def test_strong_orientations_of_cycle() -> None:
    assert len(list(strong_orientations(cycle(5)))) == 2

@st.composite
def small_bridgeless(draw: st.DrawFn) -> MultiGraph:
    n = draw(st.integers(3, 7))
    edges = [(i, (i + 1) % n) for i in range(n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                          max_size=4))
    # optionally hang a triangle off a random vertex to get several blocks
    if draw(st.booleans()):
        v = draw(st.integers(0, n - 1))
        edges += [(v, n), (n, n + 1), (n + 1, v)]
        n += 2
    g = MultiGraph(n, tuple(edges + extra))
    assume(is_bridgeless(g))
    return g

@settings(max_examples=60, deadline=None)
@given(small_bridgeless())
def test_both_routes_match_plain_enumeration(g: MultiGraph) -> None:
    expected = naive_oriented_diameter(g)
    brute = oriented_diameter_bruteforce(g)
    dec = oriented_diameter_decomposed(g)
    assert brute.value == dec.value == expected
    for cert in (brute, dec):
        assert cert.witness.is_aligned_with(g)
        assert is_strongly_connected(cert.witness) and diameter(cert.witness) == cert.value

@settings(max_examples=30, deadline=None)
@given(small_bridgeless(), st.data())
def test_adding_an_edge_inside_a_block_never_hurts(g: MultiGraph, data: st.DataObject) -> None:
    dec = decompose(g)
    block = data.draw(st.sampled_from(dec.blocks))
    u, v = data.draw(st.permutations(block))[:2]
    bigger = MultiGraph(g.vertex_count, (*g.edges, (u, v)))
    assert oriented_diameter_bruteforce(bigger).value <= oriented_diameter_bruteforce(g).value
