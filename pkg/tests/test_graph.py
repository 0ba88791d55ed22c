from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cycle
from orientdia.errors import ContractViolation, InputError
from orientdia.families import gen_block_extremal_with_orientation, gen_gnp_extremal
from orientdia.graph import (
    INFINITE,
    Digraph,
    MultiGraph,
    bfs_distances,
    diameter,
    diametral_pair,
    distance_matrix,
    eccentricities,
    is_strongly_connected,
)
from orientdia.orient import complete_orientation


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def test_infinite_is_a_singleton_above_every_int() -> None:
    assert INFINITE > 10**9
    assert not INFINITE < 3
    assert INFINITE == type(INFINITE)()
    assert max(5, INFINITE) is INFINITE


def test_loops_are_rejected() -> None:
    with pytest.raises(InputError):
        MultiGraph(2, ((0, 0),))
    with pytest.raises(InputError):
        MultiGraph(2, ((0, 2),))


def test_parallel_edges_are_kept() -> None:
    g = MultiGraph(2, ((0, 1), (1, 0)))
    assert g.m == 2 and g.degree(0) == 2


def test_bfs_examples() -> None:
    assert bfs_distances(directed_cycle(3), 0) == [0, 1, 2]
    assert bfs_distances(MultiGraph(3, ((0, 1), (1, 2))), 1) == [1, 0, 1]
    assert bfs_distances(Digraph(3, ((0, 1),)), 0) == [0, 1, INFINITE]
    with pytest.raises(InputError):
        bfs_distances(directed_cycle(3), 3)


def test_diameter_examples() -> None:
    assert diameter(directed_cycle(5)) == 4
    assert diameter(gen_gnp_extremal(12, 5)[1]) == 10
    assert diameter(gen_block_extremal_with_orientation(12)[1]) == 9
    assert diameter(Digraph(2, ((0, 1),))) is INFINITE
    assert diameter(Digraph(1, ())) == 0


def test_strong_connectivity_examples() -> None:
    assert is_strongly_connected(directed_cycle(3))
    assert not is_strongly_connected(Digraph(2, ((0, 1),)))
    assert is_strongly_connected(gen_gnp_extremal(12, 5)[1])


def test_eccentricities_examples() -> None:
    for v in range(4):
        assert eccentricities(directed_cycle(4), v) == (3, 3, 3)
    for v in range(3):
        assert eccentricities(directed_cycle(3), v) == (2, 2, 2)
    for v in range(4):
        assert eccentricities(complete_orientation(4, special=v), v)[2] == 2
    with pytest.raises(ContractViolation):
        eccentricities(Digraph(2, ((0, 1),)), 0)


def test_diametral_pair_is_lexicographically_first() -> None:
    assert diametral_pair(directed_cycle(4)) == (0, 3)


def test_cycle_has_exactly_two_strong_orientations() -> None:
    from itertools import product

    g = cycle(6)
    strong = [f for f in product((False, True), repeat=6) if is_strongly_connected(Digraph.from_flags(g, f))]
    assert len(strong) == 2
    assert all(diameter(Digraph.from_flags(g, f)) == 5 for f in strong)


def test_orientation_bijection() -> None:
    g = MultiGraph(3, ((0, 1), (1, 2), (0, 1)))
    assert Digraph(3, ((1, 0), (2, 1), (0, 1))).is_orientation_of(g)
    assert not Digraph(3, ((1, 0), (2, 1), (1, 2))).is_orientation_of(g)
    d = Digraph(3, ((2, 1), (0, 1), (1, 0))).align_to(g)
    assert d.is_aligned_with(g)
    assert d.flags_against(g).count(True) == 2


edge_lists = st.integers(2, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=14),
    )
)


@given(edge_lists)
def test_undirected_distances_are_symmetric(data: tuple[int, list[tuple[int, int]]]) -> None:
    n, edges = data
    dm = distance_matrix(MultiGraph(n, tuple(edges)))
    assert all(dm[u][v] == dm[v][u] for u in range(n) for v in range(n))


@given(edge_lists)
def test_diameter_infinite_iff_not_strong(data: tuple[int, list[tuple[int, int]]]) -> None:
    n, arcs = data
    d = Digraph(n, tuple(arcs))
    assert (diameter(d) is INFINITE) == (not is_strongly_connected(d))


@given(edge_lists)
def test_reversal_keeps_diameter_and_swaps_eccentricities(data: tuple[int, list[tuple[int, int]]]) -> None:
    n, arcs = data
    d = Digraph(n, tuple(arcs))
    r = d.reverse()
    assert diameter(r) == diameter(d)
    if is_strongly_connected(d):
        for v in range(n):
            o, i, e = eccentricities(d, v)
            assert eccentricities(r, v) == (i, o, e)


@given(edge_lists)
def test_triangle_inequality(data: tuple[int, list[tuple[int, int]]]) -> None:
    n, arcs = data
    dm = distance_matrix(Digraph(n, tuple(arcs)))
    for u in range(n):
        assert dm[u][u] == 0
        for v in range(n):
            for w in range(n):
                if dm[u][v] is not INFINITE and dm[v][w] is not INFINITE:
                    assert dm[u][w] <= dm[u][v] + dm[v][w]
