from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orientdia.errors import InputError
from orientdia.graph import INFINITE, Digraph, MultiGraph
from orientdia.io import dumps, format_digraph, format_graph, parse_digraph, parse_graph, to_dot


def test_parse_with_comments() -> None:
    g = parse_graph("# triangle\n3 3\n0 1\n1 2\n\n2 0\n")
    assert g == MultiGraph(3, ((0, 1), (1, 2), (2, 0)))


@pytest.mark.parametrize(
    ("text", "fragment"),
    [
        ("3 1\nx y z\n", "line 2"),
        ("3 1\n0 a\n", "line 2"),
        ("3 1\n0 3\n", "line 2"),
        ("3 1\n1 1\n", "loop"),
        ("3 2\n0 1\n", "announces 2"),
        ("# only a comment\n", "header"),
    ],
)
def test_parse_errors_carry_location(text: str, fragment: str) -> None:
    with pytest.raises(InputError, match=fragment):
        parse_graph(text)


def test_digraph_roundtrip_and_dot() -> None:
    d = Digraph(4, ((0, 1), (1, 2), (2, 0)))
    assert parse_digraph(format_digraph(d, comment="x")) == d
    dot = to_dot(d)
    assert dot.startswith("digraph {") and "  0 -> 1;" in dot and "  3;" in dot


def test_dumps_is_sorted_and_maps_infinite_to_null() -> None:
    text = dumps({"b": INFINITE, "a": [1]})
    assert text == '{"a": [1], "b": null}\n'
    assert json.loads(text)["b"] is None


@given(st.integers(2, 8).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                       max_size=12).map(lambda es: MultiGraph(n, tuple(es)))))
def test_graph_roundtrip(g: MultiGraph) -> None:
    assert parse_graph(format_graph(g)) == g
