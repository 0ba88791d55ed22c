from __future__ import annotations

from itertools import product

import pytest

from orientdia.graph import INFINITE, Digraph, MultiGraph, diameter


def naive_oriented_diameter(g: MultiGraph) -> int | None:
    """Plain enumeration of all 2^m orientations, BFS diameters; None if none is strong."""
    best = None
    for flags in product((False, True), repeat=g.m):
        d = diameter(Digraph.from_flags(g, flags))
        if d is not INFINITE and (best is None or d < best):
            best = d
    return best


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


@pytest.fixture
def triangle() -> MultiGraph:
    return cycle(3)


@pytest.fixture
def bowtie() -> MultiGraph:
    # two triangles sharing vertex 2
    return MultiGraph(5, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)))


ACCEPTANCE_LINES: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[criterion] = line
    print(line)


def pytest_terminal_summary(terminalreporter) -> None:  # type: ignore[no-untyped-def]
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
