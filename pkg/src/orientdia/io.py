"""Edge-list text format, arc lists, DOT export and JSON helpers.

Format::

    # optional comment lines
    n m
    u v        (m lines, 0 <= u, v < n, u != v)

For a digraph the same layout is used and ``u v`` means the arc ``u -> v``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from orientdia.errors import InputError
from orientdia.graph import INFINITE, Digraph, MultiGraph


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse the edge-list layout into ``(n, pairs)``; errors carry line numbers."""
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {line!r}")
        a, b = (_parse_int(t, lineno) for t in tokens)
        if header is None:
            if a < 0 or b < 0:
                raise InputError(f"line {lineno}: header 'n m' must be non-negative")
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if a == b:
            raise InputError(f"line {lineno}: loop at vertex {a}")
        pairs.append((a, b))
    if header is None:
        raise InputError("missing 'n m' header line")
    if len(pairs) != header[1]:
        raise InputError(f"header announces {header[1]} edges but {len(pairs)} were given")
    return header[0], pairs


def parse_graph(text: str) -> MultiGraph:
    n, pairs = parse_pairs(text)
    return MultiGraph(n, tuple(pairs))


def parse_digraph(text: str) -> Digraph:
    n, pairs = parse_pairs(text)
    return Digraph(n, tuple(pairs))


def read_graph(path: str | Path) -> MultiGraph:
    return parse_graph(_read(path))


def read_digraph(path: str | Path) -> Digraph:
    return parse_digraph(_read(path))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def format_graph(g: MultiGraph, comment: str | None = None) -> str:
    return _format(g.vertex_count, g.edges, comment)


def format_digraph(d: Digraph, comment: str | None = None) -> str:
    return _format(d.vertex_count, d.arcs, comment)


def _format(n: int, pairs: tuple[tuple[int, int], ...], comment: str | None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{n} {len(pairs)}")
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph, name: str = "") -> str:
    """DOT text; isolated vertices are listed so the vertex set survives."""
    head = f"digraph {name} {{" if name else "digraph {"
    body = [f"  {v};" for v in range(d.vertex_count) if not d.out_adjacency[v] and not d.in_adjacency[v]]
    body += [f"  {u} -> {v};" for u, v in d.arcs]
    return "\n".join([head, *body, "}"]) + "\n"


def _default(obj: Any) -> Any:
    if obj is INFINITE:
        return None
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Single-object, key-sorted, newline-terminated JSON (``INFINITE`` -> null)."""
    return json.dumps(obj, sort_keys=True, default=_default) + "\n"
