"""Plain-text edge lists.

::

    # optional comments
    order 4
    1 2
    1 3

The ``order`` header is optional; without it the order is the largest
label mentioned. Labels are 1-based.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import Graph, GraphError, build_graph


class EdgeListError(ValueError):
    """Malformed edge-list text."""


def parse_edge_list(text: str) -> Graph:
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "order":
            if order is not None or edges:
                raise EdgeListError(f"line {lineno}: 'order' must be the first entry")
            if len(fields) != 2:
                raise EdgeListError(f"line {lineno}: expected 'order N'")
            try:
                order = int(fields[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: bad order {fields[1]!r}") from None
            if order < 1:
                raise EdgeListError(f"line {lineno}: order must be positive")
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer label in {line!r}") from None
        edges.append((u, v))
    if order is None:
        if not edges:
            raise EdgeListError("empty edge list without an 'order' header")
        order = max(max(e) for e in edges)
    try:
        return build_graph(order, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"order {g.order}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8", newline="\n")
