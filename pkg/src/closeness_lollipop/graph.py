"""Simple undirected graphs and the definitional closeness.

Vertices are labeled ``1..order``. The closeness of a graph is the sum of
``2**-d(i, j)`` over ordered pairs of distinct vertices; pairs in different
components contribute nothing, so disconnected graphs are fine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .numerics import ZERO, Dyadic

UNREACHABLE = None
"""Distance sentinel for vertices outside the source's component."""


class GraphError(ValueError):
    """Invalid graph construction or mutation."""


class Graph:
    """Immutable simple undirected graph on vertices ``1..order``."""

    __slots__ = ("_order", "_adj")

    def __init__(self, order: int, adjacency: Sequence[Iterable[int]]) -> None:
        if order < 0:
            raise GraphError("order must be nonnegative")
        if len(adjacency) != order:
            raise GraphError("adjacency must have one entry per vertex")
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        for v, nbrs in enumerate(adj, start=1):
            for u in nbrs:
                if not 1 <= u <= order:
                    raise GraphError(f"label {u} out of range 1..{order}")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in adj[u - 1]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self._order = order
        self._adj = adj

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    @property
    def vertices(self) -> range:
        return range(1, self._order + 1)

    def neighbors(self, v: int) -> frozenset:
        self._check_label(v)
        return self._adj[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_label(u)
        self._check_label(v)
        return v in self._adj[u - 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in self.vertices for v in sorted(self._adj[u - 1]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        """Addable links ``(u, v)``, ``u < v``, in lexicographic order."""
        return [
            (u, v)
            for u in self.vertices
            for v in range(u + 1, self._order + 1)
            if v not in self._adj[u - 1]
        ]

    def adjacency_lists(self) -> list[list[int]]:
        return [sorted(a) for a in self._adj]

    def _check_label(self, v: int) -> None:
        if not 1 <= v <= self._order:
            raise GraphError(f"label {v} out of range 1..{self._order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edges()})"


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges collapse into one."""
    if order < 0:
        raise GraphError("order must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        for x in (u, v):
            if not 1 <= x <= order:
                raise GraphError(f"label {x} out of range 1..{order}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u - 1].add(v)
        adj[v - 1].add(u)
    return Graph(order, adj)


@dataclass(frozen=True)
class DistanceRow:
    """Hop distances from ``source``; ``dist[j - 1]`` is the distance to ``j``."""

    source: int
    dist: tuple

    def __getitem__(self, label: int) -> Optional[int]:
        return self.dist[label - 1]


def bfs_row(g: Graph, source: int) -> DistanceRow:
    g._check_label(source)
    dist: list[Optional[int]] = [UNREACHABLE] * g.order
    dist[source - 1] = 0
    queue = deque([source])
    adj = g._adj
    while queue:
        u = queue.popleft()
        du = dist[u - 1] + 1
        for w in adj[u - 1]:
            if dist[w - 1] is UNREACHABLE:
                dist[w - 1] = du
                queue.append(w)
    return DistanceRow(source, tuple(dist))


def _vertex_closeness(adj: tuple, source: int) -> Dyadic:
    # histogram of BFS levels, folded into one mantissa over 2^depth
    counts = []
    seen = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u - 1]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    depth = len(counts)
    mantissa = 0
    for d, c in enumerate(counts, start=1):
        mantissa += c << (depth - d)
    return Dyadic(mantissa, depth)


@dataclass(frozen=True)
class ClosenessReport:
    total: Dyadic
    per_vertex: tuple

    def vertex(self, label: int) -> Dyadic:
        return self.per_vertex[label - 1]


def vertex_closeness(g: Graph, v: int) -> Dyadic:
    """Closeness of a single vertex: sum of ``2**-d(v, j)`` over ``j != v``."""
    g._check_label(v)
    return _vertex_closeness(g._adj, v)


def closeness_oracle(g: Graph) -> ClosenessReport:
    """Closeness by exhaustive BFS from every vertex."""
    per_vertex = tuple(_vertex_closeness(g._adj, v) for v in g.vertices)
    total = ZERO
    for c in per_vertex:
        total = total + c
    return ClosenessReport(total, per_vertex)


def closeness(g: Graph) -> Dyadic:
    return closeness_oracle(g).total


# mutations


def remove_vertex(g: Graph, r: int) -> Graph:
    """Delete ``r`` and its links; labels above ``r`` shift down by one."""
    g._check_label(r)

    def relabel(x: int) -> int:
        return x - 1 if x > r else x

    adj = [
        [relabel(w) for w in nbrs if w != r]
        for v, nbrs in enumerate(g._adj, start=1)
        if v != r
    ]
    return Graph(g.order - 1, adj)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v}) to remove")
    adj = list(g._adj)
    adj[u - 1] = adj[u - 1] - {v}
    adj[v - 1] = adj[v - 1] - {u}
    return Graph(g.order, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-link at {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g._adj)
    adj[u - 1] = adj[u - 1] | {v}
    adj[v - 1] = adj[v - 1] | {u}
    return Graph(g.order, adj)


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Apply a permutation; ``mapping[v - 1]`` is the new label of ``v``."""
    if sorted(mapping) != list(g.vertices):
        raise GraphError("mapping must be a permutation of the labels")
    return build_graph(g.order, [(mapping[u - 1], mapping[v - 1]) for u, v in g.edges()])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps its labels; ``h`` is shifted up by ``g.order``."""
    off = g.order
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    return build_graph(g.order + h.order, edges)


def bridge_join(g1: Graph, g2: Graph, p: int, q: int) -> Graph:
    """Link vertex ``p`` of ``g1`` to vertex ``q`` of ``g2``."""
    g1._check_label(p)
    g2._check_label(q)
    return add_edge(disjoint_union(g1, g2), p, g1.order + q)


def vertex_collapse(g1: Graph, g2: Graph, p: int, q: int) -> Graph:
    """Identify vertex ``q`` of ``g2`` with vertex ``p`` of ``g1``.

    ``g1`` keeps its labels; the remaining vertices of ``g2`` follow in
    their original order.
    """
    g1._check_label(p)
    g2._check_label(q)
    off = g1.order

    def place(x: int) -> int:
        if x == q:
            return p
        return off + (x if x < q else x - 1)

    edges = g1.edges() + [(place(u), place(v)) for u, v in g2.edges()]
    return build_graph(g1.order + g2.order - 1, edges)
