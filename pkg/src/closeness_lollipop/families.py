"""Named graph families and their closed-form closeness.

Lollipop labeling: ``v_1..v_m`` form the complete part, ``v_{m+1}..v_{m+n}``
the path, and the bridge is ``(v_m, v_{m+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph
from .numerics import HALF, Dyadic, pow2


@dataclass(frozen=True)
class LollipopSpec:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"lollipop needs m >= 3, got {self.m}")
        if self.n < 1:
            raise ValueError(f"lollipop needs n >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.m + self.n

    @property
    def bridge(self) -> tuple[int, int]:
        return (self.m, self.m + 1)


def _as_spec(spec_or_m, n=None) -> LollipopSpec:
    if isinstance(spec_or_m, LollipopSpec):
        return spec_or_m
    return LollipopSpec(spec_or_m, n)


# generators


def gen_complete(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m}")
    return build_graph(m, [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(v, v + 1) for v in range(1, n)])


def gen_cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError(f"cycle needs length >= 3, got {length}")
    return build_graph(length, [(v, v % length + 1) for v in range(1, length + 1)])


def lollipop_edges(m: int, n: int) -> list[tuple[int, int]]:
    edges = [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)]
    edges += [(v, v + 1) for v in range(m, m + n)]
    return edges


def gen_lollipop(spec_or_m, n=None) -> Graph:
    spec = _as_spec(spec_or_m, n)
    return build_graph(spec.order, lollipop_edges(spec.m, spec.n))


# closed forms


def closeness_complete(m: int) -> Dyadic:
    if m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m}")
    return Dyadic(m * (m - 1)) / 2


def closeness_path(n: int) -> Dyadic:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return 2 * n - 4 + pow2(2 - n)


def cycle_half_length(length: int) -> tuple[int, bool]:
    """Split a cycle length into ``(p, even)`` with length ``2p`` or ``2p + 1``.

    This is the single place where cycle parity is decided; everything
    keyed on a cycle (including the chord-shape factors for augmented lollipops)
    goes through it.
    """
    if length < 3:
        raise ValueError(f"cycle needs length >= 3, got {length}")
    return length // 2, length % 2 == 0


def cycle_vertex_closeness(length: int) -> Dyadic:
    """Closeness of one vertex of ``C_length``, i.e. ``C(C_len) / len``."""
    p, even = cycle_half_length(length)
    if even:
        return 2 - 3 * pow2(-p)
    return 2 - pow2(1 - p)


def closeness_cycle(length: int) -> Dyadic:
    p, even = cycle_half_length(length)
    if even:
        return 4 * p * (1 - 3 * pow2(-p - 1))
    return 2 * (2 * p + 1) * (1 - pow2(-p))


def closeness_lollipop(spec_or_m, n=None) -> Dyadic:
    spec = _as_spec(spec_or_m, n)
    m, n = spec.m, spec.n
    return m * (m + 1 - pow2(1 - n)) * HALF + 2 * n + 3 * pow2(-n) - 3


def lollipop_closeness_unchecked(m: int, n: int) -> Dyadic:
    """The lollipop closed form evaluated without the ``m >= 3, n >= 1`` guard.

    Used where a deletion leaves ``L_{2,n}`` or ``L_{m,0}``; the expression
    still describes those graphs.
    """
    return m * (m + 1 - pow2(1 - n)) * HALF + 2 * n + 3 * pow2(-n) - 3


def leaf_closeness(n: int) -> Dyadic:
    """Closeness of an end vertex of ``P_n``."""
    return 1 - pow2(1 - n)


def join_closeness(c1: Dyadic, c2: Dyadic, cp: Dyadic, cq: Dyadic) -> Dyadic:
    """Closeness after linking ``p`` in ``G1`` to ``q`` in ``G2`` by a new edge."""
    return c1 + c2 + (1 + cp) * (1 + cq)


def collapse_closeness(c1: Dyadic, c2: Dyadic, cp: Dyadic, cq: Dyadic) -> Dyadic:
    """Closeness after merging ``p`` in ``G1`` and ``q`` in ``G2`` into one vertex."""
    return c1 + c2 + 2 * cp * cq
