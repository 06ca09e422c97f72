"""Vertex and link residual closeness.

The exhaustive oracles work on any graph. For lollipops there are closed
forms, plus one evaluator per deletion case so that each case formula can
be compared against the oracle on the graph it describes.

Path positions are relative: position ``j`` means vertex ``v_{m+j}`` and
link position ``k`` means the link ``(v_{m+k}, v_{m+k+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .families import (
    LollipopSpec,
    _as_spec,
    closeness_lollipop,
    gen_lollipop,
)
from .graph import Graph, closeness, remove_edge, remove_vertex
from .numerics import HALF, Dyadic, pow2


class PerturbationKind(str, Enum):
    VERTEX_REMOVAL = "vertex-removal"
    LINK_REMOVAL = "link-removal"
    LINK_ADDITION = "link-addition"


@dataclass(frozen=True)
class PerturbationResult:
    kind: PerturbationKind
    target: Union[int, tuple]
    value: Dyadic


@dataclass
class CaseBreakdown:
    """Closed-form closeness per deletion case, keyed ``"4.1"``.. or ``"5.1"``..

    For cases that range over a path position, ``positions`` records the
    position attaining the entry.
    """

    entries: dict = field(default_factory=dict)
    positions: dict = field(default_factory=dict)

    def minimum(self) -> tuple[str, Dyadic]:
        case = min(self.entries, key=lambda c: (self.entries[c], c))
        return case, self.entries[case]

    def to_json(self) -> dict:
        out = {}
        for case, value in self.entries.items():
            item = value.to_json()
            if case in self.positions:
                item["position"] = self.positions[case]
            out[case] = item
        return out


@dataclass(frozen=True)
class OrderingClaim:
    """A printed inequality ``difference > bound`` between two cases."""

    name: str
    difference: Dyadic
    bound: Dyadic

    @property
    def holds(self) -> bool:
        return self.difference > self.bound


# oracles


def vertex_removals(g: Graph) -> list[PerturbationResult]:
    return [
        PerturbationResult(PerturbationKind.VERTEX_REMOVAL, r, closeness(remove_vertex(g, r)))
        for r in g.vertices
    ]


def link_removals(g: Graph) -> list[PerturbationResult]:
    return [
        PerturbationResult(PerturbationKind.LINK_REMOVAL, e, closeness(remove_edge(g, *e)))
        for e in g.edges()
    ]


def _argmin(results: list[PerturbationResult]) -> tuple[Dyadic, Union[int, tuple]]:
    best = min(results, key=lambda r: (r.value, r.target))
    return best.value, best.target


def vr_oracle(g: Graph) -> tuple[Dyadic, int]:
    """Minimum closeness over single-vertex deletions and the smallest label attaining it."""
    if g.order < 2:
        raise ValueError("vertex residual closeness needs at least 2 vertices")
    return _argmin(vertex_removals(g))


def lr_oracle(g: Graph) -> tuple[Dyadic, tuple[int, int]]:
    """Minimum closeness over single-link deletions and the smallest edge attaining it."""
    if g.size < 1:
        raise ValueError("link residual closeness needs at least one edge")
    return _argmin(link_removals(g))


# closed forms


def vr_lollipop(spec_or_m, n=None) -> Dyadic:
    spec = _as_spec(spec_or_m, n)
    m, n = spec.m, spec.n
    return Dyadic((m - 1) * (m - 2)) / 2 + 2 * n + pow2(2 - n) - 4


def lr_lollipop(spec_or_m, n=None) -> Dyadic:
    spec = _as_spec(spec_or_m, n)
    m, n = spec.m, spec.n
    return Dyadic(m * (m - 1)) / 2 + 2 * n + pow2(2 - n) - 4


# vertex deletion cases

VR_CASES = ("4.1", "4.2", "4.3", "4.4", "4.5")


def vr_case_positions(spec: LollipopSpec, case: str) -> list[Optional[int]]:
    """Parameter values a case ranges over; ``[None]`` for single-graph cases."""
    n = spec.n
    if case in ("4.1", "4.2", "4.3"):
        return [None]
    if case == "4.4":
        return [None] if n >= 2 else []
    if case == "4.5":
        return list(range(2, n))
    raise KeyError(case)


def vr_case_formula(spec: LollipopSpec, case: str, j: Optional[int] = None) -> Dyadic:
    m, n = spec.m, spec.n
    if case == "4.1":
        # K_{m-1} and P_n
        return Dyadic((m - 1) * (m - 2)) / 2 + 2 * n - 4 + pow2(2 - n)
    if case == "4.2":
        # L_{m-1,n}
        return (m - 1) * (m - pow2(1 - n)) * HALF + 2 * n + 3 * pow2(-n) - 3
    if case == "4.3":
        # L_{m,n-1}
        return m * (m + 1 - pow2(2 - n)) * HALF + 2 * n + 3 * pow2(1 - n) - 5
    if case == "4.4":
        # K_m and P_{n-1}
        return Dyadic(m * (m - 1)) / 2 + 2 * n - 6 + pow2(3 - n)
    if case == "4.5":
        # L_{m,j-1} and P_{n-j}
        if j is None or not 2 <= j <= n - 1:
            raise ValueError(f"case 4.5 needs 2 <= j <= n-1, got j={j}")
        return m * (m + 1 - pow2(2 - j)) * HALF + 2 * n - 9 + 3 * pow2(1 - j) + pow2(2 + j - n)
    raise KeyError(case)


def vr_case_graph(spec: LollipopSpec, case: str, j: Optional[int] = None) -> Graph:
    """The lollipop with the case's vertex physically deleted."""
    m, n = spec.m, spec.n
    target = {
        "4.1": m,
        "4.2": 1,
        "4.3": m + n,
        "4.4": m + 1,
    }.get(case)
    if case == "4.5":
        if j is None or not 2 <= j <= n - 1:
            raise ValueError(f"case 4.5 needs 2 <= j <= n-1, got j={j}")
        target = m + j
    if target is None:
        raise KeyError(case)
    return remove_vertex(gen_lollipop(spec), target)


def vr_cases(spec_or_m, n=None) -> CaseBreakdown:
    spec = _as_spec(spec_or_m, n)
    out = CaseBreakdown()
    for case in VR_CASES:
        positions = vr_case_positions(spec, case)
        if not positions:
            continue
        if positions == [None]:
            out.entries[case] = vr_case_formula(spec, case)
        else:
            value, pos = min((vr_case_formula(spec, case, j), j) for j in positions)
            out.entries[case] = value
            out.positions[case] = pos
    return out


def vr_ordering_claims(spec_or_m, n=None) -> list[OrderingClaim]:
    """The inequalities used to rule out cases 4.2 to 4.5, with their printed bounds."""
    spec = _as_spec(spec_or_m, n)
    f = lambda case, j=None: vr_case_formula(spec, case, j)  # noqa: E731
    g1 = f("4.1")
    claims = [
        OrderingClaim("C(G2)-C(G1)>0", f("4.2") - g1, Dyadic(0)),
        OrderingClaim("C(G3)-C(G1)>1", f("4.3") - g1, Dyadic(1)),
    ]
    if spec.n >= 2:
        g4 = f("4.4")
        claims.append(OrderingClaim("C(G4)-C(G1)>1", g4 - g1, Dyadic(1)))
        for j in vr_case_positions(spec, "4.5"):
            claims.append(OrderingClaim(f"C(G5[j={j}])-C(G4)>0", f("4.5", j) - g4, Dyadic(0)))
    return claims


# link deletion cases

LR_CASES = ("5.1", "5.2", "5.3", "5.4", "5.5")


def lr_case_positions(spec: LollipopSpec, case: str) -> list[Optional[int]]:
    n = spec.n
    if case in ("5.1", "5.4", "5.5"):
        return [None]
    if case == "5.2":
        return [None] if n >= 2 else []
    if case == "5.3":
        return list(range(1, n - 1))
    raise KeyError(case)


def lr_case_formula(spec: LollipopSpec, case: str, k: Optional[int] = None) -> Dyadic:
    m, n = spec.m, spec.n
    if case == "5.1":
        # K_m and P_n
        return Dyadic(m * (m - 1)) / 2 + 2 * n - 4 + pow2(2 - n)
    if case == "5.2":
        # L_{m,n-1}
        return m * (m + 1 - pow2(2 - n)) * HALF + 2 * n - 5 + 3 * pow2(1 - n)
    if case == "5.3":
        # L_{m,k} and P_{n-k}
        if k is None or not 1 <= k <= n - 2:
            raise ValueError(f"case 5.3 needs 1 <= k <= n-2, got k={k}")
        return m * (m + 1 - pow2(1 - k)) * HALF + 2 * n - 7 + 3 * pow2(-k) + pow2(2 + k - n)
    if case == "5.4":
        return closeness_lollipop(spec) - 1 + pow2(-n - 1)
    if case == "5.5":
        return closeness_lollipop(spec) - HALF
    raise KeyError(case)


def lr_case_edge(spec: LollipopSpec, case: str, k: Optional[int] = None) -> tuple[int, int]:
    m, n = spec.m, spec.n
    if case == "5.3":
        if k is None or not 1 <= k <= n - 2:
            raise ValueError(f"case 5.3 needs 1 <= k <= n-2, got k={k}")
        return (m + k, m + k + 1)
    edge = {
        "5.1": (m, m + 1),
        "5.2": (m + n - 1, m + n),
        "5.4": (1, m),
        "5.5": (1, 2),
    }.get(case)
    if edge is None:
        raise KeyError(case)
    return edge


def lr_case_graph(spec: LollipopSpec, case: str, k: Optional[int] = None) -> Graph:
    return remove_edge(gen_lollipop(spec), *lr_case_edge(spec, case, k))


def lr_cases(spec_or_m, n=None) -> CaseBreakdown:
    spec = _as_spec(spec_or_m, n)
    out = CaseBreakdown()
    for case in LR_CASES:
        positions = lr_case_positions(spec, case)
        if not positions:
            continue
        if positions == [None]:
            out.entries[case] = lr_case_formula(spec, case)
        else:
            value, pos = min((lr_case_formula(spec, case, k), k) for k in positions)
            out.entries[case] = value
            out.positions[case] = pos
    return out


def lr_ordering_claims(spec_or_m, n=None) -> list[OrderingClaim]:
    spec = _as_spec(spec_or_m, n)
    f = lambda case, k=None: lr_case_formula(spec, case, k)  # noqa: E731
    g1 = f("5.1")
    zero = Dyadic(0)
    claims = []
    if spec.n >= 2:
        claims.append(OrderingClaim("C(G2)-C(G1)>0", f("5.2") - g1, zero))
    for k in lr_case_positions(spec, "5.3"):
        claims.append(OrderingClaim(f"C(G3[k={k}])-C(G1)>0", f("5.3", k) - g1, zero))
    claims.append(OrderingClaim("C(G4)-C(G1)>0", f("5.4") - g1, zero))
    claims.append(OrderingClaim("C(G5)-C(G1)>0", f("5.5") - g1, zero))
    return claims


def bridge_removal_via_join(spec_or_m, n=None) -> Dyadic:
    """Case 5.1 written as the lollipop minus its bridge-join term."""
    spec = _as_spec(spec_or_m, n)
    return closeness_lollipop(spec) - (spec.m + 1) * (1 - pow2(-spec.n))

