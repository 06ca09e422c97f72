"""Additional closeness: the best closeness reachable by adding one link.

For a lollipop ``L_{m,n}`` the candidate links fall into four shapes:

* A: ``(v_m, v_{m+k})``, ``2 <= k <= n``
* B: ``(v_{m-1}, v_{m+k})`` on ``L_{m,k}``, i.e. the chord reaches the path end
* C: ``(v_{m-1}, v_{m+k})``, ``1 <= k <= n``
* D: ``(v_{m+q}, v_{m+k})``, ``1 <= q <= n-2``, ``q+2 <= k <= n``

Each has a closed form here and a builder for the physical graph so the two
can be compared exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .families import cycle_half_length, cycle_vertex_closeness, gen_lollipop
from .graph import Graph, add_edge, closeness
from .numerics import HALF, Dyadic, pow2
from .robustness import PerturbationKind, PerturbationResult


# oracle


def link_additions(g: Graph) -> list[PerturbationResult]:
    return [
        PerturbationResult(PerturbationKind.LINK_ADDITION, e, closeness(add_edge(g, *e)))
        for e in g.non_edges()
    ]


def additional_oracle(g: Graph) -> tuple[Dyadic, tuple[int, int]]:
    """Maximum closeness over single-link additions, with the smallest pair attaining it."""
    results = link_additions(g)
    if not results:
        raise ValueError("graph is complete; no link can be added")
    best = min(results, key=lambda r: (-r.value, r.target))
    return best.value, best.target


def additional_argmax_set(g: Graph) -> tuple[Dyadic, list[tuple[int, int]]]:
    """The maximum and every link attaining it, in lexicographic order."""
    results = link_additions(g)
    if not results:
        raise ValueError("graph is complete; no link can be added")
    top = max(r.value for r in results)
    return top, [r.target for r in results if r.value == top]


# candidate graphs


@dataclass(frozen=True)
class CaseAParams:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 3 or self.n < 1 or not 2 <= self.k <= self.n:
            raise ValueError(f"case A needs m>=3, n>=1, 2<=k<=n; got {self}")

    def graph(self) -> Graph:
        return add_edge(gen_lollipop(self.m, self.n), self.m, self.m + self.k)


@dataclass(frozen=True)
class CaseBParams:
    m: int
    k: int

    def __post_init__(self):
        if self.m < 3 or self.k < 1:
            raise ValueError(f"case B needs m>=3, k>=1; got {self}")

    def graph(self) -> Graph:
        return add_edge(gen_lollipop(self.m, self.k), self.m - 1, self.m + self.k)


@dataclass(frozen=True)
class CaseCParams:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 3 or self.n < 1 or not 1 <= self.k <= self.n:
            raise ValueError(f"case C needs m>=3, n>=1, 1<=k<=n; got {self}")

    def graph(self) -> Graph:
        return add_edge(gen_lollipop(self.m, self.n), self.m - 1, self.m + self.k)


@dataclass(frozen=True)
class CaseDParams:
    m: int
    n: int
    q: int
    k: int

    def __post_init__(self):
        if (
            self.m < 3
            or self.n < 3
            or not 1 <= self.q <= self.n - 2
            or not self.q + 2 <= self.k <= self.n
        ):
            raise ValueError(f"case D needs m>=3, n>=3, 1<=q<=n-2, q+2<=k<=n; got {self}")

    def graph(self) -> Graph:
        return add_edge(gen_lollipop(self.m, self.n), self.m + self.q, self.m + self.k)


def closeness_A(m: int, n: int, k: int) -> Dyadic:
    CaseAParams(m, n, k)
    t = pow2(k - n)
    return (
        (m + 1 - t) * (m - 1) * HALF
        + 2 * (n - k)
        - 2
        + 2 * t
        + (k + m + 2 - 2 * t) * cycle_vertex_closeness(k + 1)
    )


def closeness_B(m: int, k: int) -> Dyadic:
    CaseBParams(m, k)
    p = k // 2
    base = Dyadic(m * (m + 3)) / 2
    if k % 2 == 0:
        return base + 4 * p - 1 - (3 * p + 2 * m - 1) * pow2(-p)
    return base + 4 * p + 1 - (4 * p + 3 * m) * pow2(-p - 1)


def vertexB_closeness(m: int, k: int) -> Dyadic:
    """Closeness of the path end ``v_{m+k}`` inside graph B."""
    CaseBParams(m, k)
    p = k // 2
    base = Dyadic(3, 1) + Dyadic(m) / 4
    if k % 2 == 0:
        return base - 3 * pow2(-p - 1)
    return base - pow2(-p)


def closeness_C(m: int, n: int, k: int) -> Dyadic:
    CaseCParams(m, n, k)
    p = k // 2
    t = pow2(k - n)
    if k % 2 == 0:
        return (
            m * (m + 4 - t - pow2(2 - p)) * HALF
            + 2 * n
            - 2 * k
            + p * (4 - 3 * pow2(-p))
            - pow2(1 - p)
            + (3 * pow2(-p) - 1) * t
        )
    return (
        m * (m + 4 - t - 3 * pow2(-p)) * HALF
        + 2 * n
        - 2 * k
        + p * (4 - pow2(1 - p))
        + 2
        - pow2(1 - p)
        + (pow2(1 - p) - 1) * t
    )


def closeness_D(m: int, n: int, q: int, k: int) -> Dyadic:
    CaseDParams(m, n, q, k)
    return (
        m * (m + 1 - pow2(-q) - pow2(k - n - q)) * HALF
        + 2 * (n + q - k)
        - 4
        + (k - q + 5 + (m - 3) * pow2(-q) - pow2(1 + k - n)) * cycle_vertex_closeness(k - q + 1)
        + pow2(k - n)
        + 3 * pow2(-q - 1)
        + 3 * pow2(k - n - q - 1)
    )


# comparing A with C


def diff_AC(n: int, k: int) -> Dyadic:
    """Closed form of ``closeness_A - closeness_C`` at the same ``k``.

    The size of the complete part cancels out, so it is not an argument.
    """
    if not 2 <= k <= n:
        raise ValueError(f"A-C difference needs 2 <= k <= n; got k={k}, n={n}")
    p = k // 2
    if k % 2 == 0:
        return Dyadic(3, 1) - (p + 2) * pow2(-p) + pow2(p - n) * (1 - pow2(p - 1))
    return Dyadic(3, 1) - (1 - pow2(1 - p)) * pow2(2 * p - n) - (5 + 2 * p) * pow2(-1 - p)


# comparing A with D


def _parity(length: int) -> str:
    return "even" if cycle_half_length(length)[1] else "odd"


def appendix_d_K(m: int, n: int, p: int) -> Dyadic:
    """The ``r``-free part of ``C(A) - C(D)`` for ``k = 2p-1``, ``k-q+1 = 2r+1``."""
    return (
        m * (Dyadic(3, 1) - pow2(2 * p - n - 2) - 3 * pow2(-p))
        - Dyadic(9, 1)
        - 3 * p * pow2(1 - p)
        + 3 * pow2(2 * p - n - 2)
        + 3 * pow2(p - n)
        - 3 * pow2(-p)
    )


def appendix_d_F(m: int, n: int, p: int, r: int) -> Dyadic:
    """``C(A) - C(D)`` as a function of the half cycle length ``r`` of D."""
    return (
        appendix_d_K(m, n, p)
        + m * (-3 * pow2(2 * r - 2 * p) + pow2(2 * r - n - 1) + pow2(2 + r - 2 * p))
        + r * pow2(2 - r)
        + 5 * pow2(1 - r)
        - 3 * pow2(2 * r - 1 - n)
        - pow2(1 + 2 * p - n - r)
        + 9 * pow2(2 * r - 2 * p)
        - 3 * pow2(2 + r - 2 * p)
    )


def appendix_d_delta(n: int, p: int, r: int) -> Dyadic:
    return 9 * pow2(2 * r - 2 * p) - 3 * pow2(2 * r - n - 1) - pow2(2 + r - 2 * p)


def appendix_d_step(m: int, n: int, p: int, r: int) -> Dyadic:
    """Closed form of ``F(r) - F(r + 1)``."""
    return appendix_d_delta(n, p, r) * (m - 3) + pow2(-r) * (3 + 2 * r - pow2(2 * p - n))


def appendix_d_floor(m: int, n: int, p: int) -> Dyadic:
    """``F`` at its largest admissible ``r = p - 1``."""
    return (m - 3) * (Dyadic(3, 2) - pow2(-p) - pow2(2 * p - n - 3)) + p * pow2(1 - p) - pow2(p - n)


def appendix_d_r_range(n: int, p: int) -> range:
    """Admissible ``r`` for ``k = 2p-1 <= n``: chord within the path, cycle of length >= 3."""
    if 2 * p - 1 > n:
        return range(0)
    return range(1, p)


@dataclass
class DominanceReport:
    m: int
    n: int
    checked: int = 0
    by_parity: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    f_values: dict = field(default_factory=dict)
    f_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.f_violations

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "checked": self.checked,
            "by_parity": self.by_parity,
            "violations": [
                {"q": q, "k": k, "A": a.to_json(), "D": d.to_json()}
                for q, k, a, d in self.violations
            ],
            "f_values": {
                str(p): {str(r): v.to_json() for r, v in rows.items()}
                for p, rows in self.f_values.items()
            },
            "f_violations": [list(v) for v in self.f_violations],
        }


def verify_A_dominates_D(m: int, n: int) -> DominanceReport:
    """Check ``closeness_A(m, n, k) > closeness_D(m, n, q, k)`` for every valid chord.

    All four parity combinations of the two cycle lengths ``k+1`` and
    ``k-q+1`` are covered. For the even/odd combination the report also
    carries the sequence ``F(r)`` and any place where it fails to decrease
    strictly.
    """
    report = DominanceReport(m, n)
    for q in range(1, n - 1):
        for k in range(q + 2, n + 1):
            a = closeness_A(m, n, k)
            d = closeness_D(m, n, q, k)
            key = f"{_parity(k + 1)}/{_parity(k - q + 1)}"
            report.by_parity[key] = report.by_parity.get(key, 0) + 1
            report.checked += 1
            if not a > d:
                report.violations.append((q, k, a, d))
    for p in range(2, (n + 1) // 2 + 1):
        rs = appendix_d_r_range(n, p)
        if not rs:
            continue
        values = {r: appendix_d_F(m, n, p, r) for r in rs}
        report.f_values[p] = values
        for r in rs:
            if r + 1 in values and not values[r] - values[r + 1] > 0:
                report.f_violations.append((p, r))
    return report


# optimal chord for case A


def eq14_sign(m: int, n: int, p: int) -> float:
    """Scaled derivative of ``closeness_A`` in ``p`` along odd chords ``k = 2p-1``.

    Binary64 and advisory only: the ``2/ln 2`` term is irrational.
    """
    return 2 * p + m + 1 + 2.0 ** (2 * p - n) - (m / 3 + 1) * 2.0 ** (3 * p - n - 1) - 2 / math.log(2)


def eq15_sign(m: int, n: int, p: int) -> float:
    """Scaled derivative of ``closeness_A`` in ``p`` along even chords ``k = 2p``.

    Binary64 and advisory only.
    """
    return 2 * p + m + 2 + 2.0 ** (1 + 2 * p - n) - (m + 3) * 2.0 ** (3 * p - n - 1) - 2 / math.log(2)


def first_negative(sign, m: int, n: int, start: int = 2, limit: int = 4096) -> int:
    p = start
    while sign(m, n, p) >= 0:
        p += 1
        if p > limit:
            raise RuntimeError("sign function never turned negative")
    return p


@dataclass(frozen=True)
class OptimalK:
    """Exhaustive optimum ``k`` for case A plus the advisory derivative data."""

    k: int
    value: Dyadic
    p_star_odd: int
    p_star_even: int
    derivative_k: Optional[int]

    @property
    def p_star(self) -> int:
        """The ``p*`` belonging to the parity of the optimal ``k``."""
        return self.p_star_odd if self.k % 2 else self.p_star_even

    def __iter__(self):
        return iter((self.k, self.value))


def optimal_k_scan(m: int, n: int) -> OptimalK:
    """Best chord ``(v_m, v_{m+k})`` by scanning every ``k`` in ``[2, n]``.

    The scan decides. The derivative sign tests are evaluated alongside:
    their candidates ``k = 2p*-1, 2p*-3`` (odd) and ``2p*, 2p*-2`` (even)
    are compared through the exact closed form to give ``derivative_k``.
    """
    if n < 5:
        raise ValueError(f"optimal chord scan needs n >= 5, got {n}")
    values = {k: closeness_A(m, n, k) for k in range(2, n + 1)}
    best = min(values, key=lambda k: (-values[k], k))
    p_odd = first_negative(eq14_sign, m, n)
    p_even = first_negative(eq15_sign, m, n)
    candidates = [
        k for k in (2 * p_odd - 1, 2 * p_odd - 3, 2 * p_even, 2 * p_even - 2) if 2 <= k <= n
    ]
    derivative_k = min(candidates, key=lambda k: (-values[k], k)) if candidates else None
    return OptimalK(best, values[best], p_odd, p_even, derivative_k)


def additional_lollipop(m: int, n: int) -> Dyadic:
    if m < 3 or n < 1:
        raise ValueError(f"lollipop needs m >= 3, n >= 1; got m={m}, n={n}")
    if n == 1:
        return Dyadic(m * m) / 2 + 1
    if n == 2:
        return Dyadic(m * (m + 1)) / 2 + 2
    if n == 3:
        return Dyadic(m * (2 * m + 3)) / 4 + 4
    if n == 4:
        return Dyadic(m * (m + 2)) / 2 + 6
    return optimal_k_scan(m, n).value
