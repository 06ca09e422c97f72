"""Formula-vs-oracle sweeps over grids of lollipop parameters.

Each suite walks ``(m, n)`` cells in order and records, per cell, every
comparison it made. Formula evaluators are looked up on their modules at
call time so a patched evaluator is what gets verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import additional, families, robustness
from .graph import closeness, vertex_closeness
from .numerics import Dyadic


@dataclass
class Check:
    name: str
    ok: bool
    formula: object = None
    oracle: object = None
    value: object = None

    def to_json(self) -> dict:
        out = {"check": self.name, "ok": self.ok}
        for key in ("formula", "oracle", "value"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val.to_json() if isinstance(val, Dyadic) else val
        return out


@dataclass
class Cell:
    params: dict
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def equal(self, name: str, formula, oracle) -> None:
        self.checks.append(Check(name, formula == oracle, formula, oracle))

    def claim(self, name: str, holds: bool, value=None) -> None:
        self.checks.append(Check(name, bool(holds), value=value))

    def to_json(self) -> dict:
        out = dict(self.params)
        out["status"] = "ok" if self.ok else "fail"
        out["checks"] = len(self.checks)
        failures = [c.to_json() for c in self.checks if not c.ok]
        if failures:
            out["failures"] = failures
        return out


@dataclass
class SuiteReport:
    suite: str
    m_range: tuple
    n_range: tuple
    cells: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def first_divergence(self):
        for cell in self.cells:
            for check in cell.checks:
                if not check.ok:
                    return cell, check
        return None

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "m_range": list(self.m_range),
            "n_range": list(self.n_range),
            "cells_checked": len(self.cells),
            "comparisons": sum(len(c.checks) for c in self.cells),
            "ok": self.ok,
            "cells": [c.to_json() for c in self.cells],
        }
        first = self.first_divergence()
        if first is not None:
            cell, check = first
            out["first_divergence"] = {"cell": cell.params, **check.to_json()}
        return out


def _grid(m_range, n_range, min_n: int = 1):
    for m in range(m_range[0], m_range[1] + 1):
        for n in range(max(n_range[0], min_n), n_range[1] + 1):
            yield m, n


def verify_families(m_range, n_range) -> SuiteReport:
    rep = SuiteReport("families", m_range, n_range)
    m_lo, m_hi = m_range
    n_lo, n_hi = n_range
    for m in range(max(1, m_lo), m_hi + 1):
        cell = Cell({"family": "complete", "m": m})
        cell.equal("complete", families.closeness_complete(m), closeness(families.gen_complete(m)))
        rep.cells.append(cell)
    for n in range(max(1, n_lo), n_hi + 1):
        cell = Cell({"family": "path", "n": n})
        cell.equal("path", families.closeness_path(n), closeness(families.gen_path(n)))
        rep.cells.append(cell)
    for length in range(3, max(3, m_hi, n_hi) + 1):
        cell = Cell({"family": "cycle", "len": length})
        cell.equal("cycle", families.closeness_cycle(length), closeness(families.gen_cycle(length)))
        rep.cells.append(cell)
    for m, n in _grid(m_range, n_range):
        cell = Cell({"family": "lollipop", "m": m, "n": n})
        cell.equal(
            "lollipop", families.closeness_lollipop(m, n), closeness(families.gen_lollipop(m, n))
        )
        rep.cells.append(cell)
    return rep


def verify_vr(m_range, n_range) -> SuiteReport:
    rep = SuiteReport("vr", m_range, n_range)
    for m, n in _grid(m_range, n_range):
        spec = families.LollipopSpec(m, n)
        cell = Cell({"m": m, "n": n})
        value, argmin = robustness.vr_oracle(families.gen_lollipop(spec))
        cell.equal("vr", robustness.vr_lollipop(spec), value)
        cell.equal("argmin", m, argmin)
        for case in robustness.VR_CASES:
            for j in robustness.vr_case_positions(spec, case):
                name = case if j is None else f"{case}[j={j}]"
                cell.equal(
                    name,
                    robustness.vr_case_formula(spec, case, j),
                    closeness(robustness.vr_case_graph(spec, case, j)),
                )
        for claim in robustness.vr_ordering_claims(spec):
            cell.claim(claim.name, claim.holds, claim.difference)
        rep.cells.append(cell)
    return rep


def verify_lr(m_range, n_range) -> SuiteReport:
    rep = SuiteReport("lr", m_range, n_range)
    for m, n in _grid(m_range, n_range):
        spec = families.LollipopSpec(m, n)
        cell = Cell({"m": m, "n": n})
        value, argmin = robustness.lr_oracle(families.gen_lollipop(spec))
        cell.equal("lr", robustness.lr_lollipop(spec), value)
        cell.equal("argmin", [m, m + 1], list(argmin))
        for case in robustness.LR_CASES:
            for k in robustness.lr_case_positions(spec, case):
                name = case if k is None else f"{case}[k={k}]"
                cell.equal(
                    name,
                    robustness.lr_case_formula(spec, case, k),
                    closeness(robustness.lr_case_graph(spec, case, k)),
                )
        for claim in robustness.lr_ordering_claims(spec):
            cell.claim(claim.name, claim.holds, claim.difference)
        rep.cells.append(cell)
    return rep


def verify_additional(m_range, n_range) -> SuiteReport:
    rep = SuiteReport("additional", m_range, n_range)
    for m, n in _grid(m_range, n_range):
        cell = Cell({"m": m, "n": n})
        g = families.gen_lollipop(m, n)
        top, argmax = additional.additional_argmax_set(g)
        cell.equal("additional", additional.additional_lollipop(m, n), top)
        if n >= 5:
            cell.claim("argmax is (v_m, v_m+k)", all(u == m for u, _ in argmax), str(argmax))
        elif n == 4:
            both = any(u < m and v == m + 3 for u, v in argmax) and (m, m + 4) in argmax
            cell.claim("argmax has C-type and A-type links", both)
        for k in range(2, n + 1):
            p = additional.CaseAParams(m, n, k)
            cell.equal(f"A[k={k}]", additional.closeness_A(m, n, k), closeness(p.graph()))
        for k in range(1, n + 1):
            p = additional.CaseCParams(m, n, k)
            cell.equal(f"C[k={k}]", additional.closeness_C(m, n, k), closeness(p.graph()))
        pb = additional.CaseBParams(m, n)
        gb = pb.graph()
        cell.equal(f"B[k={n}]", additional.closeness_B(m, n), closeness(gb))
        cell.equal(f"vB[k={n}]", additional.vertexB_closeness(m, n), vertex_closeness(gb, m + n))
        for q in range(1, n - 1):
            for k in range(q + 2, n + 1):
                p = additional.CaseDParams(m, n, q, k)
                cell.equal(
                    f"D[q={q},k={k}]", additional.closeness_D(m, n, q, k), closeness(p.graph())
                )
        rep.cells.append(cell)
    return rep


def verify_appendices(m_range, n_range) -> SuiteReport:
    rep = SuiteReport("appendices", m_range, n_range)
    quarter = Dyadic(-1, 2)
    for m, n in _grid(m_range, n_range, min_n=2):
        cell = Cell({"m": m, "n": n})
        for k in range(2, n + 1):
            diff = additional.closeness_A(m, n, k) - additional.closeness_C(m, n, k)
            cell.equal(f"diff_AC[k={k}]", additional.diff_AC(n, k), diff)
        cell.equal("diff_AC[k=2]==0", Dyadic(0), additional.diff_AC(n, 2))
        if n >= 3:
            cell.equal("diff_AC[k=3]==-1/4", quarter, additional.diff_AC(n, 3))
        dom = additional.verify_A_dominates_D(m, n)
        for q, k, a, d in dom.violations:
            cell.claim(f"A>D[q={q},k={k}]", False, {"A": a.to_json(), "D": d.to_json()})
        for p, r in dom.f_violations:
            cell.claim(f"F decreasing[p={p},r={r}]", False)
        for p, values in dom.f_values.items():
            for r, f in values.items():
                q = 2 * p - 1 - 2 * r
                direct = additional.closeness_A(m, n, 2 * p - 1) - additional.closeness_D(
                    m, n, q, 2 * p - 1
                )
                cell.equal(f"F[p={p},r={r}]", f, direct)
                if r + 1 in values:
                    cell.equal(
                        f"F step[p={p},r={r}]",
                        additional.appendix_d_step(m, n, p, r),
                        f - values[r + 1],
                    )
        rep.cells.append(cell)
    return rep


SUITES: dict[str, Callable] = {
    "families": verify_families,
    "vr": verify_vr,
    "lr": verify_lr,
    "additional": verify_additional,
    "appendices": verify_appendices,
}


def run_suite(name: str, m_range, n_range) -> SuiteReport:
    if m_range[0] < 3:
        raise ValueError("m range must start at 3 or above")
    if n_range[0] < 1:
        raise ValueError("n range must start at 1 or above")
    if m_range[0] > m_range[1] or n_range[0] > n_range[1]:
        raise ValueError("empty range")
    return SUITES[name](m_range, n_range)
