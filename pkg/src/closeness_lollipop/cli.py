"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Reports go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import additional, families, robustness
from .edgelist import EdgeListError, format_edge_list, read_edge_list, write_edge_list
from .graph import Graph, closeness_oracle
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

DEFAULT_M_RANGE = (3, 10)
DEFAULT_N_RANGE = (1, 12)


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _generate(family: str, m: Optional[int], n: Optional[int]) -> Graph:
    try:
        if family == "complete":
            if m is None:
                raise UsageError("complete needs -m")
            return families.gen_complete(m)
        if family == "path":
            if n is None:
                raise UsageError("path needs -n")
            return families.gen_path(n)
        if family == "cycle":
            if n is None:
                raise UsageError("cycle needs -n (cycle length)")
            return families.gen_cycle(n)
        if m is None or n is None:
            raise UsageError("lollipop needs -m and -n")
        return families.gen_lollipop(m, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    g = _generate(args.family, args.m, args.n)
    if args.output:
        write_edge_list(g, args.output)
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _load_graph(args) -> tuple[Graph, Optional[families.LollipopSpec]]:
    spec = None
    if args.lollipop is not None:
        try:
            spec = families.LollipopSpec(*args.lollipop)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.input is None:
        if spec is None:
            raise UsageError("give an edge-list file or --lollipop M N")
        return families.gen_lollipop(spec), spec
    try:
        g = read_edge_list(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    except EdgeListError as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    if spec is not None and g != families.gen_lollipop(spec):
        raise UsageError(f"{args.input} is not L_{{{spec.m},{spec.n}}} in standard labeling")
    return g, spec


def _target_json(target):
    return list(target) if isinstance(target, tuple) else target


def cmd_compute(args) -> int:
    g, spec = _load_graph(args)
    if args.cases and spec is None:
        raise UsageError("--cases needs --lollipop M N")
    report = {
        "command": {
            "name": "compute",
            "metric": args.metric,
            "input": args.input,
            "lollipop": [spec.m, spec.n] if spec else None,
            "cases": args.cases,
            "per_vertex": args.per_vertex,
        },
        "graph": {"order": g.order, "size": g.size},
    }
    result: dict = {}
    formula = None
    cases = None
    if args.metric == "closeness":
        rep = closeness_oracle(g)
        result["value"] = rep.total.to_json()
        if args.per_vertex:
            report["per_vertex"] = {str(v): c.to_json() for v, c in enumerate(rep.per_vertex, 1)}
        if spec:
            formula = families.closeness_lollipop(spec)
    elif args.metric == "vr":
        if g.order < 2:
            raise UsageError("vr needs at least 2 vertices")
        value, target = robustness.vr_oracle(g)
        result["value"] = value.to_json()
        result["argmin"] = target
        if spec:
            formula = robustness.vr_lollipop(spec)
            if args.cases:
                cases = robustness.vr_cases(spec)
    elif args.metric == "lr":
        if g.size < 1:
            raise UsageError("lr needs at least one edge")
        value, target = robustness.lr_oracle(g)
        result["value"] = value.to_json()
        result["argmin"] = _target_json(target)
        if spec:
            formula = robustness.lr_lollipop(spec)
            if args.cases:
                cases = robustness.lr_cases(spec)
    else:
        if not g.non_edges():
            raise UsageError("additional closeness is undefined for a complete graph")
        value, target = additional.additional_oracle(g)
        result["value"] = value.to_json()
        result["argmax"] = _target_json(target)
        if spec:
            formula = additional.additional_lollipop(spec.m, spec.n)
            if args.cases:
                cases = _additional_cases(spec)
    report["result"] = result
    if formula is not None:
        oracle_value = result["value"]["exact"]
        report["formula"] = {**formula.to_json(), "match": str(formula) == oracle_value}
    if cases is not None:
        report["cases"] = cases.to_json() if hasattr(cases, "to_json") else cases
    sys.stdout.write(_dump(report))
    return EXIT_OK


def _additional_cases(spec: families.LollipopSpec) -> dict:
    """Best closed-form value per candidate shape A, C, D."""
    m, n = spec.m, spec.n
    out = {}
    if n >= 2:
        k = max(range(2, n + 1), key=lambda k: (additional.closeness_A(m, n, k), -k))
        out["A"] = {**additional.closeness_A(m, n, k).to_json(), "k": k}
    k = max(range(1, n + 1), key=lambda k: (additional.closeness_C(m, n, k), -k))
    out["C"] = {**additional.closeness_C(m, n, k).to_json(), "k": k}
    if n >= 3:
        pairs = [(q, k) for q in range(1, n - 1) for k in range(q + 2, n + 1)]
        q, k = max(pairs, key=lambda qk: (additional.closeness_D(m, n, *qk), -qk[0], -qk[1]))
        out["D"] = {**additional.closeness_D(m, n, q, k).to_json(), "q": q, "k": k}
    return out


def cmd_verify(args) -> int:
    try:
        rep = run_suite(args.suite, args.m_range, args.n_range)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"command": {"name": "verify", "suite": args.suite}, **rep.to_json()}
    sys.stdout.write(_dump(out))
    if not rep.ok:
        cell, check = rep.first_divergence()
        print(f"verification failed at {cell.params}: {check.name}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lollipop-closeness",
        description="Exponential closeness, residual and additional closeness of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a named graph as an edge list")
    gen.add_argument("--family", required=True, choices=["complete", "path", "cycle", "lollipop"])
    gen.add_argument("-m", type=int, help="complete-part size")
    gen.add_argument("-n", type=int, help="path size, or cycle length")
    gen.add_argument("-o", "--output", help="output path (default stdout)")
    gen.set_defaults(func=cmd_gen)

    comp = sub.add_parser("compute", help="compute a closeness metric")
    comp.add_argument("input", nargs="?", help="edge-list file")
    comp.add_argument("--metric", required=True, choices=["closeness", "vr", "lr", "additional"])
    comp.add_argument("--lollipop", nargs=2, type=int, metavar=("M", "N"))
    comp.add_argument("--cases", action="store_true", help="closed-form value per case")
    comp.add_argument("--per-vertex", action="store_true", help="vertex closeness table")
    comp.set_defaults(func=cmd_compute)

    ver = sub.add_parser("verify", help="sweep closed forms against the oracle")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--m-range", type=parse_range, default=DEFAULT_M_RANGE, metavar="A..B")
    ver.add_argument("--n-range", type=parse_range, default=DEFAULT_N_RANGE, metavar="A..B")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
