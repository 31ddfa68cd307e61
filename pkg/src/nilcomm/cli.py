"""Command-line interface.

Subcommands: enumerate, invariants, closure-graph, reduce, components,
selflarge, exceptional, verify.  Output format is text, json or dot
(closure-graph only).  Exit codes: 0 success, 1 failed verification or
violated claim, 2 usage error.

Configuration can also come from a JSON file named by $NILCOMM_CONFIG with
keys "bound", "seed", "format".
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import closure, components, excdata, invariants, oracle, selflarge
from .diagrams import (
    AbDiagram,
    DEFAULT_BOUND,
    PairParams,
    PairType,
    enumerate_diagrams,
    params_for,
    parse as parse_diagram,
    partitions,
)
from .errors import ClaimViolated, NilcommError, UnrealizableDiagram


def _load_config() -> dict:
    path = os.environ.get("NILCOMM_CONFIG")
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _pair_type(name: str) -> PairType:
    try:
        return PairType[name.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown pair type {name!r}; expected one of "
            + ", ".join(t.value for t in PairType)
        )


def _params_from_args(pair_type: PairType, numbers: list[int]) -> PairParams:
    if pair_type.has_signature:
        if len(numbers) != 3:
            raise SystemExit(2)
        n, p, q = numbers
        return params_for(pair_type, n, p, q)
    if len(numbers) != 1:
        raise SystemExit(2)
    return PairParams(numbers[0])


def _params_for_diagram(pair_type: PairType, diagram: AbDiagram) -> PairParams:
    if pair_type.has_signature:
        p, q = diagram.signature() if diagram.rows else (0, 0)
        return PairParams(diagram.n, (p, q))
    return PairParams(diagram.n)


def _cmd_enumerate(args) -> int:
    params = _params_from_args(args.type, args.numbers)
    diags = enumerate_diagrams(args.type, params, args.bound)
    if args.format == "json":
        print(json.dumps([d.text() for d in diags]))
    else:
        for d in diags:
            print(d.text() or "(zero)")
    return 0


def _cmd_invariants(args) -> int:
    diagram = parse_diagram(args.diagram)
    params = _params_for_diagram(args.type, diagram)
    inv = invariants.orbit_invariants(diagram, args.type, params)
    if args.format == "json":
        print(json.dumps(inv.to_json()))
    else:
        for key, value in inv.to_json().items():
            print(f"{key}: {value}")
    return 0


def _cmd_closure_graph(args) -> int:
    params = _params_from_args(args.type, args.numbers)
    graph = closure.closure_hasse(args.type, params, args.bound)
    if args.format == "json":
        print(graph.to_json())
    else:
        print(graph.to_dot())
    return 0


def _cmd_reduce(args) -> int:
    diagram = parse_diagram(args.diagram)
    params = _params_for_diagram(args.type, diagram)
    target = closure.find_reduction(diagram, args.type, params, args.bound)
    if args.format == "json":
        print(json.dumps({"orbit": diagram.text(), "reduction": target.text() if target else None}))
    else:
        print(target.text() if target else "none")
    return 0


def _cmd_components(args) -> int:
    params = _params_from_args(args.type, args.numbers)
    report = components.classify_components(args.type, params, args.bound)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render_text())
    return 0


def _cmd_selflarge(args) -> int:
    try:
        numbers = [int(args.target)] + args.rest
        diagram = None
    except ValueError:
        diagram = parse_diagram(args.target)
    if diagram is not None:
        params = _params_for_diagram(args.type, diagram)
        verdicts = [selflarge.is_self_large(diagram, args.type)]
    else:
        params = _params_from_args(args.type, numbers)
        verdicts = [
            selflarge.is_self_large(d, args.type)
            for d in enumerate_diagrams(args.type, params, args.bound)
        ]
    if args.format == "json":
        print(json.dumps([v.to_json() for v in verdicts]))
    else:
        for v in verdicts:
            print(f"{v.diagram.text() or '(zero)'}: {v.verdict} ({v.reason})")
    return 0


def _cmd_exceptional(args) -> int:
    report = excdata.exceptional_components(args.case.upper())
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render_text())
        print("self-large orbits: " + ", ".join(
            str(o) for o in excdata.exceptional_selflarge(args.case.upper())))
    return 0


def _all_params_up_to(bound: int):
    for n in range(0, bound + 1):
        for pt in PairType:
            if pt.needs_even_n and n % 2:
                continue
            if pt.has_signature:
                step = 2 if pt is PairType.CII else 1
                for p in range(0, n + 1, step):
                    if (n - p) % step == 0:
                        yield pt, PairParams(n, (p, n - p))
            else:
                yield pt, PairParams(n)


def _cmd_verify(args) -> int:
    """Certify the combinatorial layer against the matrix oracle, check the
    embedded exceptional tables, and run the verified-rank-bound grid."""
    failures = []
    checked = 0
    for pt, prm in _all_params_up_to(args.cert_bound):
        valid = set(enumerate_diagrams(pt, prm))
        seen = set()
        for part in partitions(prm.n):
            if pt.uses_letters:
                assigns = itertools.product("ab", repeat=len(part))
            else:
                assigns = [(None,) * len(part)]
            for letters in assigns:
                if pt.uses_letters:
                    diagram = AbDiagram.from_rows(zip(part, letters))
                else:
                    diagram = AbDiagram.from_partition(part)
                if diagram in seen:
                    continue
                seen.add(diagram)
                try:
                    real = oracle.realize(diagram, pt, prm)
                    realizable = True
                except UnrealizableDiagram:
                    realizable = False
                if realizable != (diagram in valid):
                    failures.append(
                        f"{pt.value} {prm}: {diagram.text()!r} realizable={realizable} "
                        f"valid={diagram in valid}"
                    )
                    continue
                if not realizable:
                    continue
                checked += 1
                if oracle.jordan_type(real.e) != diagram.partition:
                    failures.append(f"{pt.value} {prm}: jordan type mismatch {diagram.text()!r}")
                if invariants.dim_p_cent(diagram, pt, prm) != oracle.dim_p_cent_oracle(real):
                    failures.append(f"{pt.value} {prm}: dim p^e mismatch {diagram.text()!r}")
                if invariants.dim_p0(diagram, pt) != oracle.dim_graded(real, 0, -1):
                    failures.append(f"{pt.value} {prm}: dim p(e,0) mismatch {diagram.text()!r}")
                if diagram.rows and invariants.defect(diagram, pt) != oracle.defect_oracle(
                    real, seed=args.seed
                ):
                    failures.append(f"{pt.value} {prm}: defect mismatch {diagram.text()!r}")
    print(f"oracle certification: {checked} realizations checked, "
          f"{len(failures)} failures (bound {args.cert_bound})")
    for f in failures:
        print("  " + f)

    problems = excdata.consistency_report()
    print(f"exceptional tables: {'consistent' if not problems else 'INCONSISTENT'}")
    for p in problems:
        print("  " + p)

    try:
        results = components.rank_bound_check()
        print(f"verified rank bounds: {len(results)} pairs, zero unresolved candidates")
        claim_ok = True
    except ClaimViolated as exc:
        print(f"verified rank bounds: VIOLATED: {exc}")
        claim_ok = False

    ok = not failures and not problems and claim_ok
    print("verify:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    config = _load_config()
    parser = argparse.ArgumentParser(
        prog="nilcomm",
        description="Irreducible components of nilpotent commuting varieties "
        "of symmetric Lie algebra pairs",
    )
    parser.add_argument("--format", choices=["text", "json", "dot"],
                        default=config.get("format", "text"))
    parser.add_argument("--bound", type=int, default=config.get("bound", DEFAULT_BOUND),
                        help="enumeration size bound")
    parser.add_argument("--seed", type=int, default=config.get("seed", 0),
                        help="seed for the randomized rank oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the orbit diagrams of a pair")
    p.add_argument("type", type=_pair_type)
    p.add_argument("numbers", type=int, nargs="+", metavar="n [p q]")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("invariants", help="orbit invariants of a diagram")
    p.add_argument("type", type=_pair_type)
    p.add_argument("diagram")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("closure-graph", help="Hasse diagram of the closure order")
    p.add_argument("type", type=_pair_type)
    p.add_argument("numbers", type=int, nargs="+", metavar="n [p q]")
    p.set_defaults(func=_cmd_closure_graph)

    p = sub.add_parser("reduce", help="find a reduction of an orbit")
    p.add_argument("type", type=_pair_type)
    p.add_argument("diagram")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("components", help="classify the components of a pair")
    p.add_argument("type", type=_pair_type)
    p.add_argument("numbers", type=int, nargs="+", metavar="n [p q]")
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("selflarge", help="self-large verdicts for a diagram or a pair")
    p.add_argument("type", type=_pair_type)
    p.add_argument("target", help="a diagram, or n (with p q for signature types)")
    p.add_argument("rest", type=int, nargs="*")
    p.set_defaults(func=_cmd_selflarge)

    p = sub.add_parser("exceptional", help="report for an exceptional case")
    p.add_argument("case", choices=[c for c in excdata.CASES] + [c.lower() for c in excdata.CASES],
                   metavar="CASE")
    p.set_defaults(func=_cmd_exceptional)

    p = sub.add_parser("verify", help="run the oracle certification and claim checks")
    p.add_argument("--cert-bound", type=int, default=6,
                   help="size bound for the oracle certification sweep")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ClaimViolated as exc:
        print(f"claim violated: {exc}", file=sys.stderr)
        return 1
    except NilcommError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
