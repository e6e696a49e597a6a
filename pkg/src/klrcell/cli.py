"""Command-line interface: ``klrcell <command> --alpha 1:2,2:1 ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

from . import combinatorics as cb
from .combinatorics import RootVector
from .engine import format_term, get_algebra, set_cache_limit
from .expr import EvalError, ParseError, eval_text
from .reports import Report

__all__ = ["main", "build_parser", "run_suite", "SUITES"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _alpha(text: str) -> RootVector:
    try:
        alpha = RootVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if alpha.height == 0:
        raise argparse.ArgumentTypeError("alpha must be nonzero")
    return alpha


# -- suites ---------------------------------------------------------------


def _suite_relations(alpha: RootVector, N: int) -> list[Report]:
    from .relations import verify_relations

    return [verify_relations(alpha)]


def _suite_nilhecke(alpha: RootVector, N: int) -> list[Report]:
    from .nilhecke import verify_nilhecke

    return [verify_nilhecke(a, N, vertex=i)
            for i, mult in sorted(alpha.as_dict().items()) for a in range(1, mult + 1)]


def _suite_cells(alpha: RootVector, N: int) -> list[Report]:
    from .cellular import verify_cell_chain, verify_cellular_basis
    from .dimension import dim_check

    dim = dim_check(alpha, N)
    report = Report("dimension", params={"alpha": str(alpha), "N": N})
    for name, comp in dim.comparisons().items():
        report.add(f"dim_q {name}", comp.equal, alpha=str(alpha),
                   detail={"mismatch": comp.mismatch})
    return [verify_cell_chain(alpha, N), verify_cellular_basis(alpha, N), report]


def _suite_quotients(alpha: RootVector, N: int) -> list[Report]:
    from .cellular import verify_quotient_structure

    return [verify_quotient_structure(pi, N) for pi in cb.root_partitions(alpha)]


def _suite_cellularity(alpha: RootVector, N: int) -> list[Report]:
    from .cellular import verify_affine_cellularity

    return [verify_affine_cellularity(alpha, N)]


SUITES: dict[str, Callable[[RootVector, int], list[Report]]] = {
    "relations": _suite_relations,
    "nilhecke": _suite_nilhecke,
    "cells": _suite_cells,
    "quotients": _suite_quotients,
    "cellularity": _suite_cellularity,
}


def run_suite(name: str, alpha: RootVector, N: int, cache_limit: Optional[int] = None) -> list[Report]:
    if cache_limit is not None:
        set_cache_limit(cache_limit)
    return SUITES[name](alpha, N)


# -- commands ----------------------------------------------------------------


def cmd_roots(args) -> tuple[int, str]:
    roots = cb.positive_roots(args.alpha)
    if args.json:
        return EXIT_OK, json.dumps([{"root": str(b), "word": list(b.word)} for b in roots])
    return EXIT_OK, "\n".join(str(b) for b in roots)


def cmd_partitions(args) -> tuple[int, str]:
    parts = cb.root_partitions(args.alpha)
    if args.json:
        return EXIT_OK, json.dumps([{"pi": str(p), "i_pi": list(p.word), "sh": p.sh} for p in parts])
    if args.words:
        return EXIT_OK, "\n".join(f"{p}  i_pi=({cb.format_word(p.word)})" for p in parts)
    return EXIT_OK, "\n".join(str(p) for p in parts)


def cmd_dim(args) -> tuple[int, str]:
    from .dimension import dim_check

    rep = dim_check(args.alpha, args.cutoff)
    code = EXIT_OK if rep.agree else EXIT_FAIL
    return code, json.dumps(rep.to_json()) if args.json else rep.table()


def cmd_eval(args) -> tuple[int, str]:
    x = eval_text(args.expr, args.alpha)
    if args.json:
        return EXIT_OK, json.dumps(x.to_json())
    return EXIT_OK, str(x)


def cmd_verify(args) -> tuple[int, str]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.threads > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            futures = [pool.submit(run_suite, n, args.alpha, args.cutoff, args.cache_limit)
                       for n in names]
            results = [f.result() for f in futures]
    else:
        results = [run_suite(n, args.alpha, args.cutoff) for n in names]
    reports = [r for rs in results for r in rs]
    ok = all(r.passed for r in reports)
    if args.json:
        body = json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}, indent=2)
    else:
        lines = []
        for name, rs in zip(names, results):
            lines.append(f"[{name}]")
            for r in rs:
                params = ", ".join(f"{k}={v}" for k, v in r.params.items())
                lines.append(f"  {r.name} ({params})")
                lines.extend("    " + line for line in r.summary_lines())
        lines.append("all checks passed" if ok else "VERIFICATION FAILED")
        body = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), body


def cmd_basis(args) -> tuple[int, str]:
    R = get_algebra(args.alpha)
    n = args.degree
    if args.cellular:
        from .cellular import cellular_basis, format_label

        elems, ok = cellular_basis(args.alpha, n)
        if args.json:
            body = json.dumps({
                "degree": n, "unimodular": ok,
                "basis": [{"pi": str(pi), "w": list(lab[0]), "b": [list(l) for l in lab[1]],
                           "v": list(lab[2]), "element": x.to_json()} for pi, lab, x in elems],
            })
        else:
            lines = [f"{pi} | {format_label(lab)} | {x}" for pi, lab, x in elems]
            lines.append(f"# {len(elems)} elements, Z-basis: {'yes' if ok else 'NO'}")
            body = "\n".join(lines)
        return (EXIT_OK if ok else EXIT_FAIL), body
    keys = R.pbw_basis_at_degree(n)
    if args.json:
        return EXIT_OK, json.dumps({"degree": n, "basis": [R.element({k: 1}).to_json() for k in keys]})
    return EXIT_OK, "\n".join(format_term(k, 1) for k in keys)


COMMANDS = {
    "roots": cmd_roots,
    "partitions": cmd_partitions,
    "dim": cmd_dim,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "basis": cmd_basis,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=_alpha, required=True,
                        help="weight as vertex:multiplicity pairs, e.g. 1:2,2:1")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker processes for verify")
    common.add_argument("--cache-limit", type=int, default=None,
                        help="entries per rewriting cache (0 disables caching)")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="klrcell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="positive roots below alpha")
    p = sub.add_parser("partitions", parents=[common], help="root partitions, largest first")
    p.add_argument("--words", action="store_true", help="also print the word i_pi")
    p = sub.add_parser("dim", parents=[common], help="graded dimension three ways")
    p.add_argument("--cutoff", type=int, default=8)
    p = sub.add_parser("eval", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--cutoff", type=int, default=6, help="largest degree checked")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p = sub.add_parser("basis", parents=[common], help="a basis of one graded component")
    p.add_argument("--degree", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--cellular", action="store_true")
    g.add_argument("--pbw", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.cache_limit is not None:
        if args.cache_limit < 0:
            print("error: --cache-limit must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
        set_cache_limit(args.cache_limit)
    try:
        code, body = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: syntax error at {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EvalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
