"""Command-line interface.

Verbs: ``gen`` writes a signed-graph file (optionally with a constructed
worst-case signature), ``balance`` tests balance, ``frustration`` /
``frustnum`` / ``maxfrust`` run the exact solvers, ``verify`` runs the bound
suite, and ``explore`` runs the randomized lower-bound search.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error (including malformed input files), 3 enumeration budget exceeded.
Output is deterministic for fixed inputs, budgets, and seeds; the
``elapsed_ms`` field is informational only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import io as sgio
from .core import SignedGraph
from .errors import (InvalidInputError, InvalidParametersError, ParseError,
                     ResourceLimitError)
from .petersen import (extremal_signature_k2, extremal_signature_k3,
                       extremal_signature_prism, generate_petersen)
from .solvers import (DEFAULT_CLASS_BUDGET, DEFAULT_STATE_BUDGET, SolveResult,
                      frustration_index, frustration_number, max_frustration,
                      max_frustration_lower_bound)
from .verify import (VerifyConfig, all_pass, reports_to_csv,
                     reports_to_markdown, run_full_suite)

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedgraph",
        description="Exact frustration computations on signed graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a signed generalized Petersen graph")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--signature", choices=("none", "prism", "k2", "k3"),
                     default="none")
    gen.add_argument("--out", type=Path, default=None,
                     help="output path; also writes a <out>.roles sidecar")
    gen.set_defaults(func=_cmd_gen)

    for verb, func, help_text in (
            ("balance", _cmd_balance, "test whether a signed graph is balanced"),
            ("frustration", _cmd_frustration, "exact frustration index"),
            ("frustnum", _cmd_frustnum, "exact frustration number")):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--in", dest="infile", type=Path, required=True)
        if verb != "balance":
            p.add_argument("--format", choices=("human", "json", "csv"),
                           default="human")
            p.add_argument("--budget-states", type=int,
                           default=DEFAULT_STATE_BUDGET)
        p.set_defaults(func=func)

    mx = sub.add_parser("maxfrust", help="exact maximum frustration over all signatures")
    mx.add_argument("--in", dest="infile", type=Path, default=None)
    mx.add_argument("--n", type=int, default=None)
    mx.add_argument("--k", type=int, default=None)
    mx.add_argument("--format", choices=("human", "json", "csv"), default="human")
    mx.add_argument("--budget-classes", type=int, default=DEFAULT_CLASS_BUDGET)
    mx.add_argument("--budget-states", type=int, default=DEFAULT_STATE_BUDGET)
    mx.add_argument("--workers", type=int, default=1)
    mx.add_argument("--symmetry", choices=("on", "off"), default="off",
                    help="prune rotation-equivalent classes (needs --n/--k)")
    mx.set_defaults(func=_cmd_maxfrust)

    ver = sub.add_parser("verify", help="run the bound-verification suite")
    ver.add_argument("--config", type=Path, default=None)
    ver.add_argument("--format", choices=("human", "csv", "md"), default="human")
    ver.add_argument("--out", type=Path, default=None)
    ver.set_defaults(func=_cmd_verify)

    ex = sub.add_parser("explore", help="randomized lower bound on maximum frustration")
    ex.add_argument("--in", dest="infile", type=Path, default=None)
    ex.add_argument("--n", type=int, default=None)
    ex.add_argument("--k", type=int, default=None)
    ex.add_argument("--trials", type=int, default=256)
    ex.add_argument("--seed", type=int, default=0)
    ex.add_argument("--format", choices=("human", "json", "csv"), default="human")
    ex.add_argument("--budget-states", type=int, default=DEFAULT_STATE_BUDGET)
    ex.set_defaults(func=_cmd_explore)
    return parser


def _read_signed_graph(path: Path) -> SignedGraph:
    return sgio.parse_signed_graph(path.read_text())


def _emit_result(result: SolveResult, fmt: str) -> None:
    record = result.to_record()
    if fmt == "json":
        print(json.dumps(record))
    elif fmt == "csv":
        witness = " ".join(str(i) for i in record["witness"])
        print("method,value,witness,explored,elapsed_ms")
        print(f"{record['method']},{record['value']},{witness},"
              f"{record['explored']},{record['elapsed_ms']}")
    else:
        witness = " ".join(str(i) for i in record["witness"]) or "(empty)"
        print(f"method: {record['method']}")
        print(f"value: {record['value']}")
        print(f"witness: {witness}")
        print(f"explored: {record['explored']}")
        print(f"elapsed_ms: {record['elapsed_ms']}")


def _cmd_gen(args) -> int:
    layout = generate_petersen(args.n, args.k)
    if args.signature == "none":
        sg = SignedGraph.all_positive(layout.graph)
    elif args.signature == "prism":
        if args.k != 1:
            raise _UsageError("--signature prism applies to k = 1")
        sg = SignedGraph(layout.graph, extremal_signature_prism(args.n))
    elif args.signature == "k2":
        if args.k != 2 or args.n % 2 == 0:
            raise _UsageError("--signature k2 applies to odd n with k = 2")
        sg = SignedGraph(layout.graph, extremal_signature_k2((args.n - 1) // 2))
    else:
        if args.k != 3 or args.n % 4 != 3 or math.gcd(args.n, 3) != 1:
            raise _UsageError(
                "--signature k3 applies to k = 3 with n = 4m-1 and gcd(n, 3) = 1")
        sg = SignedGraph(layout.graph, extremal_signature_k3((args.n + 1) // 4))
    text = sgio.serialize_signed_graph(sg)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
        args.out.with_name(args.out.name + ".roles").write_text(
            sgio.serialize_roles(layout))
    return EXIT_OK


def _cmd_balance(args) -> int:
    sg = _read_signed_graph(args.infile)
    from .core import is_balanced
    print("balanced" if is_balanced(sg) else "unbalanced")
    return EXIT_OK


def _cmd_frustration(args) -> int:
    sg = _read_signed_graph(args.infile)
    result = frustration_index(sg, budget_states=args.budget_states)
    _emit_result(result, args.format)
    return EXIT_OK


def _cmd_frustnum(args) -> int:
    sg = _read_signed_graph(args.infile)
    result = frustration_number(sg, budget_subsets=args.budget_states)
    _emit_result(result, args.format)
    return EXIT_OK


def _graph_from_args(args):
    if args.infile is not None:
        if args.n is not None or args.k is not None:
            raise _UsageError("give either --in or --n/--k, not both")
        return _read_signed_graph(args.infile).graph, None
    if args.n is None or args.k is None:
        raise _UsageError("need --in or both --n and --k")
    layout = generate_petersen(args.n, args.k)
    return layout.graph, layout


def _cmd_maxfrust(args) -> int:
    graph, layout = _graph_from_args(args)
    rotation = None
    if args.symmetry == "on":
        if layout is None:
            raise _UsageError("--symmetry on needs --n/--k (rotation unknown for files)")
        rotation = layout.rotation_edge_permutation()
    result = max_frustration(graph, budget_classes=args.budget_classes,
                             budget_states=args.budget_states,
                             workers=args.workers, rotation=rotation)
    _emit_result(result, args.format)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.config is not None:
        config = VerifyConfig.from_text(args.config.read_text())
    else:
        config = VerifyConfig.default()
    reports = run_full_suite(config)
    if args.format == "csv":
        rendered = reports_to_csv(reports)
    elif args.format == "md":
        rendered = reports_to_markdown(reports)
    else:
        lines = []
        for r in reports:
            n = r.param("n", r.param("n_vertices", r.param("graph", "")))
            k = r.param("k", "")
            inst = f"n={n}" + (f" k={k}" if k != "" else "")
            lines.append(f"[{r.verdict:^16}] {r.theorem:24} {inst:12} "
                         f"claim: {r.claim:28} computed: {r.computed}")
        rendered = "\n".join(lines) + ("\n" if lines else "")
    if args.out is not None:
        args.out.write_text(rendered)
    else:
        sys.stdout.write(rendered)
    n_skipped = sum(1 for r in reports if r.skipped)
    ok = all_pass(reports)
    print(f"verify: {'pass' if ok else 'FAIL'} "
          f"({len(reports)} reports, {n_skipped} skipped)")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _cmd_explore(args) -> int:
    graph, _ = _graph_from_args(args)
    result = max_frustration_lower_bound(graph, args.trials, args.seed,
                                         budget_states=args.budget_states)
    _emit_result(result, args.format)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidInputError, InvalidParametersError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
