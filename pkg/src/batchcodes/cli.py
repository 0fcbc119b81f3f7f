"""Command-line front end.

Exit codes: 0 on success (query servable, search found), 1 for a clean
negative answer (unservable query, nothing found up to n_max), 2 for
usage, parse, or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions
from .bounds import (
    BoundVerdict,
    gopalan_lrc,
    plotkin_batch,
    singleton,
    wang_zhang,
    zs_base,
    zs_best,
    zs_refined,
    zs_systematic,
)
from .errors import BatchCodeError, NotApplicableError
from .gf2 import LinearCode, format_matrix, parse_matrix
from .planner import Query, QueryPlanner
from .report import (
    build_report,
    bounds_to_dicts,
    plan_to_dict,
    render_bounds,
    render_plan,
    render_report,
    render_search,
    report_to_dict,
    search_to_dict,
)
from .search import min_length

_FAMILIES = {
    "identity": (constructions.identity, ("k",)),
    "subcube": (constructions.subcube, ("ell", "m")),
    "simplex": (constructions.simplex, ("m",)),
    "triplicated-parity": (constructions.triplicated_parity, ("k",)),
    "blockwise-subcube-allones": (
        constructions.blockwise_subcube_allones,
        ("kappa",),
    ),
    "paired-parity": (constructions.paired_parity, ("k",)),
}


def _read_code(path: str) -> LinearCode:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    return LinearCode(parse_matrix(text))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_analyze(args: argparse.Namespace) -> int:
    code = _read_code(args.matrix)
    queries = tuple(Query.parse(q) for q in args.query or ())
    report = build_report(code, args.matrix, args.r_cap, queries)
    if args.json:
        _emit_json(report_to_dict(report))
    else:
        sys.stdout.write(render_report(report))
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    code = _read_code(args.matrix)
    q = Query.parse(args.query)
    plan = QueryPlanner(code, args.r_cap).serve(q)
    if args.json:
        _emit_json(plan_to_dict(q, plan))
    else:
        print(render_plan(q, plan))
    return 0 if plan is not None else 1


def cmd_construct(args: argparse.Namespace) -> int:
    builder, needed = _FAMILIES[args.family]
    values = []
    for name in needed:
        value = getattr(args, name)
        if value is None:
            flags = " and ".join(f"--{p}" for p in needed)
            print(f"error: {args.family} requires {flags}", file=sys.stderr)
            return 2
        values.append(value)
    code = builder(*values)
    sys.stdout.write(format_matrix(code.generator))
    return 0


def cmd_distance(args: argparse.Namespace) -> int:
    code = _read_code(args.matrix)
    print(code.min_distance())
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    k, d, r, t = args.k, args.d, args.r, args.t
    verdicts: list[BoundVerdict] = []

    def length(name: str, rhs: int, witness: dict[str, int] | None = None) -> None:
        attained = args.n is not None and args.n == rhs
        verdicts.append(
            BoundVerdict(name, "length", True, rhs, attained, witness=witness)
        )

    length("singleton", singleton(k, d))
    length("gopalan_lrc", gopalan_lrc(k, d, r), {"r": r})
    length("wang_zhang", wang_zhang(k, d, r, args.delta), {"r": r, "delta": args.delta})
    if args.n is not None:
        verdicts.append(plotkin_batch(args.n, k, t, args.q))
    else:
        verdicts.append(
            BoundVerdict(
                "plotkin_batch",
                "cardinality",
                False,
                None,
                False,
                reason="needs --n",
                witness={"t": t, "q": args.q},
            )
        )
    length("zs_base", zs_base(k, d, r, t), {"r": r, "t": t})
    rhs, beta = zs_best(k, d, r, t)
    length("zs_best", rhs, {"r": r, "t": t, "beta": beta})
    if args.systematic:
        try:
            rhs, beta = zs_systematic(k, d, r, t)
            length("zs_systematic", rhs, {"r": r, "t": t, "beta": beta})
        except NotApplicableError as exc:
            verdicts.append(
                BoundVerdict("zs_systematic", "length", False, None, False, str(exc))
            )
    try:
        rhs, wit = zs_refined(k, d, r, t)
        length("zs_refined", rhs, {"r": r, "t": t, **wit})
    except NotApplicableError as exc:
        verdicts.append(
            BoundVerdict("zs_refined", "length", False, None, False, str(exc))
        )

    if args.json:
        _emit_json(bounds_to_dicts(verdicts))
    else:
        print(render_bounds(verdicts))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    result = min_length(
        args.k, args.t, args.mode, args.r_cap, args.n_max
    )
    if args.json:
        _emit_json(search_to_dict(result))
    else:
        sys.stdout.write(render_search(result))
    return 0 if result.found else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="batchcodes",
        description=(
            "Analyze and certify linear batch, PIR, and locally repairable "
            "codes over GF(2)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="full parameter and bound report for a matrix file"
    )
    analyze.add_argument("matrix", help="generator matrix file, or - for stdin")
    analyze.add_argument("--r-cap", type=int, help="recovery-set size cap")
    analyze.add_argument(
        "--query",
        action="append",
        metavar="Q",
        help='also plan this query (repeatable), e.g. "1,1,2,2"',
    )
    analyze.add_argument("--json", action="store_true", help="emit JSON")
    analyze.set_defaults(func=cmd_analyze)

    query = sub.add_parser("query", help="serving plan for one multiset query")
    query.add_argument("matrix", help="generator matrix file, or - for stdin")
    query.add_argument("query", help='comma-separated symbols, e.g. "1,1,2,2"')
    query.add_argument("--r-cap", type=int, help="recovery-set size cap")
    query.add_argument("--json", action="store_true", help="emit JSON")
    query.set_defaults(func=cmd_query)

    construct = sub.add_parser(
        "construct", help="emit a named family generator matrix"
    )
    construct.add_argument("family", choices=sorted(_FAMILIES))
    construct.add_argument("--k", type=int, help="information symbols")
    construct.add_argument("--ell", type=int, help="subcube side length")
    construct.add_argument("--m", type=int, help="dimension")
    construct.add_argument("--kappa", type=int, help="number of blocks")
    construct.set_defaults(func=cmd_construct)

    distance = sub.add_parser("distance", help="exact minimum distance")
    distance.add_argument("matrix", help="generator matrix file, or - for stdin")
    distance.set_defaults(func=cmd_distance)

    bounds_p = sub.add_parser(
        "bounds", help="closed-form bound table for given parameters"
    )
    bounds_p.add_argument("--k", type=int, required=True)
    bounds_p.add_argument("--d", type=int, required=True)
    bounds_p.add_argument("--r", type=int, required=True)
    bounds_p.add_argument("--t", type=int, required=True)
    bounds_p.add_argument("--delta", type=int, default=1, help="availability")
    bounds_p.add_argument("--q", type=int, default=2, help="alphabet size")
    bounds_p.add_argument(
        "--n", type=int, help="code length, for attainment and the cardinality bound"
    )
    bounds_p.add_argument(
        "--systematic", action="store_true", help="include the systematic-only bound"
    )
    bounds_p.add_argument("--json", action="store_true", help="emit JSON")
    bounds_p.set_defaults(func=cmd_bounds)

    search = sub.add_parser("search", help="exhaustive optimal-length search")
    search.add_argument("--k", type=int, required=True)
    search.add_argument("--t", type=int, required=True)
    search.add_argument("--mode", choices=("batch", "pir"), default="batch")
    search.add_argument("--r-cap", type=int, help="recovery-set size cap")
    search.add_argument("--n-max", type=int, help="largest length to try")
    search.add_argument("--json", action="store_true", help="emit JSON")
    search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BatchCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
