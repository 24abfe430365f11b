"""Command-line interface.

Verbs: bound, construct, analyze, search, table.  Exit codes: 0 success,
1 usage or parse error, 2 budget/guard refusal, 3 internal invariant
violation.  All JSON output is deterministic (sorted keys, fixed list
orders) so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, search
from .constructions import GroupBlueprint, blueprint_from_json, realize
from .perm import (
    GuardExceeded,
    NotNilpotentError,
    PermGroup,
    center,
    lower_central_series,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_INVARIANT = 3

CENTER_SCAN_LIMIT = 1_000_000


class _UsageError(Exception):
    pass


def _emit_json(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _read_json_arg(value: str) -> dict:
    """Parse an inline JSON string, a path, or '-' for stdin."""
    if value == "-":
        text = sys.stdin.read()
    elif value.lstrip().startswith("{"):
        text = value
    else:
        try:
            with open(value, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {value}: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(data, dict):
        raise _UsageError("expected a JSON object")
    return data


def cmd_bound(args: argparse.Namespace) -> int:
    if not _is_prime(args.p):
        raise _UsageError(f"p must be prime, got {args.p}")
    if args.k < 1 or args.c < 1:
        raise _UsageError("k and c must be positive")
    report = bounds.bound_report(args.p, args.k, args.c)
    if args.json:
        _emit_json(report.to_json())
        return EXIT_OK
    print(f"degree {args.p}^{args.k}, nilpotency class <= {args.c}")
    print(f"  composition upper bound : log_p order <= {report.f_upper}")
    print(f"    witness composition   : {list(report.witness.parts)}")
    print(f"  elementary upper bound  : log_p order <= {report.elementary}")
    if report.class2_exact is not None:
        print(f"  exact value at class 2  : log_p order  = {report.class2_exact}")
    if report.binomial_lower is not None:
        print(f"  witness lower bound     : log_p order >= {report.binomial_lower}")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    data = _read_json_arg(args.blueprint)
    try:
        blueprint = blueprint_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"invalid blueprint: {exc}")
    try:
        group = realize(blueprint)
    except GuardExceeded as exc:
        # degraded response: prediction only, no realization
        _emit_json(
            {
                "blueprint": blueprint.to_json(),
                "prediction": blueprint.prediction_json(),
                "group": None,
                "realized": False,
                "reason": str(exc),
            }
        )
        return EXIT_OK
    problems = _verify_prediction(blueprint, group)
    if problems:
        print(f"invariant violation: {'; '.join(problems)}", file=sys.stderr)
        return EXIT_INVARIANT
    _emit_json(
        {
            "blueprint": blueprint.to_json(),
            "prediction": blueprint.prediction_json(),
            "group": group.to_json(),
            "realized": True,
        }
    )
    return EXIT_OK


def _verify_prediction(blueprint: GroupBlueprint, group: PermGroup) -> list[str]:
    problems = []
    if group.degree != blueprint.degree:
        problems.append(f"degree {group.degree} != predicted {blueprint.degree}")
    order = group.order()
    if order != blueprint.order:
        problems.append(f"order {order} != predicted {blueprint.order}")
    if not group.is_transitive():
        problems.append("not transitive")
    series = lower_central_series(group)
    cls = series.nilpotency_class
    if cls is None or cls > blueprint.class_bound:
        problems.append(f"class {cls} exceeds bound {blueprint.class_bound}")
    return problems


def _load_group(value: str) -> PermGroup:
    data = _read_json_arg(value)
    try:
        return PermGroup.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"invalid group: {exc}")


def cmd_analyze(args: argparse.Namespace) -> int:
    group = _load_group(args.group)
    series = lower_central_series(group)
    cls = series.nilpotency_class
    try:
        center_order = center(group, CENTER_SCAN_LIMIT).order()
    except GuardExceeded:
        center_order = None
    analysis = {
        "degree": group.degree,
        "order": group.order(),
        "log_p_order": None,
        "transitive": group.is_transitive(),
        "regular": group.is_regular(),
        "nilpotent": cls is not None,
        "nilpotency_class": cls,
        "center_order": center_order,
        "lower_central_orders": series.order_profile(),
    }
    try:
        p = bounds.prime_base(group.order()) if group.order() > 1 else None
    except ValueError:
        p = None
    if p is not None:
        e = 0
        n = group.order()
        while n > 1:
            n //= p
            e += 1
        analysis["log_p_order"] = e
    _emit_json(analysis)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if not _is_prime(args.p):
        raise _UsageError(f"p must be prime, got {args.p}")
    budget = args.budget if args.budget is not None else search.default_budget()
    row = search.fnil_exact(
        args.p, args.k, args.cmax, dedupe=args.dedupe, max_count=budget
    )
    report = search.audit_row(row) if args.audit else None
    if args.json:
        data = row.to_json()
        if report is not None:
            data["audit"] = report.to_json()
        _emit_json(data)
    else:
        print(f"degree {args.p}^{args.k}: max log_{args.p} order per class bound")
        for c, e in enumerate(row.exponents, start=1):
            print(f"  class <= {c:2d} : {e}")
        if report is not None:
            for check in report.checks:
                status = "ok" if check.passed else "FAIL"
                print(f"audit {status:4s} {check.name}: {check.detail}")
    if report is not None and not report.ok:
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.table1:
        kmax = args.kmax
        print("composition maximum F(k,c) for c <= 4, cross-checked against closed forms")
        header = f"{'k':>3} | " + " ".join(f"{f'c={c}':>8}" for c in range(1, 5)) + " | closed-form"
        print(header)
        print("-" * len(header))
        for k in range(1, kmax + 1):
            values = [bounds.f_upper(k, c) for c in range(1, 5)]
            closed = [bounds.f_closed(k, c) for c in range(1, 5)]
            mark = "ok" if values == closed else "MISMATCH"
            print(f"{k:>3} | " + " ".join(f"{v:>8}" for v in values) + f" | {mark}")
        return EXIT_OK
    # table2
    cmax = 16
    print("max log_2 order of a transitive 2-group of degree 2^k, class <= c")
    header = "k\\c | " + " ".join(f"{c:>3}" for c in range(1, cmax + 1)) + " | source"
    print(header)
    print("-" * len(header))
    for k in range(1, 6):
        if k <= search.TABLE2_EXHAUSTIVE_KMAX:
            row = search.fnil_exact(2, k, cmax)
            values = row.exponents
            source = "exact (exhaustive search)"
        else:
            values = search.TABLE2_REFERENCE[k]
            source = "reference (not recomputed)"
        print(f"{k:>3} | " + " ".join(f"{v:>3}" for v in values) + f" | {source}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilbound",
        description=(
            "Bounds, witness constructions, and exhaustive search for the "
            "maximum order of nilpotent transitive permutation groups."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_bound = sub.add_parser("bound", help="bound exponents for degree p^k, class <= c")
    p_bound.add_argument("--p", type=int, required=True)
    p_bound.add_argument("--k", type=int, required=True)
    p_bound.add_argument("--c", type=int, required=True)
    p_bound.add_argument("--json", action="store_true")
    p_bound.set_defaults(func=cmd_bound)

    p_construct = sub.add_parser("construct", help="realize a blueprint as a permutation group")
    p_construct.add_argument(
        "--blueprint",
        required=True,
        help="blueprint JSON: inline, a file path, or - for stdin",
    )
    p_construct.set_defaults(func=cmd_construct)

    p_analyze = sub.add_parser("analyze", help="analyze a group given as JSON")
    p_analyze.add_argument(
        "--group",
        required=True,
        help="group JSON: inline, a file path, or - for stdin",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_search = sub.add_parser("search", help="exhaustive transitive-subgroup search")
    p_search.add_argument("--p", type=int, required=True)
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument("--cmax", type=int, default=8)
    p_search.add_argument("--budget", type=int, default=None)
    p_search.add_argument("--dedupe", choices=("set", "conjugacy"), default="conjugacy")
    p_search.add_argument("--audit", action="store_true")
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(func=cmd_search)

    p_table = sub.add_parser("table", help="print the bound/search tables")
    mode = p_table.add_mutually_exclusive_group(required=True)
    mode.add_argument("--table1", action="store_true")
    mode.add_argument("--table2", action="store_true")
    p_table.add_argument("--kmax", type=int, default=10)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NotNilpotentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
