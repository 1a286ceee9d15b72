"""Command-line interface.

Subcommands: `criterion` (rank prediction for one discriminant), `lvalue`
(central L-value of a twist), `theta` (theta series of a Gram matrix),
`search-matrices` (candidate enumeration and decomposition), `verify`
(the full reproduction suite).  Exit codes: 0 success, 1 check or
computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import criterion as criterion_mod
from . import fixtures, latticesearch, lfun, theta, verify


def _criterion_cmd(args) -> int:
    try:
        report = criterion_mod.predict(args.d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = report.to_json_dict()
    if args.explain and report.case not in ("negative-d",):
        row = criterion_mod.companion(report.reduced_d)
        payload["coefficient"] = report.coefficient
        payload["companion"] = {
            "d2": row.d2,
            "coefficient": row.coefficient,
            "l_value": row.l_value,
            "form": f"f{row.f_index}",
        }
        if args.with_lvalue:
            r = lfun.l_value(report.reduced_d, 1e-4)
            payload["l_value"] = r.value
            payload["l_value_tail_bound"] = r.tail_bound
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"d = {report.input_d} (reduced: {report.reduced_d})")
        for step in report.reduction_trail:
            print(f"  {step}")
        print(f"case: {report.case}")
        if report.counts is not None:
            print(f"solution counts: {report.counts[0]} vs {report.counts[1]}")
        prediction = "positive" if report.predicted_positive_rank else "zero"
        print(f"predicted rank over Q(sqrt(d)): {prediction} (conditional on BSD)")
        if args.explain:
            for key in ("coefficient", "companion", "l_value", "l_value_tail_bound"):
                if key in payload:
                    print(f"{key}: {payload[key]}")
    return 0


def _lvalue_cmd(args) -> int:
    try:
        result = lfun.l_value(args.d, args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.max_terms and result.terms_used > args.max_terms:
        print(
            f"error: needs {result.terms_used} terms, above --max-terms",
            file=sys.stderr,
        )
        return 1
    payload = {
        "d": args.d,
        "value": result.value,
        "terms_used": result.terms_used,
        "tail_bound": result.tail_bound,
        "declared_zero": result.declared_zero,
        "sign": result.sign,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _theta_cmd(args) -> int:
    try:
        a, b, c, d, e, f = (int(x) for x in args.gram.split(","))
        form = theta.validate([[a, b, c], [b, d, e], [c, e, f]])
    except (ValueError, theta.FormValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    series = theta.theta_series(form, args.limit)
    info = theta.level_and_character(form)
    payload = {
        "gram": [list(row) for row in form.gram],
        "level": info.level,
        "character_label": info.character_label,
        "character_kernel": info.character_kernel,
        "coefficients": {str(n): int(v) for n, v in series.items()},
        "limit": args.limit,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _search_cmd(args) -> int:
    constraints = latticesearch.SearchConstraints(
        max_entry=args.max_entry,
        level_divides=args.level,
        diagonal_only=args.diagonal_only,
        require_full_level=not args.any_dividing_level,
    )
    forms = latticesearch.enumerate_candidates(constraints)
    payload: dict = {
        "count": len(forms),
        "matrices": [[list(row) for row in f.gram] for f in forms],
    }
    if args.target:
        targets = {args.target: fixtures.series(args.target)}
        solutions = latticesearch.decompose_targets(targets, forms, 42)
        sol = solutions[args.target]
        payload["decomposition"] = (
            None
            if sol is None
            else {
                "coefficients": [str(c) for c in sol.coefficients],
                "unique": sol.unique,
            }
        )
    print(json.dumps(payload, sort_keys=True))
    return 0


def _verify_cmd(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        result = verify.run_suite(name)
        print(f"suite {name} ({result.elapsed:.1f}s)")
        for check in result.checks:
            mark = "PASS" if check.passed else "FAIL"
            print(f"  [{mark}] {check.label}: {check.detail}")
            if not check.passed:
                failed += 1
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank49",
        description="Rank criterion for the level-49 CM curve over quadratic fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("criterion", help="predict rank positivity over Q(sqrt(d))")
    p.add_argument("d", type=int)
    p.add_argument("--explain", action="store_true")
    p.add_argument("--with-lvalue", action="store_true", help="slow numeric cross-check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_criterion_cmd)

    p = sub.add_parser("lvalue", help="central L-value of the d-th twist")
    p.add_argument("d", type=int)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-terms", type=int, default=0)
    p.set_defaults(func=_lvalue_cmd)

    p = sub.add_parser("theta", help="theta series of a ternary Gram matrix")
    p.add_argument("--gram", required=True, help="a,b,c,d,e,f upper triangle")
    p.add_argument("--limit", type=int, default=42)
    p.set_defaults(func=_theta_cmd)

    p = sub.add_parser("search-matrices", help="enumerate candidate Gram matrices")
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--level", type=int, default=196)
    p.add_argument("--diagonal-only", action="store_true")
    p.add_argument("--any-dividing-level", action="store_true")
    p.add_argument("--target", choices=("f1", "f2", "f3", "g1"))
    p.set_defaults(func=_search_cmd)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument(
        "--suite",
        choices=("ueda", "theta", "shimura", "lfun", "criterion", "all"),
        default="all",
    )
    p.set_defaults(func=_verify_cmd)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
