"""Command-line front end.

Exit codes: 0 = success / settled, 1 = open or inconclusive finding,
2 = input error (malformed JSON is reported with line and column).
Machine-readable output is sorted and timestamp-free so repeated runs are
byte-identical; PGQ_THREADS caps worker threads where work is sharded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import brauer, fixtures, helpmethod, numtheory, selftest, tableaux

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_INPUT = 2


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PGQ_THREADS", "1")))
    except ValueError:
        return 1


def _emit_json(doc, out):
    json.dump(doc, out, indent=1, sort_keys=True)
    out.write("\n")


def _load(path: str) -> dict:
    return fixtures.resolve(path)


def cmd_help_check(args, out) -> int:
    doc = _load(args.table)
    if "rows" in doc:
        fixture = helpmethod.InequalityRowsFixture.from_json(doc)
        if args.order != fixture.unit_order:
            raise ValueError(
                f"fixture carries rows for order {fixture.unit_order}, not {args.order}"
            )
        points = fixture.feasible_points()
        if args.format == "json":
            _emit_json(
                {"group": fixture.group, "order": args.order,
                 "status": "feasible" if points else "infeasible",
                 "points": [list(p) for p in points]}, out)
        else:
            if points:
                sample = ", ".join(f"({a}, {b})" for a, b in points[:5])
                out.write(
                    f"FEASIBLE: feasible point exists for order {args.order} in "
                    f"{fixture.group}: {len(points)} integer points, e.g. {sample}\n"
                )
            else:
                out.write(
                    f"INFEASIBLE: no normalized unit of order {args.order} in {fixture.group}\n"
                )
        return EXIT_FINDING if points else EXIT_OK

    slice_ = helpmethod.CharacterTableSlice.from_json(doc)
    chars = args.characters.split(",") if args.characters else None
    result = helpmethod.feasible_partial_augmentations(slice_, args.order, characters=chars)
    if args.format == "json":
        _emit_json(
            {"group": slice_.group_name, "order": args.order, "status": result.status,
             "variables": result.variables, "bounds": result.bounds,
             "feasible": [pa.to_json() for pa in result.feasible]}, out)
    else:
        if result.status == "infeasible":
            out.write(
                f"INFEASIBLE: no normalized unit of order {args.order} in {slice_.group_name}\n"
            )
            if result.bounds:
                for v, (lo, hi) in sorted(result.bounds.items()):
                    out.write(f"  derived bounds: {lo} <= e_{v} <= {hi}\n")
            for c in result.congruences:
                if c.classes:
                    out.write(f"  congruence: {c}\n")
        elif result.status == "unbounded":
            out.write("INCONCLUSIVE: unbounded search region (no character pins a variable)\n")
        elif result.status == "too-large":
            out.write("INCONCLUSIVE: search region too large for exact enumeration\n")
        else:
            out.write(
                f"FEASIBLE: {len(result.feasible)} partial augmentation vector(s) of order "
                f"{args.order} survive all constraints in {slice_.group_name}\n"
            )
            for pa in result.feasible[:10]:
                out.write(f"  {json.dumps(pa.to_json()['entries'], sort_keys=True)}\n")
    return EXIT_OK if result.status == "infeasible" else EXIT_FINDING


def cmd_verdict(args, out) -> int:
    profile = brauer.GroupArithmeticProfile.from_json(_load(args.profile))
    report = brauer.group_verdict_table(profile)
    if args.format == "json":
        _emit_json(report.to_json(), out)
    elif args.format == "csv":
        out.write("p,q,verdict\n")
        for (p, q), v in sorted(report.verdicts.items()):
            out.write(f"{p},{q},{v}\n")
    else:
        out.write(f"{profile.name}: prime pairs of |G| = {profile.order}\n")
        for (p, q), v in sorted(report.verdicts.items()):
            out.write(f"  ({p}, {q}): {v}\n")
        if report.fully_settled:
            out.write("fully settled: every pair is an edge or settled by the theorem\n")
        else:
            pairs = ", ".join(f"{p}*{q}" for p, q in report.open_pairs)
            out.write(f"open pairs remain: {pairs}\n")
    return EXIT_OK if report.fully_settled else EXIT_FINDING


def cmd_tree_check(args, out) -> int:
    tree = brauer.BrauerTreeSpec.from_json(_load(args.tree))
    diags = brauer.validate_tree(tree)
    if args.format == "json":
        _emit_json({"valid": not diags, "diagnostics": diags}, out)
    else:
        if diags:
            out.write("INVALID tree:\n")
            for d in diags:
                out.write(f"  - {d}\n")
        else:
            out.write(
                f"valid Brauer tree: {len(tree.vertices)} vertices, "
                f"{len(tree.edges)} edges, p = {tree.prime}, t = {tree.t}\n"
            )
    return EXIT_OK if not diags else EXIT_FINDING


def cmd_sieve(args, out) -> int:
    result = numtheory.count_N(
        args.bound, condition=args.condition, method=args.method, threads=_threads()
    )
    if args.dual:
        other = "root-sieve" if args.method != "root-sieve" else "phi-factor"
        check = numtheory.count_N(args.bound, condition=args.condition, method=other)
        if check.rows != result.rows:
            raise AssertionError(
                f"dual-path disagreement: {args.method} vs {other} at bound {args.bound}"
            )
    if args.format == "csv":
        out.write("p,status,witness\n")
        for p, ok, w in result.rows:
            out.write(f"{p},{'ok' if ok else 'square'},{w if w is not None else ''}\n")
    elif args.format == "json":
        _emit_json(result.summary(), out)
    else:
        s = result.summary()
        out.write(
            f"{result.count} of {result.total_primes} primes <= {args.bound} satisfy "
            f"condition {args.condition} (method {result.method})\n"
        )
        out.write(f"  ratio = {s['ratio']:.6f}, Li(x) = {s['li_x']:.6f}, "
                  f"count/Li = {s['count_over_li']:.6f}\n")
        out.write(f"  Euler-product truncation c = {s['c_truncated']:.6f}\n")
    return EXIT_OK


def cmd_lie(args, out) -> int:
    q_factors = numtheory.factorize(args.q)
    if len(q_factors) != 1:
        raise ValueError(f"q = {args.q} is not a prime power")
    (p, f), = q_factors.items()
    spec = numtheory.LieSeriesSpec(args.family, p, f)
    verdict = numtheory.lie_series_verdict(spec)
    order, parts = numtheory.lie_order(spec)
    if args.format == "json":
        doc = verdict.to_json()
        doc["order"] = str(order.value)
        doc["order_factors"] = {str(p_): e for p_, e in order.factors}
        doc["order_breakdown"] = {label: str(v) for label, v in parts}
        _emit_json(doc, out)
    else:
        out.write(f"{args.family} at q = {args.q}: "
                  f"{'settled' if verdict.settled else 'not-settled-by-lemma'}\n")
        out.write(f"  c = alpha(f) = {verdict.c}; polynomial value = {verdict.poly_value}; "
                  f"alpha = {verdict.alpha_of_poly}\n")
        for name, ok in sorted(verdict.conditions.items()):
            out.write(f"  {name}: {'yes' if ok else 'NO'}\n")
        out.write(f"  |G| = {order.value}\n")
    return EXIT_OK if verdict.settled else EXIT_FINDING


def cmd_tableaux_verify(args, out) -> int:
    names = [args.lemma] if args.lemma else sorted(tableaux.ALL_VERIFIERS)
    reports = {}
    for name in names:
        reports[name] = tableaux.ALL_VERIFIERS[name](args.max_boxes)
    ok = all(r.ok for r in reports.values())
    if args.format == "json":
        _emit_json({name: r.to_json() for name, r in reports.items()}, out)
    else:
        for name in names:
            r = reports[name]
            out.write(
                f"{name}: checked {r.checked} tableaux up to {args.max_boxes} boxes, "
                f"{len(r.violations)} violation(s)\n"
            )
    return EXIT_OK if ok else EXIT_FINDING


def cmd_selftest(args, out) -> int:
    ok = selftest.run(out)
    return EXIT_OK if ok else EXIT_FINDING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgq",
        description="prime-graph verification toolkit: HeLP feasibility, Brauer-tree "
        "inequalities, tableau lemma verifiers and squarefree sieves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("help-check", help="integer feasibility of a hypothetical unit order")
    p.add_argument("--table", required=True, help="character-table slice or inequality-rows JSON")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--characters", help="comma-separated character names (default: all)")
    add_format(p)
    p.set_defaults(fn=cmd_help_check)

    p = sub.add_parser("verdict", help="prime-pair verdict table for a group profile")
    p.add_argument("--profile", required=True)
    add_format(p, ("text", "json", "csv"))
    p.set_defaults(fn=cmd_verdict)

    p = sub.add_parser("tree-check", help="validate a Brauer tree specification")
    p.add_argument("--tree", required=True)
    add_format(p)
    p.set_defaults(fn=cmd_tree_check)

    p = sub.add_parser("sieve", help="squarefree census of cyclotomic values at primes")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--condition", choices=sorted(numtheory.CONDITIONS), default="thm51")
    p.add_argument("--method", choices=("phi-factor", "root-sieve", "full-F"),
                   default="phi-factor")
    p.add_argument("--dual", action="store_true",
                   help="cross-check against an independent counting path")
    add_format(p, ("text", "json", "csv"))
    p.set_defaults(fn=cmd_sieve)

    p = sub.add_parser("lie", help="order formula and squarefreeness verdict for a Lie series")
    p.add_argument("--family", choices=numtheory.LIE_FAMILIES, required=True)
    p.add_argument("--q", type=int, required=True, help="prime power field size")
    add_format(p)
    p.set_defaults(fn=cmd_lie)

    p = sub.add_parser("tableaux-verify", help="exhaustive skew-tableau lemma verifiers")
    p.add_argument("--max-boxes", type=int, default=8)
    p.add_argument("--lemma", choices=sorted(tableaux.ALL_VERIFIERS))
    add_format(p)
    p.set_defaults(fn=cmd_tableaux_verify)

    p = sub.add_parser("selftest", help="run the bundled oracle and fixture checks")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args, out)
    except json.JSONDecodeError as e:
        print(f"input error: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}",
              file=sys.stderr)
        return EXIT_INPUT
    except (FileNotFoundError, KeyError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    raise SystemExit(main())
