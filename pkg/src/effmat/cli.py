"""Command-line front end: ``effmat <command> [options]``.

Exit codes: 0 success (or efficient / Equal), 1 inefficient / NotEqual,
2 parse or validation error, 3 dimension above the cap, 4 dimension mismatch,
5 Unknown comparison verdict.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as fio
from .core import format_matrix
from .efficiency import efficiency_report
from .equality import STRATEGIES, Status, decide_equal_efficient_sets, search_counterexamples
from .errors import DimensionExceedsCap, DimensionMismatch, EffmatError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4
EXIT_UNKNOWN = 5


# -- text rendering ----------------------------------------------------------


def _grid(rows) -> str:
    return format_matrix(rows)


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


def _seq(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _order_text(order) -> str:
    return "none" if order is None else " > ".join(map(str, order))


def _pairs_text(pairs) -> str:
    return ", ".join(f"{i}>{j}" for i, j in pairs) or "none"


def _consistent_text(r: dict) -> list[str]:
    return [
        "matrix is consistent",
        f"efficient vectors: {r['efficient_set']}, e.g. {_seq(r['column'])}",
    ]


def _gamma_text(r: dict) -> list[str]:
    lines = [f"cycles with product < 1: {len(r['gamma'])}"]
    lines += [f"  {g['cycle']}  product {g['product']}" for g in r["gamma"]]
    return lines


def render_analysis(r: dict) -> str:
    if r["consistent"]:
        return "\n".join(_consistent_text(r))
    lines = _gamma_text(r)
    for c in r["cones"]:
        lines += [
            "",
            f"cone {c['cycle']} (product {c['product']})",
            "  lower bound:",
            _indent(_grid(c["lower"])),
            "  upper bound:",
            _indent(_grid(c["upper"])),
            "  extremes:",
        ]
        lines += [f"    {_seq(e)}" for e in c["extremes"]]
        lines.append(f"  unique order: {_order_text(c['unique_order'])}")
        lines.append("  partition: " + " | ".join(_seq(b) for b in c["partition"]))
    g = r["global"]
    lines += [
        "",
        "global lower bound L:",
        _indent(_grid(g["lower"])),
        "global upper bound U:",
        _indent(_grid(g["upper"])),
        f"global unique order: {_order_text(g['unique_order'])}",
        f"always above: {_pairs_text(g['pairwise_above'])}",
    ]
    for pm in r.get("path_matrices", []):
        lines += ["", f"path matrix {pm['cycle']} (product {pm['product']})", _indent(_grid(pm["matrix"]))]
    return "\n".join(lines)


def render_bounds(r: dict) -> str:
    if r["consistent"]:
        return "\n".join(_consistent_text(r))
    return "\n".join(
        _gamma_text(r)
        + ["", "L:", _indent(_grid(r["lower"])), "U:", _indent(_grid(r["upper"]))]
    )


def render_orders(r: dict) -> str:
    if r["consistent"]:
        return "\n".join(_consistent_text(r))
    lines = []
    for c in r["cones"]:
        lines.append(
            f"{c['cycle']}: order {_order_text(c['unique_order'])}; partition "
            + " | ".join(_seq(b) for b in c["partition"])
        )
    g = r["global"]
    lines.append(f"global unique order: {_order_text(g['unique_order'])}")
    lines.append(f"always above: {_pairs_text(g['pairwise_above'])}")
    return "\n".join(lines)


def render_extremes(r: dict) -> str:
    if r["consistent"]:
        return "\n".join(_consistent_text(r))
    lines = []
    for c in r["cones"]:
        lines.append(f"cone {c['cycle']}")
        for e in c["extremes"]:
            flag = "  undominated" if e["undominated"] else ""
            lines.append(f"  k={e['anchor']}: {_seq(e['vector'])}{flag}")
    return "\n".join(lines)


def render_efficiency(r: dict) -> str:
    lines = [f"efficient: {'yes' if r['efficient'] else 'no'}"]
    for cyc in r["member_cones"]:
        tight = ", ".join(f"({i},{j})" for i, j in r["tight_positions"][cyc]) or "none"
        lines.append(f"  in cone {cyc}; tight at {tight}")
    return "\n".join(lines)


def render_verdict(r: dict) -> str:
    lines = [f"verdict: {r['status']}"]
    for c in r["evidence"]:
        detail = f"  [{c['detail']}]" if c["detail"] else ""
        lines.append(f"  {c['name']:<22} {c['outcome']}{detail}")
    if r["witness"] is not None:
        lines.append(f"witness: {_seq(r['witness'])} (efficient only for {r['witness_efficient_for']})")
    return "\n".join(lines)


def render_search(r: dict) -> str:
    lines = [
        f"n={r['n']} iterations={r['iterations']} seed={r['seed']} strategy={r['strategy']}",
        "verdicts: " + ", ".join(f"{k}={v}" for k, v in r["counts"].items()),
        f"pairs with equal lower bounds: {r['l_equal_pairs']}",
    ]
    for row in r["sanity"]:
        lines.append(f"sanity ({row['label']}): {row['status']}")
    for row in r["unknown"]:
        lines.append(f"unknown: {row['label']}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------


def _emit(args, report: dict, render) -> None:
    text = fio.dumps(report) if args.json else render(report) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args, path):
    doc = fio.load_matrix(path)
    fio.check_cap(doc.n, args.max_n)
    return doc


def cmd_analyze(args) -> int:
    _emit(args, fio.analysis_report(_load(args, args.matrix), args.full, args.max_n), render_analysis)
    return EXIT_OK


def cmd_bounds(args) -> int:
    _emit(args, fio.bounds_report(_load(args, args.matrix), args.max_n), render_bounds)
    return EXIT_OK


def cmd_orders(args) -> int:
    _emit(args, fio.orders_report(_load(args, args.matrix), args.max_n), render_orders)
    return EXIT_OK


def cmd_extremes(args) -> int:
    _emit(args, fio.extremes_report(_load(args, args.matrix), args.max_n), render_extremes)
    return EXIT_OK


def cmd_test(args) -> int:
    a = _load(args, args.matrix).matrix
    w = fio.load_vector(args.vector)
    if len(w) != a.n:
        raise DimensionMismatch(a.n, len(w))
    rep = efficiency_report(w, a, args.max_n)
    _emit(args, fio.efficiency_json(w, a, rep), render_efficiency)
    return EXIT_OK if rep.efficient else EXIT_NEGATIVE


def cmd_compare(args) -> int:
    a = _load(args, args.matrix_a).matrix
    b = _load(args, args.matrix_b).matrix
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)
    v = decide_equal_efficient_sets(a, b, args.seed)
    _emit(args, fio.verdict_json(a, b, v), render_verdict)
    return {Status.EQUAL: EXIT_OK, Status.NOT_EQUAL: EXIT_NEGATIVE, Status.UNKNOWN: EXIT_UNKNOWN}[v.status]


def cmd_search(args) -> int:
    report = search_counterexamples(args.n, args.iters, args.seed, args.strategy, max_n=args.max_n)
    if args.out:
        Path(args.out).write_text(fio.dumps(report))
        if not args.json:
            sys.stdout.write(render_search(report) + "\n")
    else:
        _emit(args, report, render_search)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effmat",
        description="Efficient weight vectors of reciprocal pairwise-comparison matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the JSON report")
    fmt.add_argument("--text", dest="json", action="store_false", help="emit readable text (default)")
    common.add_argument("--max-n", type=int, default=None, help="dimension cap (default 9 or $EFFMAT_MAX_N)")
    common.add_argument("--out", default=None, help="write the report to this file")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full cone and bound analysis")
    p.add_argument("matrix")
    p.add_argument("--full", action="store_true", help="include path matrices of every cycle")
    p.set_defaults(func=cmd_analyze)

    for name, func, text in (
        ("bounds", cmd_bounds, "global lower and upper bounds"),
        ("orders", cmd_orders, "orders shared by efficient vectors"),
        ("extremes", cmd_extremes, "cone generators and their dominance status"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("matrix")
        p.set_defaults(func=func)

    p = sub.add_parser("test", parents=[common], help="is a vector efficient?")
    p.add_argument("matrix")
    p.add_argument("vector")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("compare", parents=[common], help="do two matrices share their efficient set?")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("search", parents=[common], help="look for distinct matrices with equal efficient sets")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", choices=STRATEGIES, default="random")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DimensionExceedsCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (EffmatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
