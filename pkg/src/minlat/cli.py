"""Command-line front end.

Subcommands: table (closed-form values over parameter ranges), verify
(cross-check suites), series (coefficient dumps), sample (Monte Carlo
runs), weyl (root-system constructions).  All output is deterministic
given the flags; exit codes are 0 success, 1 usage error, 2 domain
error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import distance, formulas, montecarlo, posets, series, verify, weyl

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

CAPS = {
    "rect_side": 12,
    "stair_n": 16,
    "diamond_t": 128,
    "series_order": 40,
}
UNSAFE_CAPS = {
    "rect_side": 64,
    "stair_n": 24,
    "diamond_t": 100_000,
    "series_order": 200,
}

TABLE_COLUMNS = ("family", "m", "k", "n", "t", "count", "wiener", "d2", "mean_num", "mean_den")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_range(text: str, name: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--{name} expects an integer or A..B range, got {text!r}")
    if hi < lo:
        raise UsageError(f"--{name} range {text!r} is empty")
    return range(lo, hi + 1)


def _cap(value: int, cap_key: str, name: str, unsafe: bool) -> None:
    limit = (UNSAFE_CAPS if unsafe else CAPS)[cap_key]
    if value > limit:
        hint = "" if unsafe else " (override with --unsafe-caps)"
        raise UsageError(f"--{name} value {value} exceeds the cap {limit}{hint}")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


# --- table -------------------------------------------------------------------


def _table_rows(args) -> list[dict]:
    rows = []
    if args.family == "rect":
        if args.m is None or args.k is None:
            raise UsageError("rect tables need --m and --k")
        for m in _parse_range(args.m, "m"):
            for k in _parse_range(args.k, "k"):
                if m < 1 or k < 1:
                    raise UsageError("rectangle sides must be positive")
                _cap(m, "rect_side", "m", args.unsafe_caps)
                _cap(k, "rect_side", "k", args.unsafe_caps)
                mean = formulas.mean_distance_exact("rect", m, k)
                rows.append(
                    {
                        "family": "rect", "m": m, "k": k, "n": None, "t": None,
                        "count": formulas.count("rect", m, k),
                        "wiener": formulas.wiener_rectangle(m, k),
                        "d2": formulas.second_moment_rectangle(m, k),
                        "mean_num": mean.numerator, "mean_den": mean.denominator,
                    }
                )
    elif args.family == "stair":
        if args.n is None:
            raise UsageError("stair tables need --n")
        for n in _parse_range(args.n, "n"):
            if n < 1:
                raise UsageError("staircase size must be positive")
            _cap(n, "stair_n", "n", args.unsafe_caps)
            mean = formulas.mean_distance_exact("stair", n)
            rows.append(
                {
                    "family": "stair", "m": None, "k": None, "n": n, "t": None,
                    "count": formulas.count("stair", n),
                    "wiener": formulas.wiener_staircase(n),
                    "d2": formulas.second_moment_staircase(n),
                    "mean_num": mean.numerator, "mean_den": mean.denominator,
                }
            )
    else:
        if args.t is None:
            raise UsageError("diamond tables need --t")
        for t in _parse_range(args.t, "t"):
            if t < 0:
                raise UsageError("tail length must be nonnegative")
            _cap(t, "diamond_t", "t", args.unsafe_caps)
            mean = formulas.mean_distance_exact("diamond", t)
            lattice = posets.double_tailed_diamond_lattice(t)
            d2 = distance.wiener_moment_bfs(distance.Graph.from_lattice(lattice), 2)
            rows.append(
                {
                    "family": "diamond", "m": None, "k": None, "n": None, "t": t,
                    "count": formulas.count("diamond", t),
                    "wiener": formulas.wiener_diamond(t),
                    "d2": d2,
                    "mean_num": mean.numerator, "mean_den": mean.denominator,
                }
            )
    return rows


def _rows_to_csv(rows: list[dict]) -> str:
    lines = [",".join(TABLE_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join("" if row[c] is None else str(row[c]) for c in TABLE_COLUMNS)
        )
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    rows = _table_rows(args)
    if args.format == "csv":
        _emit(_rows_to_csv(rows), args.output)
    else:
        _emit(_json_dump(rows), args.output)
    if args.figures:
        from . import figures

        figures.render_table_figure(args.family, rows, args.figures)
    return EXIT_OK


# --- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    checks = verify.run_suite(args.suite)
    failed = [c for c in checks if not c["passed"]]
    report = {
        "suite": args.suite,
        "num_checks": len(checks),
        "num_failed": len(failed),
        "passed": not failed,
        "checks": checks,
    }
    _emit(_json_dump(report), args.output)
    return EXIT_VERIFY if failed else EXIT_OK


# --- series ------------------------------------------------------------------


def cmd_series(args) -> int:
    _cap(args.order, "series_order", "order", args.unsafe_caps)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    builder, _, univariate = series.SERIES_BUILDERS[args.name]
    f = builder(args.order)
    entries = []
    for n in range(args.order + 1):
        for k in range(n + 1):
            if univariate and k > 0:
                continue
            c = f.coefficient(n, k)
            entry = {"n": n, "num": c.numerator, "den": c.denominator}
            if not univariate:
                entry["k"] = k
            entries.append(entry)
    if args.format == "csv":
        if univariate:
            lines = ["n,num,den"] + [
                f"{e['n']},{e['num']},{e['den']}" for e in entries
            ]
        else:
            lines = ["n,k,num,den"] + [
                f"{e['n']},{e['k']},{e['num']},{e['den']}" for e in entries
            ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(_json_dump({"name": args.name, "order": args.order, "coefficients": entries}), args.output)
    return EXIT_OK


# --- sample ------------------------------------------------------------------


def cmd_sample(args) -> int:
    alpha = None
    if args.family == "rect":
        try:
            alpha = Fraction(args.alpha)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--alpha must be a rational number, got {args.alpha!r}")
    report = montecarlo.run_experiment(
        family=args.family,
        n=args.n,
        alpha=alpha,
        r_max=args.r_max,
        num_samples=args.num_samples,
        seed=args.seed,
        batch_size=args.batch_size,
    )
    _emit(_json_dump(report.to_dict()), args.output)
    if args.figures:
        from . import figures

        figures.render_sample_figure(report, args.figures)
    return EXIT_OK


# --- weyl --------------------------------------------------------------------


_RECOGNIZERS = ("rect", "stair", "diamond", "E6", "E7")


def _recognize(lattice: weyl.MinusculeLattice) -> str | None:
    from .verify import _isomorphic

    graph = lattice.hasse_graph()
    size = len(lattice)
    wiener = distance.wiener_moment_bfs(graph)
    if size == 27 and wiener == formulas.WIENER_E6:
        return "E6"
    if size == 56 and wiener == formulas.WIENER_E7:
        return "E7"
    candidates = []
    for m in range(1, 13):
        for k in range(m, 13):
            if formulas.count("rect", m, k) == size:
                candidates.append(("rect", (m, k), lambda m=m, k=k: posets.order_ideals(posets.rectangle_poset(m, k))))
    for n in range(1, 17):
        if formulas.count("stair", n) == size:
            candidates.append(("stair", (n,), lambda n=n: posets.order_ideals(posets.staircase_poset(n))))
    if size >= 4 and size % 2 == 0:
        t = (size - 4) // 2
        candidates.append(("diamond", (t,), lambda t=t: posets.double_tailed_diamond_lattice(t)))
    for name, params, build in candidates:
        if _isomorphic(graph, distance.Graph.from_lattice(build())):
            return f"{name}{params}".replace(" ", "")
    return None


def cmd_weyl(args) -> int:
    family = args.type
    if family in ("E6", "E7"):
        rank = 6 if family == "E6" else 7
        if args.rank is not None and args.rank != rank:
            raise UsageError(f"type {family} has rank {rank}")
    else:
        if args.rank is None:
            raise UsageError(f"type {family} needs --rank")
        rank = args.rank
    matrix = weyl.cartan(family, rank)
    node = args.node if args.node is not None else weyl.default_minuscule_node(family, rank)
    try:
        lattice = weyl.minuscule_weight_lattice(matrix, node)
    except weyl.NotMinusculeError as exc:
        _emit(
            _json_dump(
                {
                    "type": family, "rank": rank, "node": node,
                    "is_minuscule": False, "error": str(exc),
                }
            ),
            args.output,
        )
        return EXIT_DOMAIN
    graph = lattice.hasse_graph()
    summary = {
        "type": family,
        "rank": rank,
        "node": node,
        "is_minuscule": True,
        "size": len(lattice),
        "wiener": distance.wiener_moment_bfs(graph),
        "isomorphic_to": _recognize(lattice),
    }
    _emit(_json_dump(summary), args.output)
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="minlat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="closed-form value tables over parameter ranges")
    p_table.add_argument("--family", required=True, choices=("rect", "stair", "diamond"))
    p_table.add_argument("--m", help="rectangle rows, integer or A..B")
    p_table.add_argument("--k", help="rectangle columns, integer or A..B")
    p_table.add_argument("--n", help="staircase size, integer or A..B")
    p_table.add_argument("--t", help="diamond tail length, integer or A..B")
    p_table.add_argument("--format", default="csv", choices=("csv", "json"))
    p_table.add_argument("--output", help="write to this path instead of stdout")
    p_table.add_argument("--figures", metavar="DIR", help="also render a figure into DIR")
    p_table.add_argument("--unsafe-caps", action="store_true", help="raise the size caps")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run cross-check suites")
    p_verify.add_argument("--suite", required=True, choices=("all",) + verify.SUITES)
    p_verify.add_argument("--output", help="write the JSON report to this path")
    p_verify.set_defaults(func=cmd_verify)

    p_series = sub.add_parser("series", help="dump exact series coefficients")
    p_series.add_argument("--name", required=True, choices=tuple(series.SERIES_BUILDERS))
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--format", default="csv", choices=("csv", "json"))
    p_series.add_argument("--output")
    p_series.add_argument("--unsafe-caps", action="store_true")
    p_series.set_defaults(func=cmd_series)

    p_sample = sub.add_parser("sample", help="Monte Carlo scaled distance moments")
    p_sample.add_argument("--family", required=True, choices=("rect", "stair"))
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--alpha", default="1", help="rect aspect ratio, a rational like 2 or 1/2")
    p_sample.add_argument("--r-max", type=int, default=3, choices=(1, 2, 3))
    p_sample.add_argument("--num-samples", type=int, default=100_000)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--batch-size", type=int, default=montecarlo.DEFAULT_BATCH)
    p_sample.add_argument("--output")
    p_sample.add_argument("--figures", metavar="DIR")
    p_sample.set_defaults(func=cmd_sample)

    p_weyl = sub.add_parser("weyl", help="minuscule lattice from a Cartan matrix")
    p_weyl.add_argument("--type", required=True, choices=("A", "B", "C", "D", "E6", "E7"))
    p_weyl.add_argument("--rank", type=int)
    p_weyl.add_argument("--node", type=int, help="1-based fundamental weight index")
    p_weyl.add_argument("--output")
    p_weyl.set_defaults(func=cmd_weyl)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        ValueError,
        ArithmeticError,
        posets.ResourceLimitExceeded,
        distance.DisconnectedGraphError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
