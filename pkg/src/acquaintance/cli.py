"""Command-line interface: ``acquaintance {gen,synth,verify,exact,bounds,bench,dot}``.

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .bounds import barbell_lower_bound, contour_bound
from .contour import to_dot
from .exact import DEFAULT_MAX_STATES, exact_ac_iddfs, solve_exact
from .exceptions import AcquaintanceError, BudgetExceededError
from .graph import (
    FAMILIES,
    TREE_POLICIES,
    family,
    giant_component,
    gnp,
    random_tree,
    spanning_tree,
)
from .contour import contour
from .simulator import run
from .synthesis import PATH_ROUNDS, synthesize
from .validation import read_graph, read_strategy

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
RANDOM_FAMILIES = ("gnp", "tree")
BENCH_COLUMNS = ["n", "graph_max_degree", "tree_max_degree", "rounds_used", "bound", "completion_round"]


def _dump(obj, path=None):
    text = json.dumps(obj, indent=None, separators=(",", ":")) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def make_graph(kind, n, p=None, rng=None):
    """Graph for ``gen`` and ``bench``; random kinds draw from ``rng``."""
    if kind == "gnp":
        if p is None:
            raise ValueError("gnp needs an edge probability p")
        return giant_component(gnp(n, p, rng))
    if kind == "tree":
        return random_tree(n, rng)
    return family(kind, n)


def cmd_gen(args):
    if args.family in RANDOM_FAMILIES and args.seed is None:
        raise ValueError(f"family {args.family} needs --seed")
    rng = random.Random(args.seed)
    _dump(make_graph(args.family, args.n, args.p, rng).to_dict(), args.output)
    return EXIT_OK


def cmd_synth(args):
    g = read_graph(args.graph)
    report = synthesize(g, args.root, args.tree_policy, args.path_rounds)
    if args.output:
        _dump(report.strategy.to_dict(), args.output)
        report_path = args.report or "-"
    else:
        _dump(report.strategy.to_dict())
        report_path = args.report
    if report_path is None:
        sys.stderr.write(json.dumps(report.to_dict()) + "\n")
    else:
        _dump(report.to_dict(), report_path)
    return EXIT_OK if report.verified else EXIT_FAILED


def cmd_verify(args):
    g = read_graph(args.graph)
    strategy = read_strategy(args.strategy, g)
    trace = None
    if args.trace:
        def trace(r, m, new):
            sys.stderr.write(json.dumps({"round": r, "matching": sorted(map(list, m)), "new": new}) + "\n")
    report = run(g, strategy, trace=trace)
    _dump(report.to_dict())
    return EXIT_OK if report.valid and report.all_acquainted else EXIT_FAILED


def cmd_exact(args):
    g = read_graph(args.graph)
    try:
        result = solve_exact(g, args.max_states, prune=not args.no_prune)
    except BudgetExceededError as exc:
        _dump({"budget_exceeded": True, "states_explored": exc.states_explored, "max_states": exc.budget})
        return EXIT_BUDGET
    out = result.to_dict()
    if args.check:
        out["iddfs_ac"] = exact_ac_iddfs(g)
        if out["iddfs_ac"] != result.ac:
            _dump(out)
            return EXIT_FAILED
    _dump(out)
    return EXIT_OK


def cmd_bounds(args):
    out = {"barbell": barbell_lower_bound(args.n).to_dict()}
    if args.delta is not None:
        # context only: the complementary n^2/Δ bound has no explicit constant
        out["contour_bound"] = contour_bound(args.n, args.delta)
        out["n_pow_1_5"] = round(args.n ** 1.5, 3)
    _dump(out)
    return EXIT_OK


def parse_sizes(text):
    """``"8,16,32"``, ``"8..64"`` or ``"8..64:8"`` (ranges are inclusive)."""
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, _, rest = part.partition("..")
            hi, _, step = rest.partition(":")
            sizes.extend(range(int(lo), int(hi) + 1, int(step or 1)))
        else:
            sizes.append(int(part))
    return sizes


def bench_rows(kind, sizes, seed, trials, c=3.0, policy="dfs"):
    for n in sizes:
        for trial in range(trials):
            rng = random.Random(f"{seed}-{n}-{trial}")
            g = make_graph(kind, n, c / n if kind == "gnp" else None, rng)
            rep = synthesize(g, 0, policy)
            yield [g.n, rep.graph_max_degree, rep.tree_max_degree, rep.rounds_used,
                   rep.bound, "" if rep.completion_round is None else rep.completion_round]


def cmd_bench(args):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in bench_rows(args.family, parse_sizes(args.sizes), args.seed, args.trials,
                          args.c, args.tree_policy):
        writer.writerow(row)
    return EXIT_OK


def cmd_dot(args):
    g = read_graph(args.graph)
    sys.stdout.write(to_dot(contour(spanning_tree(g, args.root, args.tree_policy))))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="acquaintance", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph as JSON")
    p.add_argument("family", choices=FAMILIES + RANDOM_FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("p", type=float, nargs="?", help="edge probability (gnp)")
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("synth", help="synthesise the contour strategy for a graph")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--tree-policy", choices=TREE_POLICIES, default="dfs")
    p.add_argument("--path-rounds", choices=PATH_ROUNDS, default="n")
    p.add_argument("-o", "--output", help="strategy file (report then goes to stdout)")
    p.add_argument("--report", help="report file (default: stderr, or stdout with -o)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="simulate a strategy and report acquaintance")
    p.add_argument("graph")
    p.add_argument("strategy")
    p.add_argument("--trace", action="store_true", help="per-round trace on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact acquaintance time by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--check", action="store_true", help="cross-check with iterative deepening")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="barbell lower bound table and 20Δn bound")
    p.add_argument("n", type=int)
    p.add_argument("--delta", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="CSV of contour strategy lengths")
    p.add_argument("--family", choices=FAMILIES + RANDOM_FAMILIES, default="path")
    p.add_argument("--sizes", default="8..64:8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--c", type=float, default=3.0, help="mean degree for gnp (p = c/n)")
    p.add_argument("--tree-policy", choices=TREE_POLICIES, default="dfs")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dot", help="Graphviz DOT of the marked contour")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--tree-policy", choices=TREE_POLICIES, default="dfs")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (AcquaintanceError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
