"""Command-line interface.

Subcommands: verify, exact, color-tree, color-dense, color-sparse,
gen (gnp / tree / config), experiment. All commands are deterministic
given their arguments and seeds; rerunning writes byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import sys

from . import dense, experiments, fileio, sparse
from .coloring import DomainError, ToneColoring, verify
from .exact import SearchBudget, exact_tau, t_tone_colorable
from .generators import DegreeSequence, configuration_model, gnp, random_tree
from .graph import Graph
from .trees import Stuck, color_forest_2tone, greedy_t_tone_forest, min_greedy_palette


def _load_graph(path: str) -> Graph:
    try:
        return fileio.read_edge_list(path)
    except (OSError, fileio.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        coloring = fileio.read_coloring(args.coloring)
    except (OSError, fileio.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        result = verify(g, coloring)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if result:
        print("valid")
        return 0
    print(f"{result.u} {result.v} {result.distance} {result.overlap}")
    return 1


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    budget = SearchBudget(max_nodes=args.max_nodes)
    if args.k is not None:
        result = t_tone_colorable(g, args.t, args.k, budget)
        if isinstance(result, ToneColoring):
            print("colorable=yes")
            if args.out:
                fileio.write_coloring(result, args.out)
            return 0
        print("colorable=no")
        return 0
    tau = exact_tau(g, args.t, budget)
    print(f"tau={tau}")
    if args.out:
        witness = t_tone_colorable(g, args.t, tau, budget)
        assert isinstance(witness, ToneColoring)
        fileio.write_coloring(witness, args.out)
    return 0


def _cmd_color_tree(args) -> int:
    g = _load_graph(args.graph)
    try:
        if args.k is not None:
            result = greedy_t_tone_forest(g, args.t, args.k)
            if isinstance(result, Stuck):
                print(f"stuck at vertex {result.vertex} with k={args.k}", file=sys.stderr)
                return 1
            coloring = result
        elif args.t == 2:
            coloring = color_forest_2tone(g)
        else:
            k = min_greedy_palette(g, args.t)
            coloring = greedy_t_tone_forest(g, args.t, k)
            assert isinstance(coloring, ToneColoring)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"k_used={coloring.k}")
    if args.out:
        fileio.write_coloring(coloring, args.out)
    return 0


def _cmd_color_dense(args) -> int:
    g = _load_graph(args.graph)
    if g.n < 3:
        print("error: dense colorer needs n >= 3", file=sys.stderr)
        return 2
    if args.p is not None:
        p = args.p
    else:
        pairs = g.n * (g.n - 1) / 2
        p = min(max(g.m / pairs, 0.5 / pairs), 1.0 - 0.5 / pairs)
    params = dense.dense_params(g.n, p, restart_budget=args.restarts)
    overrides = {}
    if args.s0 is not None:
        overrides["s0"] = args.s0
    if args.s is not None:
        overrides["s"] = args.s
    if args.remainder is not None:
        overrides["remainder_threshold"] = args.remainder
    if overrides:
        params = dataclasses.replace(params, **overrides)
    coloring, reports = dense.t_tone_color_dense(g, args.t, params, args.seed)
    print(f"k_used={coloring.k}")
    if args.out:
        fileio.write_coloring(coloring, args.out)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["pass", "sets", "remainder", "greedy_colors"])
            for r in reports:
                writer.writerow([r.index, len(r.set_sizes), r.remainder_size, r.greedy_colors])
    return 0


def _cmd_color_sparse(args) -> int:
    g = _load_graph(args.graph)
    params = sparse.SparseParams(
        b0=args.b0, t=args.t, palette_escalation=not args.no_escalate
    )
    result = sparse.sparse_color(g, params)
    if isinstance(result, sparse.StructuralFailure):
        cycle = " ".join(str(v) for v in result.cycle)
        print(f"structural-failure reason={result.reason} cycle=[{cycle}]", file=sys.stderr)
        return 4
    coloring, report = result
    print(f"k_used={report.palette}")
    if args.out:
        fileio.write_coloring(coloring, args.out)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["v0_size", "shell_sizes", "h_is_forest", "h_max_component",
                 "escalations", "extended", "max_forbidden", "palette", "fallback"]
            )
            writer.writerow(
                [report.v0_size, ";".join(str(s) for s in report.shell_sizes),
                 int(report.h_is_forest), report.h_max_component, report.escalations,
                 report.extended_count, report.max_forbidden, report.palette,
                 int(report.used_fallback)]
            )
    if report.escalations > 0 or report.used_fallback:
        return 3
    return 0


def _cmd_gen(args) -> int:
    if args.generator == "gnp":
        g = gnp(args.n, args.p, args.seed)
    elif args.generator == "tree":
        g = random_tree(args.n, args.seed)
    else:  # config
        try:
            degrees = fileio.read_degree_file(args.degrees)
            d = DegreeSequence(tuple(degrees))
        except (OSError, fileio.FormatError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        mg, simple = configuration_model(d, args.seed)
        print(f"simple={'yes' if simple else 'no'}")
        g = mg.to_graph(strict=False)
    fileio.write_edge_list(g, args.out)
    print(f"n={g.n} m={g.m}")
    return 0


def _cmd_experiment(args) -> int:
    name = args.name
    try:
        if name == "tree-formula":
            result = experiments.exp_tree_formula(
                args.trials, args.n_max, args.seed, jobs=args.jobs
            )
        elif name == "lower-bound":
            result = experiments.exp_lower_bound(
                args.trials, args.n_max, args.t_list, args.seed, jobs=args.jobs
            )
        elif name == "dense-ratio":
            result = experiments.exp_dense_ratio(
                args.n_list, args.p_list, args.t,
                [args.seed + i for i in range(args.num_seeds)], jobs=args.jobs,
            )
        elif name == "sparse":
            result = experiments.exp_sparse(
                args.n_list, args.c_list,
                [args.seed + i for i in range(args.num_seeds)],
                t=args.t, b0_override=args.b0, jobs=args.jobs,
            )
        else:  # tree-scaling
            result = experiments.exp_ttone_tree_scaling(
                args.t_list, args.delta_list, args.trials, args.seed, jobs=args.jobs
            )
    except experiments.ExperimentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    experiments.write_csv(result, args.out)
    status = "pass" if result.all_pass else "FAIL"
    print(f"{result.name}: {len(result.rows)} rows, asserted flags {status}")
    print(f"wall time: {result.total_wall_ms() / 1000:.1f}s", file=sys.stderr)
    return 0 if result.all_pass else 1


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tonelab", description="t-tone graph coloring toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact tone number / colorability")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out", help="witness coloring file")
    p.add_argument("--max-nodes", type=int, default=10**18)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("color-tree", help="constructive forest coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_color_tree)

    p = sub.add_parser("color-dense", help="partition-based dense colorer")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, help="density override (default: estimated)")
    p.add_argument("--s0", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--remainder", type=int)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--out")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_color_dense)

    p = sub.add_parser("color-sparse", help="core/shell sparse colorer")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--b0", type=float)
    p.add_argument("--no-escalate", action="store_true")
    p.add_argument("--out")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_color_sparse)

    p = sub.add_parser("gen", help="instance generators")
    gen_sub = p.add_subparsers(dest="generator", required=True)
    pg = gen_sub.add_parser("gnp")
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--p", type=float, required=True)
    pg.add_argument("--seed", type=int, required=True)
    pg.add_argument("--out", required=True)
    pg.set_defaults(func=_cmd_gen)
    pt = gen_sub.add_parser("tree")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--seed", type=int, required=True)
    pt.add_argument("--out", required=True)
    pt.set_defaults(func=_cmd_gen)
    pc = gen_sub.add_parser("config")
    pc.add_argument("--degrees", required=True)
    pc.add_argument("--seed", type=int, required=True)
    pc.add_argument("--out", required=True)
    pc.set_defaults(func=_cmd_gen)

    p = sub.add_parser("experiment", help="experiment drivers writing CSV")
    exp_sub = p.add_subparsers(dest="name", required=True)

    def common(q):
        q.add_argument("--out", required=True)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--jobs", type=int, default=1)
        q.set_defaults(func=_cmd_experiment)

    q = exp_sub.add_parser("tree-formula")
    q.add_argument("--trials", type=int, default=300)
    q.add_argument("--n-max", type=int, default=9, dest="n_max")
    common(q)
    q = exp_sub.add_parser("lower-bound")
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--n-max", type=int, default=10, dest="n_max")
    q.add_argument("--t-list", type=_int_list, default=[2, 3], dest="t_list")
    common(q)
    q = exp_sub.add_parser("dense-ratio")
    q.add_argument("--n-list", type=_int_list, default=[100, 200, 400], dest="n_list")
    q.add_argument("--p-list", type=_float_list, default=[0.5], dest="p_list")
    q.add_argument("--t", type=int, default=2)
    q.add_argument("--num-seeds", type=int, default=5, dest="num_seeds")
    common(q)
    q = exp_sub.add_parser("sparse")
    q.add_argument("--n-list", type=_int_list, default=[1000], dest="n_list")
    q.add_argument("--c-list", type=_float_list, default=[0.5, 1.5], dest="c_list")
    q.add_argument("--t", type=int, default=2)
    q.add_argument("--b0", type=float)
    q.add_argument("--num-seeds", type=int, default=3, dest="num_seeds")
    common(q)
    q = exp_sub.add_parser("tree-scaling")
    q.add_argument("--t-list", type=_int_list, default=[3], dest="t_list")
    q.add_argument(
        "--delta-list", type=_int_list, default=[4, 9, 16, 25, 36], dest="delta_list"
    )
    q.add_argument("--trials", type=int, default=20)
    common(q)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
