"""Command-line front end.

Subcommands: width, decide, frontiers, check, gen, bench. Graph input is an
edge-list file path or '-' for stdin. Exit codes: 0 success, 1 decide said
no, 2 parse/usage error, 3 cyclic input, 4 oracle cross-check mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .bench import bench_run, load_configs, records_to_csv
from .generate import FAMILIES, GenConfig, dag_from_config, random_corpus
from .graph import CycleError, Dag, EdgeListParseError, induced_prefix, parse_edge_list
from .oracle import brute_frontiers, brute_rightmost_max, width_via_matching
from .sweep import FrontierSweep, compute_frontiers, decide_width_at_most

EXIT_OK = 0
EXIT_DECIDE_NO = 1
EXIT_USAGE = 2
EXIT_CYCLE = 3
EXIT_MISMATCH = 4


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _Failure(EXIT_USAGE, f"cannot read {path}: {e.strerror}") from None


def _load_dag(path: str) -> Dag:
    try:
        return parse_edge_list(_read_input(path))
    except EdgeListParseError as e:
        raise _Failure(EXIT_USAGE, f"parse error: {e}") from None
    except CycleError as e:
        # the witness is the contract output for cyclic inputs
        print("cycle: " + " ".join(str(v) for v in e.witness))
        raise _Failure(EXIT_CYCLE, "") from None


def _sorted_labels(g: Dag, antichain: tuple[int, ...]) -> list[str]:
    return sorted(g.labels[v] for v in antichain)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    elif text:
        print(text)


def cmd_width(args: argparse.Namespace) -> int:
    g = _load_dag(args.input)
    result = compute_frontiers(g)
    labels = _sorted_labels(g, result.best)
    text = f"width: {len(result.best)}\nantichain:"
    if labels:
        text += " " + " ".join(labels)
    _emit(
        args,
        {
            "width": len(result.best),
            "antichain": labels,
            "n": g.n,
            "m": g.m,
            "max_frontier_count": result.stats.max_frontier_count,
        },
        text,
    )
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    if args.max_width < 0:
        raise _Failure(EXIT_USAGE, "--max-width must be >= 0")
    g = _load_dag(args.input)
    answer = decide_width_at_most(g, args.max_width)
    _emit(
        args,
        {"max_width": args.max_width, "width_at_most": answer},
        "yes" if answer else "no",
    )
    return EXIT_OK if answer else EXIT_DECIDE_NO


def cmd_frontiers(args: argparse.Namespace) -> int:
    g = _load_dag(args.input)
    result = compute_frontiers(g)
    by_size: dict[int, list[list[str]]] = {}
    for antichain in result.frontiers:
        if antichain:
            by_size.setdefault(len(antichain), []).append(_sorted_labels(g, antichain))
    for group in by_size.values():
        group.sort()
    count = sum(len(group) for group in by_size.values())
    lines = [
        f"size {size}: " + " ".join("{" + " ".join(a) + "}" for a in group)
        for size, group in sorted(by_size.items())
    ]
    lines.append(f"count: {count}")
    _emit(
        args,
        {
            "n": g.n,
            "m": g.m,
            "width": len(result.best),
            "count": count,
            "frontiers": {str(size): group for size, group in sorted(by_size.items())},
        },
        "\n".join(lines),
    )
    return EXIT_OK


def _check_one(g: Dag, limit: int) -> str | None:
    """Compare the sweep against the oracles on every prefix; None if clean."""
    sweep = FrontierSweep()
    for i in range(1, g.n + 1):
        sweep.push(g.in_neighbors[i - 1])
        expected = brute_frontiers(induced_prefix(g, i), limit)
        if sweep.frontiers != expected:
            return f"frontier sets differ at prefix {i}"
    k = sweep.width
    k_matching = width_via_matching(g)
    k_enum = len(brute_rightmost_max(g, limit))
    if not k == k_matching == k_enum:
        return f"width disagreement: sweep={k} matching={k_matching} enumeration={k_enum}"
    return None


def cmd_check(args: argparse.Namespace) -> int:
    limit = args.oracle_limit
    if args.random is not None:
        if args.input is not None:
            raise _Failure(EXIT_USAGE, "give either an input file or --random, not both")
        graphs = random_corpus(args.random, args.max_n, args.seed)
        for g in graphs:
            problem = _check_one(g, limit)
            if problem is not None:
                print(f"mismatch: {problem}\ngraph:\n{g.to_edge_list()}", end="")
                return EXIT_MISMATCH
        _emit(
            args,
            {"checked": len(graphs), "failures": 0},
            f"{len(graphs)}/{len(graphs)} ok",
        )
        return EXIT_OK
    g = _load_dag(args.input if args.input is not None else "-")
    if g.n > limit:
        raise _Failure(EXIT_USAGE, f"graph has {g.n} vertices, oracle limit is {limit}")
    problem = _check_one(g, limit)
    if problem is not None:
        print(f"mismatch: {problem}\ngraph:\n{g.to_edge_list()}", end="")
        return EXIT_MISMATCH
    _emit(args, {"prefixes": g.n, "ok": True}, f"ok ({g.n} prefixes)")
    return EXIT_OK


def _write_out(args: argparse.Namespace, content: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(content)
    else:
        sys.stdout.write(content)


def cmd_gen(args: argparse.Namespace) -> int:
    cfg = GenConfig(family=args.family, k=args.k, n=args.n, p=args.p, seed=args.seed)
    try:
        g = dag_from_config(cfg)
    except ValueError as e:
        raise _Failure(EXIT_USAGE, str(e)) from None
    if args.json:
        _write_out(args, json.dumps(g.to_json_dict()) + "\n")
    else:
        _write_out(args, g.to_edge_list())
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        configs = load_configs(_read_input(args.configs))
        records = bench_run(configs, repeats=args.repeats)
    except (ValueError, TypeError) as e:
        raise _Failure(EXIT_USAGE, str(e)) from None
    if args.json:
        _write_out(args, json.dumps([dataclasses.asdict(r) for r in records]) + "\n")
    else:
        _write_out(args, records_to_csv(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dagwidth",
        description="Width and right-most maximum antichain of a DAG "
        "via a one-pass frontier-antichain sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add_graph_command("width", "compute the width and its antichain")
    p.set_defaults(func=cmd_width)

    p = add_graph_command("decide", "decide whether the width is at most a bound")
    p.add_argument("--max-width", type=int, required=True, metavar="W")
    p.set_defaults(func=cmd_decide)

    p = add_graph_command("frontiers", "list the final frontier antichains by size")
    p.set_defaults(func=cmd_frontiers)

    p = sub.add_parser("check", help="cross-check the sweep against brute-force oracles")
    p.add_argument("input", nargs="?", default=None, help="edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--random", type=int, metavar="COUNT", help="check COUNT seeded random DAGs")
    p.add_argument("--max-n", type=int, default=10, help="max vertices per random DAG")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-limit", type=int, default=20, help="max n the oracles accept")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a width-controlled DAG as edge-list text")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, default=1, help="target width")
    p.add_argument("--n", type=int, default=0, help="vertex count (families that take one)")
    p.add_argument("--p", type=float, default=0.0, help="cross-edge probability (chain-union)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--json", action="store_true", help="emit the JSON graph form")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark the sweep over generated configs")
    p.add_argument("configs", help="JSON array of generator configs, or - for stdin")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--out", help="write the CSV to a file instead of stdout")
    p.add_argument("--json", action="store_true", help="emit records as JSON instead of CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as failure:
        if str(failure):
            print(f"dagwidth: {failure}", file=sys.stderr)
        return failure.code


def entry() -> None:
    raise SystemExit(main())
