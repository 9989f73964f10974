"""Command line interface: solve, verify, gen, bench, impsep.

Exit codes: 0 yes / success, 1 no / rejected, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from pathlib import Path

from .graph import Graph, GraphError, format_graph, read_graph
from .impsep import enumerate_important
from .pipeline import ALIASES, solve_bc, verify_witness
from .rank_cut import DEFAULT_ITER_CAP

THREADS_ENV = "BIPCONTRACT_THREADS"
EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def build_report(G: Graph, k: int, result, config: dict) -> dict:
    witness = None
    if result.witness is not None:
        witness = {
            "k": k,
            "contract_edges": result.witness.edge_pairs(G),
            "coloring": result.witness.coloring,
        }
    return {
        "answer": "yes" if result.answer else "no",
        "k": k,
        "witness": witness,
        "reason": result.reason,
        "stats": result.stats,
        "config": config,
    }


def cmd_solve(args) -> int:
    G = _load(args.input)
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    algo = ALIASES.get(args.algo, args.algo)
    result = solve_bc(
        G,
        args.k,
        algo=algo,
        seed=args.seed,
        max_iters=args.max_iters,
        iter_cap=args.iter_cap,
        workers=args.threads,
    )
    config = {
        "algo": algo,
        "seed": args.seed,
        "max_iters": args.max_iters,
        "iter_cap": args.iter_cap,
        "threads": args.threads,
    }
    report = build_report(G, args.k, result, config)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"answer: {report['answer']}")
        print(f"k: {args.k}")
        if report["witness"]:
            edges = " ".join(f"{u}-{v}" for u, v in report["witness"]["contract_edges"])
            print(f"contract_edges: {edges or '(none)'}")
            print("coloring: " + " ".join(map(str, report["witness"]["coloring"])))
        else:
            print(f"reason: {report['reason']}")
        for key in sorted(result.stats):
            print(f"{key}: {result.stats[key]}")
    return EXIT_YES if result.answer else EXIT_NO


def load_witness(path: str) -> tuple[int, list, list]:
    """Read a witness file, or a full ``solve --json`` report."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from exc
    if isinstance(data, dict) and "witness" in data:
        if data["witness"] is None:
            raise UsageError(f"{path}: report carries no witness")
        k = data.get("k", data["witness"].get("k"))
        data = dict(data["witness"], k=k)
    try:
        return int(data["k"]), list(data["contract_edges"]), list(data["coloring"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: malformed witness") from exc


def cmd_verify(args) -> int:
    G = _load(args.graph)
    k, pairs, coloring = load_witness(args.witness)
    F = set()
    for pair in pairs:
        try:
            u, v = (int(x) for x in pair)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad edge entry {pair!r}") from exc
        if not (0 <= u < G.n and 0 <= v < G.n and u != v and G.has_edge(u, v)):
            print(f"rejected: {u}-{v} is not an edge of the graph")
            return EXIT_NO
        F.add(G.edge_id(u, v))
    if len(F) > k:
        print(f"rejected: {len(F)} contractions exceed k={k}")
        return EXIT_NO
    if not verify_witness(G, k, F, coloring):
        print("rejected: coloring is not proper on the contracted graph")
        return EXIT_NO
    print("ok")
    return EXIT_YES


def planted_graph(n: int, k: int, p: float, seed: int, base: str = "random") -> Graph:
    """Bipartite base graph with k vertices split in two along a new edge.

    Each split copies a vertex's colour, so contracting the k new edges gives
    back a bipartite graph.
    """
    rng = random.Random(seed)
    if base == "cycle":
        if n < 4 or n % 2:
            raise UsageError("cycle base needs an even n >= 4")
        color = [1 + (v % 2) for v in range(n)]
        edges = {(v, (v + 1) % n) if v < (v + 1) % n else ((v + 1) % n, v) for v in range(n)}
    else:
        color = [rng.choice((1, 2)) for _ in range(n)]
        edges = {
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if color[u] != color[v] and rng.random() < p
        }
    if k > n:
        raise UsageError("cannot plant more splits than base vertices")
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for w in rng.sample(range(n), k):
        new = len(color)
        color.append(color[w])
        adj[new] = set()
        opposite = [v for v in range(new) if color[v] != color[w]]
        nbrs = {v for v in opposite if rng.random() < p}
        if adj[w]:
            nbrs.add(rng.choice(sorted(adj[w])))  # closes a triangle
        elif opposite:
            nbrs.add(rng.choice(opposite))
        nbrs.add(w)
        for v in nbrs:
            adj[new].add(v)
            adj[v].add(new)
    total = len(color)
    perm = list(range(total))
    rng.shuffle(perm)
    out = set()
    for u in adj:
        for v in adj[u]:
            a, b = perm[u], perm[v]
            out.add((min(a, b), max(a, b)))
    return Graph(total, sorted(out))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def cmd_gen(args) -> int:
    if args.n < 0 or not 0.0 <= args.p <= 1.0:
        raise UsageError("need n >= 0 and 0 <= p <= 1")
    if args.planted is None:
        if args.base != "random":
            raise UsageError("--base only applies with --planted")
        G = random_graph(args.n, args.p, args.seed)
    else:
        if args.planted < 0:
            raise UsageError("--planted must be non-negative")
        G = planted_graph(args.n, args.planted, args.p, args.seed, args.base)
    sys.stdout.write(format_graph(G))
    return EXIT_YES


BENCH_FIELDS = ["instance", "algo", "n", "m", "k", "answer", "ms", "iterations"]
GRAPH_SUFFIXES = (".txt", ".graph", ".g")


def _bench_row(name, algo, G, k, seed):
    res = solve_bc(G, k, algo=algo, seed=seed)
    return {
        "instance": name,
        "algo": algo,
        "n": G.n,
        "m": G.m,
        "k": k,
        "answer": "yes" if res.answer else "no",
        "ms": res.stats.get("wall_ms", 0),
        "iterations": res.stats.get("iterations", 0),
    }


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise UsageError(f"corpus directory {corpus} not found")
    algos = [ALIASES.get(a, a) for a in args.algo.split(",") if a]
    ks = [int(x) for x in str(args.k).split(",") if x]
    files = sorted(p for p in corpus.iterdir() if p.suffix in GRAPH_SUFFIXES)
    graphs = [(p.name, _load(str(p))) for p in files]
    writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    for algo in algos:
        for name, G in graphs:
            for k in ks:
                writer.writerow(_bench_row(name, algo, G, k, args.seed))
    if args.scaling:
        n = 8
        while n <= args.scaling_max:
            G = planted_graph(n, 1, min(1.0, 3.0 / n), args.seed)
            for algo in algos:
                writer.writerow(_bench_row(f"scale-n{n}", algo, G, 1, args.seed))
            n *= 2
    return EXIT_YES


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def cmd_impsep(args) -> int:
    G = _load(args.input)
    X, Y = set(_ints(args.x)), set(_ints(args.y))
    if X & Y:
        raise UsageError("X and Y must be disjoint")
    if any(not 0 <= v < G.n for v in X | Y):
        raise UsageError("vertex out of range")
    recs = enumerate_important(G, X, Y, args.k)
    if args.json:
        print(json.dumps([{"S": sorted(r.S), "reach": sorted(r.reach)} for r in recs]))
    else:
        for r in recs:
            print(f"S={sorted(r.S)} reach={sorted(r.reach)}")
        print(f"{len(recs)} important separator(s) of size <= {args.k}")
    return EXIT_YES


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipcontract", description="Bipartite Contraction solver")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide an instance and print a witness")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["rand", "derand", "oracle"], default="derand")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--iter-cap", type=int, default=DEFAULT_ITER_CAP)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a witness against a graph")
    p.add_argument("graph")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random or planted instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--planted", type=int, default=None)
    p.add_argument("--base", choices=["random", "cycle"], default="random")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solvers over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--algo", default="derand")
    p.add_argument("--k", default="1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scaling", action="store_true")
    p.add_argument("--scaling-max", type=int, default=64)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("impsep", help="list important X-Y separators")
    p.add_argument("--input", required=True)
    p.add_argument("--x", required=True, help="comma separated vertex ids")
    p.add_argument("--y", required=True, help="comma separated vertex ids")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_impsep)
    return parser


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
