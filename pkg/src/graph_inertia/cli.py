"""Command-line front end: compute, classify, reduce, verify, generate, and
reproduce the double-cycle case table.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .closed_forms import INFINITY_TABLE, infinity_condition, infinity_inertia
from .core import GraphError, Inertia, ParseError
from .graph import (
    GraphClass,
    WeightedGraph,
    adjacency_matrix,
    classify,
    parse_graph,
    serialize_graph,
)
from .oracle import inertia_oracle
from .reduction import reduce_to_core
from .solver import solve
from .structure import describe_base, two_core
from .testgen import (
    GenSpec,
    build_infinity,
    generate,
    sample_infinity_weights,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graph-inertia",
        description="Exact inertia of weighted trees, unicyclic and bicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_method=False):
        p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
        p.add_argument("--output", choices=("human", "json"), default="human")
        if with_method:
            p.add_argument("--method", choices=("structural", "oracle", "both"), default="structural")
            p.add_argument("--dump-matrix", action="store_true")

    add_io(sub.add_parser("inertia", help="compute (i+, i-, i0)"), with_method=True)
    add_io(sub.add_parser("classify", help="report the graph class and base shape"))
    add_io(sub.add_parser("reduce", help="run the rewrite engine and print its trace"))

    verify = sub.add_parser("verify", help="compare solver and oracle on random graphs")
    verify.add_argument("--class", dest="klass", choices=("tree", "unicyclic", "bicyclic"), default="tree")
    verify.add_argument("--count", type=int, default=100)
    verify.add_argument("--n", type=int, default=10, help="maximum vertex count")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--output", choices=("human", "json"), default="human")

    gen = sub.add_parser("gen", help="generate a random graph")
    gen.add_argument("--class", dest="klass", choices=("tree", "forest", "unicyclic", "bicyclic"), default="tree")
    gen.add_argument("--n", type=int, default=8)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=("edgelist", "json"), default="edgelist")

    table = sub.add_parser("table1", help="reproduce the double-cycle case table")
    table.add_argument("--seed", type=int, default=0)
    table.add_argument("--output", choices=("human", "json"), default="human")
    return parser


def _read_graph(args, stdin: TextIO) -> WeightedGraph:
    if args.input == "-":
        text = stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _inertia_json(i: Inertia) -> dict:
    return {"pos": i.pos, "neg": i.neg, "zero": i.zero}


def _fmt(i: Inertia) -> str:
    return f"i+={i.pos} i-={i.neg} i0={i.zero}"


def _cmd_inertia(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args, stdin)
    payload: dict = {}
    lines = []
    if args.dump_matrix:
        dump = adjacency_matrix(g).dump()
        payload["matrix"] = dump.splitlines()
        lines.extend(dump.splitlines())
    structural = oracle = None
    if args.method in ("structural", "both"):
        result = solve(g)
        structural = result.inertia
        tags = ",".join(m.value for m in result.methods)
        payload["structural"] = {**_inertia_json(structural), "methods": [m.value for m in result.methods]}
        lines.append(f"structural: {_fmt(structural)} [{tags}]")
    if args.method in ("oracle", "both"):
        oracle = inertia_oracle(g)
        payload["oracle"] = _inertia_json(oracle)
        lines.append(f"oracle: {_fmt(oracle)}")
    code = EXIT_OK
    if args.method == "both":
        ok = structural == oracle
        payload["match"] = ok
        lines.append("match" if ok else "MISMATCH")
        if not ok:
            code = EXIT_MISMATCH
    if args.output == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return code


def _cmd_classify(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args, stdin)
    cls = classify(g)
    base = None
    if cls.overall in (GraphClass.UNICYCLIC, GraphClass.BICYCLIC):
        base = str(describe_base(two_core(g)))
    if args.output == "json":
        payload = {
            "class": cls.overall.value,
            "components": [k.value for k in cls.components],
        }
        if base:
            payload["base"] = base
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(cls.overall.value + (f" {base}" if base else ""), file=out)
    return EXIT_OK


def _cmd_reduce(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args, stdin)
    reduced, trace = reduce_to_core(g)
    if args.output == "json":
        payload = {
            "steps": [
                {
                    "rule": s.rule.value,
                    "removed": list(s.removed),
                    "added": [[u, v, str(w)] for u, v, w in s.added],
                    "offset": list(s.offset),
                }
                for s in trace.steps
            ],
            "offset": list(trace.offset),
            "result": {
                "vertices": list(reduced.vertices),
                "edges": [[u, v, str(w)] for u, v, w in reduced.edges],
            },
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        if trace.steps:
            print(trace.serialize(), file=out)
        off = trace.offset
        print(f"offset=(+{off[0]},+{off[1]}) remaining n={reduced.n} m={reduced.m}", file=out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    mismatches = []
    for i in range(args.count):
        seed = args.seed + i
        n_min = {"tree": 1, "unicyclic": 3, "bicyclic": 5}[args.klass]
        n = n_min + (seed % max(1, args.n - n_min + 1))
        regime = "force" if i % 2 else "random"
        spec = GenSpec(args.klass, n, seed, regime=regime)
        g = generate(spec)
        if solve(g).inertia != inertia_oracle(g):
            mismatches.append(seed)
    if args.output == "json":
        payload = {"count": args.count, "matches": args.count - len(mismatches), "mismatch_seeds": mismatches}
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"{args.count - len(mismatches)}/{args.count} match", file=out)
        for seed in mismatches:
            print(f"mismatch seed={seed}", file=out)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _cmd_gen(args, out: TextIO) -> int:
    g = generate(GenSpec(args.klass, args.n, args.seed))
    out.write(serialize_graph(g, args.format))
    return EXIT_OK


def _cmd_table1(args, out: TextIO) -> int:
    import random

    rng = random.Random(args.seed)
    rows = []
    all_match = True
    for shape, row in INFINITY_TABLE.items():
        p, l, q = shape
        for key, expected in row.outcomes:
            branch = None if key == "any" else key
            a, b, c = sample_infinity_weights(p, l, q, rng, branch=branch)
            closed = infinity_inertia(p, l, q, a, b, c)
            oracle = inertia_oracle(build_infinity(p, l, q, a, b, c))
            match = closed.pn == expected and oracle.pn == expected
            all_match = all_match and match
            cond = infinity_condition(p, l, q, a, b, c)
            rows.append(
                {
                    "shape": f"infinity({p},{l},{q})",
                    "branch": key,
                    "condition": row.condition_text,
                    "witness": {
                        "a": [str(x) for x in a],
                        "b": [str(x) for x in b],
                        "c": [str(x) for x in c],
                    },
                    "condition_sides": None if cond is None else [str(cond.lhs), str(cond.rhs)],
                    "closed_form": list(closed.pn),
                    "oracle": list(oracle.pn),
                    "table": list(expected),
                    "match": match,
                }
            )
    if args.output == "json":
        print(json.dumps({"rows": rows, "all_match": all_match}, indent=2), file=out)
    else:
        for r in rows:
            print(
                f"{r['shape']:<16} branch={r['branch']:<4} closed={tuple(r['closed_form'])} "
                f"oracle={tuple(r['oracle'])} table={tuple(r['table'])} "
                f"{'match' if r['match'] else 'MISMATCH'}",
                file=out,
            )
        print("all match" if all_match else "MISMATCHES FOUND", file=out)
    return EXIT_OK if all_match else EXIT_MISMATCH


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "inertia":
            return _cmd_inertia(args, out, inp)
        if args.command == "classify":
            return _cmd_classify(args, out, inp)
        if args.command == "reduce":
            return _cmd_reduce(args, out, inp)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "gen":
            return _cmd_gen(args, out)
        if args.command == "table1":
            return _cmd_table1(args, out)
        parser.error(f"unknown command {args.command!r}")
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
