"""Command-line interface: generate instances, solve them, measure their
difficulty, verify solvers against the brute-force oracle, and benchmark
operation counts."""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import generators, io, measures, oracle
from .diagonal import solve_dstar, solve_dtree
from .score import OpCounters, make_score_function
from .sweep import SOLVERS as SWEEP_SOLVERS

ALGOS = dict(SWEEP_SOLVERS)
ALGOS["dtree"] = solve_dtree
ALGOS["dstar"] = solve_dstar

SCORES = ["sum", "count", "discrepancy", "boxnored", "maxweight"]


def _gen_points(args):
    params = {}
    if args.kind == "stripes":
        params["delta"] = args.delta
    if args.kind == "windmill":
        params["sigma"] = args.sigma
    if args.kind == "aligned":
        params["mode"] = args.mode
        if args.rho is not None:
            params["rho"] = args.rho
    return generators.generate(args.kind, args.n, args.seed, **params)


def cmd_gen(args):
    points = _gen_points(args)
    io.write_points(points, args.out, args.format)
    print(f"wrote {len(points)} points to {args.out}")
    return 0


def cmd_solve(args):
    points = io.read_points(args.infile, args.scale)
    f = make_score_function(args.score)
    ctr = OpCounters()
    result = ALGOS[args.algo](points, f, ctr)
    out = {
        "algo": args.algo,
        "score_function": args.score,
        "n": len(points),
        "score": io.score_to_json(result.score),
        "box": result.box,
        "ids": list(result.ids),
        "counters": ctr.as_dict(),
    }
    _emit(out, args.out)
    return 0


def cmd_measure(args):
    points = io.read_points(args.infile, args.scale)
    f = make_score_function(args.score)
    report = measures.measure_report(points, f)
    _emit(report.as_dict(), args.out)
    return 0


def cmd_verify(args):
    f = make_score_function(args.score)
    if args.algo == "all":
        # dtree requires fully diagonalizable inputs, so it is opt-in here
        algos = [a for a in ALGOS if a != "dtree"]
    else:
        algos = [args.algo]
    bad = 0
    for trial in range(args.trials):
        points = generators.uniform_random(args.n, (args.seed, trial))
        want = oracle.brute_best_box(points, f).score
        for name in algos:
            got = ALGOS[name](points, f, OpCounters()).score
            if got != want:
                bad += 1
                print(f"MISMATCH trial={trial} algo={name} got={got} want={want}")
    status = "ok" if bad == 0 else f"{bad} mismatches"
    print(f"verify: {args.trials} trials x {len(algos)} algos: {status}")
    return 0 if bad == 0 else 1


def cmd_bench(args):
    f = make_score_function(args.score)
    ns = [int(v) for v in args.ns.split(",")]
    algos = list(ALGOS) if args.algo == "all" else args.algo.split(",")
    rows = []
    for n in ns:
        params = {}
        if args.kind == "stripes":
            params["delta"] = args.delta
        if args.kind == "windmill":
            params["sigma"] = args.sigma
        points = generators.generate(args.kind, n, args.seed, **params)
        for name in algos:
            ctr = OpCounters()
            t0 = time.perf_counter_ns()
            ALGOS[name](points, f, ctr)
            wall = time.perf_counter_ns() - t0
            rows.append(
                [n, name, ctr.coord_cmps, ctr.score_compositions, ctr.score_cmps, wall]
            )
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        w = csv.writer(out)
        w.writerow(["n", "algo", "coord_cmps", "score_compositions", "score_cmps", "wall_ns"])
        w.writerows(rows)
    finally:
        if args.out is not None:
            out.close()
    return 0


def _emit(obj, out):
    text = json.dumps(obj, indent=1, default=str)
    if out is None:
        print(text)
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="planarbox")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", choices=sorted(generators.GENERATORS), default="uniform")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--delta", type=int, default=2)
    g.add_argument("--sigma", type=int, default=1)
    g.add_argument("--rho", type=int, default=None)
    g.add_argument("--mode", default="co")
    g.add_argument("--format", choices=["csv", "json"], default="csv")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("infile")
    s.add_argument("--algo", choices=sorted(ALGOS), default="combined")
    s.add_argument("--score", choices=SCORES, default="sum")
    s.add_argument("--scale", type=int, default=1)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_solve)

    m = sub.add_parser("measure", help="difficulty measures of an instance")
    m.add_argument("infile")
    m.add_argument("--score", choices=SCORES, default="sum")
    m.add_argument("--scale", type=int, default=1)
    m.add_argument("--out", default=None)
    m.set_defaults(func=cmd_measure)

    v = sub.add_parser("verify", help="check solvers against the oracle")
    v.add_argument("--algo", default="all")
    v.add_argument("--score", choices=SCORES, default="sum")
    v.add_argument("--n", type=int, default=12)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="operation-count benchmark (CSV)")
    b.add_argument("--kind", choices=sorted(generators.GENERATORS), default="uniform")
    b.add_argument("--ns", default="64,128,256")
    b.add_argument("--algo", default="all")
    b.add_argument("--score", choices=SCORES, default="sum")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--delta", type=int, default=2)
    b.add_argument("--sigma", type=int, default=1)
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bench)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
