"""Command-line interface.

Every command writes one JSON report to stdout::

    {"schema_version": 1, "command": ..., "input": {...}, "result": {...},
     "timing_ms": ..., "seed": ...}

Errors go to stderr.  Exit codes: 0 success, 2 input error, 3 budget
exceeded, 4 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import approx, exact, gf2, reduction
from .decide import decide
from .errors import InputError, ParityCountError
from .graph import Graph, ParityTarget, format_graph, generate, parse_colouring, parse_graph

SCHEMA_VERSION = 1


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _fraction(x: Fraction) -> dict:
    return {"numerator": x.numerator, "denominator": x.denominator, "float": float(x)}


def _digest(g: Graph) -> dict:
    return {"n": g.n, "m": g.num_edges()}


# ---------------------------------------------------------------------------
# Commands: each returns (input digest, result payload)
# ---------------------------------------------------------------------------

def cmd_count(args):
    g = _load_graph(args.graph)
    t = ParityTarget.parse(args.parity)
    fn = exact.count_parity_tuples if args.tuples else exact.count_parity_subsets
    value = fn(g, args.k, t, budget=args.budget, workers=args.workers)
    return _digest(g), {"k": args.k, "parity": str(t), "kind": "tuples" if args.tuples else "subsets", "count": value}


def cmd_decide(args):
    g = _load_graph(args.graph)
    d = decide(g, args.k, args.parity, witness=args.witness, budget=args.budget)
    result = {"k": args.k, "parity": str(ParityTarget.parse(args.parity)), "answer": "YES" if d else "NO", "reason": d.reason}
    if args.witness and d.answer and d.witness is not None:
        result["witness"] = d.witness.to_list()
    return _digest(g), result


def cmd_approx(args):
    g = _load_graph(args.graph)
    est = approx.estimate_parity_count(
        g, args.k, args.parity, Fraction(args.eps), Fraction(args.delta), args.mode, args.seed,
        max_samples=args.max_samples, force=args.force, workers=args.workers, budget=args.budget,
    )
    result = {
        "k": args.k,
        "parity": str(ParityTarget.parse(args.parity)),
        "mode": est.mode.value,
        "estimate": _fraction(est.value),
        "samples_used": est.samples_used,
        "successes": est.successes,
        "exact": est.exact,
        "epsilon": str(est.epsilon),
        "delta": str(est.delta),
    }
    if args.k >= 3 and g.n >= args.k:
        bound = approx.density_lower_bound(args.k, g.n)
        result["density_bound"] = {"bound": _fraction(bound.bound), "applicable": bound.applicable}
    return _digest(g), result


def cmd_total_even(args):
    g = _load_graph(args.graph)
    return _digest(g), {
        "total_even": gf2.total_even_subgraphs(g),
        "note": "includes the empty vertex set (k = 0)",
    }


def _corrupt(oracle):
    calls = {"n": 0}

    def bad(h, f):
        calls["n"] += 1
        value = oracle(h, f)
        return value + 1 if calls["n"] == 1 else value

    return bad


def cmd_reduce(args):
    g = _load_graph(args.graph)
    f = parse_colouring(_read(args.colours), args.k, g.n)
    t = ParityTarget.parse(args.parity)
    oracle = exact.parity_counter(t)
    if args.corrupt_oracle:
        oracle = _corrupt(oracle)
    inst = reduction.reduce_instance(g, f, args.k, t, oracle, allow_large=args.allow_large_k)
    result = {
        "k": args.k,
        "parity": str(t),
        "multicolour_cliques": inst.clique_count,
        "oracle_calls": inst.oracle_calls,
        "matrix_dimension": len(inst.matrix),
    }
    if args.trace:
        result["trace"] = {
            "family": [[list(p) for p in pat.pairs()] for pat in inst.family],
            "z": inst.z,
            "N": inst.solution,
        }
    return _digest(g), result


def cmd_gen(args):
    g = generate(args.cls, *(list(args.params) + ([args.seed] if args.cls == "gnp" else [])))
    Path(args.out).write_text(format_graph(g))
    return _digest(g), {"class": args.cls, "params": args.params, "out": args.out}


def cmd_census(args):
    g = _load_graph(args.graph)
    hist = exact.edge_count_histogram(g, args.k, budget=args.budget, workers=args.workers)
    return _digest(g), {
        "k": args.k,
        "histogram": {str(e): c for e, c in enumerate(hist)},
        "even": sum(hist[0::2]),
        "odd": sum(hist[1::2]),
    }


def cmd_bench(args):
    from .bench import run_suite

    rows = run_suite(args.suite, args.seed)
    return {"suite": args.suite}, {"rows": rows}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="paritycount", description="Decide, count and approximate even/odd induced k-vertex subgraphs."
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True, k=True, parity=True):
        if graph:
            sp.add_argument("--graph", required=True, help="edge-list file")
        if k:
            sp.add_argument("--k", type=int, required=True)
        if parity:
            sp.add_argument("--parity", required=True, choices=["even", "odd"])
        sp.add_argument("--budget", type=int, default=exact.DEFAULT_BUDGET, help="max subsets to enumerate")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("count", help="exact count of k-subsets by edge parity")
    common(sp)
    sp.add_argument("--tuples", action="store_true", help="count ordered tuples (k! per subset)")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("decide", help="is there a k-subset of the given parity?")
    common(sp)
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("approx", help="randomised (eps, delta) estimate")
    common(sp)
    sp.add_argument("--eps", required=True)
    sp.add_argument("--delta", required=True)
    sp.add_argument("--mode", choices=["guaranteed", "adaptive"], default="adaptive")
    sp.add_argument("--max-samples", type=int, default=approx.DEFAULT_MAX_SAMPLES)
    sp.add_argument("--force", action="store_true", help="run guaranteed mode even above --max-samples")
    sp.set_defaults(func=cmd_approx)

    sp = sub.add_parser("total-even", help="even induced subgraphs of all sizes (GF(2) zero count)")
    common(sp, k=False, parity=False)
    sp.set_defaults(func=cmd_total_even)

    sp = sub.add_parser("reduce", help="multicolour clique count via the parity-oracle reduction")
    common(sp)
    sp.add_argument("--colours", required=True, help="colouring file, one colour per line")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--allow-large-k", action="store_true")
    sp.add_argument("--corrupt-oracle", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("gen", help="write a generated graph as an edge list")
    sp.add_argument("--class", dest="cls", required=True,
                    choices=["clique", "independent", "two-cliques", "bipartite", "gnp"])
    sp.add_argument("--params", nargs="+", required=True, help="sizes (and p for gnp)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("census", help="histogram of induced edge counts over k-subsets")
    common(sp, parity=False)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("bench", help="enumeration throughput micro-benchmark")
    sp.add_argument("--suite", choices=["small", "structured"], default="small")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    return p


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        digest, result = args.func(args)
    except ParityCountError as exc:
        extra = ""
        required = getattr(exc, "required", None)
        if required is not None:
            extra = f" (required: {required})"
        print(f"error: {exc}{extra}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return InputError.exit_code
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input": digest,
        "result": result,
        "timing_ms": round((time.perf_counter() - start) * 1000, 3),
        "seed": getattr(args, "seed", None),
    }
    json.dump(report, sys.stdout, indent=2, default=_default)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
