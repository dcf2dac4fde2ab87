"""Throughput of the three enumeration routes on a fixed instance set."""

from __future__ import annotations

import time
from math import comb

from .errors import ConsistencyError
from .exact import _bitset_histogram, _dfs_histogram, edge_count_histogram
from .graph import clique, complete_bipartite, gnp, independent, two_cliques

ROUTES = {
    "hybrid": lambda g, k: edge_count_histogram(g, k, budget=None),
    "bitset-dfs": _dfs_histogram,
    "bitset-colex": _bitset_histogram,
}


def _instances(suite: str, seed: int):
    if suite == "small":
        return [(f"gnp({n},0.5)", gnp(n, 0.5, seed + n), k) for n, k in [(16, 4), (20, 4), (20, 5), (24, 4)]]
    if suite == "structured":
        return [
            ("clique(24)", clique(24), 4),
            ("independent(24)", independent(24), 4),
            ("two_cliques(12,12)", two_cliques(12, 12), 4),
            ("complete_bipartite(12,12)", complete_bipartite(12, 12), 4),
        ]
    raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str, seed: int = 0) -> list[dict]:
    rows = []
    for name, g, k in _instances(suite, seed):
        total = comb(g.n, k)
        reference = None
        for route, fn in ROUTES.items():
            start = time.perf_counter()
            hist = fn(g, k)
            elapsed = time.perf_counter() - start
            if reference is None:
                reference = hist
            elif hist != reference:
                raise ConsistencyError(f"{route} disagrees with the hybrid route on {name}, k={k}")
            rows.append({
                "instance": name,
                "k": k,
                "route": route,
                "subsets": total,
                "seconds": round(elapsed, 6),
                "subsets_per_second": round(total / elapsed) if elapsed > 0 else None,
            })
    return rows
