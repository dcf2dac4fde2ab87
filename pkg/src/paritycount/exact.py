"""Exhaustive counters: the ground truth every other module is checked against.

The enumeration core walks ``k``-subsets grouped by their largest vertex, which
is exactly a partition of the colex order into contiguous rank ranges.  Inside
a group the vertices are chosen in decreasing order with incremental edge
counts (one popcount per step); on large graphs the last (smallest) vertex is
handled as a numpy vector instead.
"""

from __future__ import annotations

import math
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

import numpy as np

from .errors import BudgetExceeded, InputError
from .graph import Colouring, Graph, ParityTarget, VertexSet, induced_edge_count, iter_bits, k_subset_masks
from .lattice import EdgePattern, pair_index

DEFAULT_BUDGET = 10**8

__all__ = [
    "DEFAULT_BUDGET",
    "edge_count_histogram",
    "find_parity_subset",
    "count_parity_subsets",
    "count_parity_tuples",
    "count_colourful_parity_subsets",
    "count_colourful_parity_embeddings",
    "count_multicolour_cliques",
    "colour_pattern_census",
]


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")


def _check_budget(n: int, k: int, budget: int | None) -> int:
    total = math.comb(n, k) if k <= n else 0
    if budget is not None and total > budget:
        raise BudgetExceeded(
            f"C({n}, {k}) = {total} subsets exceeds the budget of {budget}",
            required=total,
            budget=budget,
        )
    return total


# ---------------------------------------------------------------------------
# Histogram of induced edge counts over all k-subsets
# ---------------------------------------------------------------------------

# Below this many vertices the pure-integer walk beats the numpy last levels,
# except for small k where the vectorised pair step pays off earlier.
NUMPY_MIN_N = 48
_NUMPY_SMALL_K = (4, 24)


def _use_numpy(n: int, k: int) -> bool:
    return n >= NUMPY_MIN_N or (k <= _NUMPY_SMALL_K[0] and n >= _NUMPY_SMALL_K[1])


@lru_cache(maxsize=None)
def _upper_pairs(m: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(m, 1)


def _group_histogram_np(a: np.ndarray, k: int, top: int) -> np.ndarray:
    """Histogram over the k-subsets whose largest vertex is ``top``."""
    hist = np.zeros(k * (k - 1) // 2 + 1, dtype=np.int64)
    if k == 1:
        hist[0] = 1
        return hist

    def rec(below: int, need: int, edges: int, deg: np.ndarray) -> None:
        # choose `need` more vertices from range(below); deg[v] = edges from v into the chosen set
        if need == 1:
            hist[:] += np.bincount(deg[:below] + edges, minlength=hist.size)[: hist.size]
            return
        if need == 2:
            # last two levels at once: pair u < w adds deg[u] + deg[w] + a[u, w]
            d = deg[:below]
            iu, iw = _upper_pairs(below)
            vals = d[iu] + d[iw] + a[iu, iw] + edges
            hist[:] += np.bincount(vals, minlength=hist.size)[: hist.size]
            return
        for v in range(need - 1, below):
            rec(v, need - 1, edges + int(deg[v]), deg + a[v])

    rec(top, k - 1, 0, a[top].astype(np.int64))
    return hist


def _group_histogram_bits(adj: tuple[int, ...], k: int, top: int) -> list[int]:
    hist = [0] * (k * (k - 1) // 2 + 1)

    def rec(below: int, need: int, mask: int, edges: int) -> None:
        if need == 1:
            for v in range(below):
                hist[edges + (adj[v] & mask).bit_count()] += 1
            return
        for v in range(need - 1, below):
            rec(v, need - 1, mask | (1 << v), edges + (adj[v] & mask).bit_count())

    if k == 1:
        hist[0] = 1
    else:
        rec(top, k - 1, 1 << top, 0)
    return hist


def _groups_histogram(args: tuple[Graph, int, list[int]]) -> list[int]:
    g, k, tops = args
    hist = np.zeros(k * (k - 1) // 2 + 1, dtype=np.int64)
    if _use_numpy(g.n, k):
        a = g.to_numpy().astype(np.int64)
        for top in tops:
            hist += _group_histogram_np(a, k, top)
    else:
        for top in tops:
            hist += np.asarray(_group_histogram_bits(g.adj, k, top), dtype=np.int64)
    return [int(x) for x in hist]


def _balanced_groups(n: int, k: int, workers: int) -> list[list[int]]:
    weights = [(math.comb(v, k - 1), v) for v in range(k - 1, n)]
    bins: list[list[int]] = [[] for _ in range(workers)]
    loads = [0] * workers
    for w, v in sorted(weights, reverse=True):
        i = loads.index(min(loads))
        bins[i].append(v)
        loads[i] += w
    return [sorted(b) for b in bins if b]


def edge_count_histogram(g: Graph, k: int, *, budget: int | None = DEFAULT_BUDGET, workers: int = 1) -> list[int]:
    """``hist[e]`` = number of ``k``-subsets of ``g`` inducing exactly ``e`` edges.

    ``k = 0`` gives ``[1]`` (the empty set).  Raises :class:`BudgetExceeded`
    before doing any work if ``C(n, k)`` exceeds ``budget``.  With
    ``workers > 1`` the largest-vertex groups are spread over processes; the
    partial histograms add up to the same result for any worker count.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    size = k * (k - 1) // 2 + 1
    if k == 0:
        return [1]
    if k > g.n:
        return [0] * size
    _check_budget(g.n, k, budget)
    if workers <= 1:
        return _groups_histogram((g, k, list(range(k - 1, g.n))))
    jobs = [(g, k, grp) for grp in _balanced_groups(g.n, k, workers)]
    hist = [0] * size
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_groups_histogram, jobs):
            hist = [x + y for x, y in zip(hist, part)]
    return hist


def _bitset_histogram(g: Graph, k: int) -> list[int]:
    """Reference route: colex stream plus popcount per subset (slow, simple)."""
    hist = [0] * (k * (k - 1) // 2 + 1)
    for mask in k_subset_masks(g.n, k):
        hist[induced_edge_count(g, mask)] += 1
    return hist


def _dfs_histogram(g: Graph, k: int) -> list[int]:
    """Pure-Python incremental route: one popcount per enumerated prefix."""
    hist = [0] * (k * (k - 1) // 2 + 1)
    adj = g.adj

    def rec(below: int, need: int, mask: int, edges: int) -> None:
        if need == 0:
            hist[edges] += 1
            return
        for v in range(need - 1, below):
            rec(v, need - 1, mask | (1 << v), edges + (adj[v] & mask).bit_count())

    rec(g.n, k, 0, 0)
    return hist


# ---------------------------------------------------------------------------
# Early-exit search
# ---------------------------------------------------------------------------

def find_parity_subset(
    g: Graph, k: int, target: ParityTarget, *, budget: int | None = DEFAULT_BUDGET
) -> VertexSet | None:
    """First ``k``-subset, in colex order, whose edge count has the target parity.

    Scans at most ``budget`` subsets; raises :class:`BudgetExceeded` if the
    budget runs out before a witness is found or the space is exhausted.
    """
    _check_k(k)
    target = ParityTarget.parse(target)
    if k > g.n:
        return None
    want = target.value
    if k == 1:
        return VertexSet(1) if want == 0 else None
    use_np = g.n >= NUMPY_MIN_N
    a = g.to_numpy().astype(np.int64) if use_np else None
    adj = g.adj
    scanned = 0

    def charge(count: int) -> None:
        nonlocal scanned
        scanned += count
        if budget is not None and scanned > budget:
            raise BudgetExceeded(
                f"exhaustive search over C({g.n}, {k}) subsets exceeded the budget of {budget}",
                required=math.comb(g.n, k),
                budget=budget,
            )

    def rec_np(below: int, need: int, mask: int, edges: int, deg: np.ndarray) -> int | None:
        if need == 1:
            hits = np.flatnonzero(((deg[:below] + edges) & 1) == want)
            if hits.size:
                charge(int(hits[0]) + 1)
                return mask | (1 << int(hits[0]))
            charge(below)
            return None
        for v in range(need - 1, below):
            found = rec_np(v, need - 1, mask | (1 << v), edges + int(deg[v]), deg + a[v])
            if found is not None:
                return found
        return None

    def rec_bits(below: int, need: int, mask: int, edges: int) -> int | None:
        if need == 1:
            for v in range(below):
                if (edges + (adj[v] & mask).bit_count()) & 1 == want:
                    charge(v + 1)
                    return mask | (1 << v)
            charge(below)
            return None
        for v in range(need - 1, below):
            found = rec_bits(v, need - 1, mask | (1 << v), edges + (adj[v] & mask).bit_count())
            if found is not None:
                return found
        return None

    for top in range(k - 1, g.n):
        if use_np:
            found = rec_np(top, k - 1, 1 << top, 0, a[top].copy())
        else:
            found = rec_bits(top, k - 1, 1 << top, 0)
        if found is not None:
            return VertexSet(found)
    return None


# ---------------------------------------------------------------------------
# Uncoloured counts
# ---------------------------------------------------------------------------

def count_parity_subsets(
    g: Graph, k: int, t: ParityTarget, *, budget: int | None = DEFAULT_BUDGET, workers: int = 1
) -> int:
    """Number of ``k``-subsets ``U`` with ``e(G[U])`` of parity ``t``."""
    _check_k(k)
    t = ParityTarget.parse(t)
    hist = edge_count_histogram(g, k, budget=budget, workers=workers)
    return sum(hist[t.value :: 2])


def count_parity_tuples(
    g: Graph, k: int, t: ParityTarget, *, budget: int | None = DEFAULT_BUDGET, workers: int = 1
) -> int:
    """Labelled count: ordered tuples of distinct vertices, ``k!`` per subset."""
    return math.factorial(k) * count_parity_subsets(g, k, t, budget=budget, workers=workers)


# ---------------------------------------------------------------------------
# Colourful counts
# ---------------------------------------------------------------------------

def _check_colouring(g: Graph, f: Colouring, k: int) -> None:
    _check_k(k)
    if f.k != k:
        raise InputError(f"colouring declares {f.k} colours but k = {k}")
    if f.n != g.n:
        raise InputError(f"colouring covers {f.n} vertices but the graph has {g.n}")


def _colourful_sets(g: Graph, f: Colouring) -> Iterator[tuple[int, int]]:
    """Yield ``(mask, edges)`` for every colourful set, one class at a time."""
    classes = f.classes()
    adj = g.adj
    k = f.k

    def rec(c: int, mask: int, edges: int) -> Iterator[tuple[int, int]]:
        if c == k:
            yield mask, edges
            return
        for v in classes[c]:
            yield from rec(c + 1, mask | (1 << v), edges + (adj[v] & mask).bit_count())

    yield from rec(0, 0, 0)


def count_colourful_parity_subsets(g: Graph, f: Colouring, k: int, t: ParityTarget) -> int:
    """Colourful ``k``-subsets whose induced edge count has parity ``t``."""
    _check_colouring(g, f, k)
    want = ParityTarget.parse(t).value
    return sum(1 for _, e in _colourful_sets(g, f) if e & 1 == want)


def count_colourful_parity_embeddings(g: Graph, f: Colouring, k: int, t: ParityTarget) -> int:
    """Labelled colourful count (injective maps from ``[k]``); the reduction's oracle."""
    return math.factorial(k) * count_colourful_parity_subsets(g, f, k, t)


def count_multicolour_cliques(g: Graph, f: Colouring, k: int) -> int:
    """Colourful ``k``-cliques, by extending partial cliques colour by colour."""
    _check_colouring(g, f, k)
    classes = f.classes()
    adj = g.adj

    def rec(c: int, common: int) -> int:
        if c == k:
            return 1
        return sum(rec(c + 1, common & adj[v]) for v in classes[c] if common >> v & 1)

    return rec(0, g.vertex_mask)


def colour_pattern_census(g: Graph, f: Colouring, k: int) -> dict[EdgePattern, int]:
    """For each pattern of colour pairs, how many colourful sets realise exactly it.

    Only patterns with a non-zero count appear in the returned mapping.
    """
    _check_colouring(g, f, k)
    colours = f.colours
    census: dict[int, int] = {}
    for mask, _ in _colourful_sets(g, f):
        bits = 0
        for u in iter_bits(mask):
            cu = colours[u]
            for w in iter_bits(g.adj[u] & mask):
                if w > u:
                    bits |= 1 << pair_index(cu, colours[w])
        census[bits] = census.get(bits, 0) + 1
    return {EdgePattern(bits, k): count for bits, count in sorted(census.items())}


def parity_counter(t: ParityTarget) -> Callable[[Graph, Colouring], int]:
    """Exact labelled oracle ``(G, f) -> ColStrEmb`` for the parity class."""
    t = ParityTarget.parse(t)

    def oracle(g: Graph, f: Colouring) -> int:
        return count_colourful_parity_embeddings(g, f, f.k, t)

    return oracle
