"""Brute-force oracles that share no code paths with the package.

They only read a graph through its edge list, and use itertools, Fraction and
plain loops.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def edge_set(g) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def induced_edges(edges: set[frozenset[int]], subset) -> int:
    return sum(1 for u, v in combinations(sorted(subset), 2) if frozenset((u, v)) in edges)


def parity_subset_count(g, k: int, parity: int) -> int:
    edges = edge_set(g)
    return sum(1 for s in combinations(range(g.n), k) if induced_edges(edges, s) % 2 == parity)


def parity_tuple_count(g, k: int, parity: int) -> int:
    edges = edge_set(g)
    return sum(1 for t in permutations(range(g.n), k) if induced_edges(edges, t) % 2 == parity)


def histogram(g, k: int) -> list[int]:
    edges = edge_set(g)
    hist = [0] * (k * (k - 1) // 2 + 1)
    for s in combinations(range(g.n), k):
        hist[induced_edges(edges, s)] += 1
    return hist


def colourful_subsets(colours, k: int):
    n = len(colours)
    for s in combinations(range(n), k):
        if sorted(colours[v] for v in s) == list(range(1, k + 1)):
            yield s


def colourful_parity_count(g, colours, k: int, parity: int) -> int:
    edges = edge_set(g)
    return sum(1 for s in colourful_subsets(colours, k) if induced_edges(edges, s) % 2 == parity)


def multicolour_cliques(g, colours, k: int) -> int:
    edges = edge_set(g)
    return sum(1 for s in colourful_subsets(colours, k) if induced_edges(edges, s) == k * (k - 1) // 2)


def pattern_census(g, colours, k: int) -> dict[frozenset, int]:
    """Map from the set of colour pairs realised by edges to the number of colourful sets."""
    edges = edge_set(g)
    out: dict[frozenset, int] = {}
    for s in colourful_subsets(colours, k):
        pat = frozenset(
            frozenset((colours[u], colours[v])) for u, v in combinations(s, 2) if frozenset((u, v)) in edges
        )
        out[pat] = out.get(pat, 0) + 1
    return out


def quadratic_zero_sweep(n: int, quad, lin=(), const: int = 0) -> int:
    count = 0
    for x in range(1 << n):
        val = const
        for i, j in quad:
            val ^= (x >> i) & (x >> j) & 1
        for i in lin:
            val ^= (x >> i) & 1
        count += val == 0
    return count


def quadratic_zero_sweep_np(n: int, quad, lin=(), const: int = 0) -> int:
    """Same sweep as above, vectorised over all 2^n assignments."""
    import numpy as np

    x = np.arange(1 << n, dtype=np.int64)
    val = np.full(x.shape, const & 1, dtype=np.int64)
    for i, j in quad:
        val ^= (x >> i) & (x >> j) & 1
    for i in lin:
        val ^= (x >> i) & 1
    return int(np.count_nonzero(val == 0))


def cofactor_det(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def fraction_det(m) -> int:
    """Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            factor = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= factor * a[c][j]
    assert det.denominator == 1
    return int(det)
