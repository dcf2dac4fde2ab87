"""Turing reduction from multicolour clique counting to colourful parity counting.

Given ``(G, f, k)`` and an oracle returning, for any graph ``H`` on the same
vertices, the number of labelled colourful embeddings of ``k``-vertex graphs
of the target parity, the number of colourful ``k``-cliques of ``G`` is
recovered exactly:

1. ``family`` lists the colour-pair patterns ``I`` that contain some pattern
   of the target parity (all patterns for EVEN, the non-empty ones for ODD),
   by non-decreasing size, so the full pattern comes last.
2. For each ``I``, the oracle is called on ``G_I`` (keep an edge iff its
   colour pair is in ``I``), giving ``z_I``.
3. ``A[i][j] = k! * [|I_i ∩ I_j| has the target parity]``, and
   ``A N = z`` where ``N_I`` counts colourful sets whose edge pattern is ``I``.
4. ``A`` is a meet matrix whose determinant is a product of non-zero factors,
   so the system has a unique solution; its last entry is the clique count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import ConsistencyError, InputError
from .exact import colour_pattern_census, parity_counter
from .graph import Colouring, Graph, ParityTarget
from .lattice import (
    BigMatrix,
    EdgePattern,
    LatticeFn,
    det_via_formula,
    lattice_order,
    pair_index,
    solve_exact,
)

__all__ = [
    "ReductionInstance",
    "MAX_K",
    "enumerate_index_family",
    "filter_graph",
    "parity_weight",
    "build_reduction_matrix",
    "run_reduction",
    "reduce_instance",
    "census_vector",
    "pad_instance",
]

MAX_K = 5

Oracle = Callable[[Graph, Colouring], int]


def _check_k(k: int, allow_large: bool = False) -> None:
    if k < 2 or (k > MAX_K and not allow_large):
        raise InputError(f"k must lie in [2, {MAX_K}] for the reduction, got {k}")


def enumerate_index_family(k: int, t: ParityTarget | str, *, allow_large: bool = False) -> list[EdgePattern]:
    """Patterns containing a sub-pattern of the target parity, by size then bitmask."""
    _check_k(k, allow_large)
    t = ParityTarget.parse(t)
    width = k * (k - 1) // 2
    # EVEN: the empty pattern is below everything; ODD: any single pair works iff I is non-empty
    masks = [x for x in lattice_order(width) if t is ParityTarget.EVEN or x]
    return [EdgePattern(x, k) for x in masks]


def filter_graph(g: Graph, f: Colouring, pattern: EdgePattern) -> Graph:
    """Keep edge ``uv`` iff the colour pair ``{f(u), f(v)}`` lies in ``pattern``.

    Monochromatic edges have no colour pair and are always dropped.
    """
    if f.k != pattern.k:
        raise InputError(f"colouring has {f.k} colours but the pattern is over k={pattern.k}")
    if f.n != g.n:
        raise InputError("colouring and graph disagree on the number of vertices")
    colours = f.colours
    rows = [0] * g.n
    for u, v in g.edges():
        cu, cv = colours[u], colours[v]
        if cu != cv and pattern.bits >> pair_index(cu, cv) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def parity_weight(k: int, t: ParityTarget | str) -> LatticeFn:
    """``g(I) = sum over labellings of [H_I has the target parity] = k! [|I| ≡ t]``."""
    t = ParityTarget.parse(t)
    fact = math.factorial(k)
    return LatticeFn.from_callable(k * (k - 1) // 2, lambda x: fact if t.accepts(x.bit_count()) else 0)


def build_reduction_matrix(k: int, t: ParityTarget | str, family: list[EdgePattern]) -> BigMatrix:
    """Symmetric matrix ``a_ij = k! [|I_i ∩ I_j| ≡ t (mod 2)]``.

    Non-singularity is checked with the meet-matrix determinant product
    formula on the normalised 0/1 matrix.
    """
    t = ParityTarget.parse(t)
    fact = math.factorial(k)
    bits = [p.bits for p in family]
    matrix = [[fact if t.accepts((x & y).bit_count()) else 0 for y in bits] for x in bits]
    unit = LatticeFn.from_callable(k * (k - 1) // 2, lambda x: 1 if t.accepts(x.bit_count()) else 0)
    if det_via_formula(bits, unit) == 0:
        raise ConsistencyError("reduction matrix is singular")
    return matrix


@dataclass
class ReductionInstance:
    g: Graph
    f: Colouring
    k: int
    target: ParityTarget
    family: list[EdgePattern]
    matrix: BigMatrix
    z: list[int] = field(default_factory=list)
    solution: list[int] = field(default_factory=list)

    @property
    def clique_count(self) -> int:
        return self.solution[-1]

    @property
    def oracle_calls(self) -> int:
        return len(self.z)


def reduce_instance(
    g: Graph,
    f: Colouring,
    k: int,
    t: ParityTarget | str,
    oracle: Oracle | None = None,
    *,
    allow_large: bool = False,
) -> ReductionInstance:
    """Run the whole pipeline and return every intermediate quantity."""
    t = ParityTarget.parse(t)
    _check_k(k, allow_large)
    if f.k != k:
        raise InputError(f"colouring declares {f.k} colours but k = {k}")
    if f.n != g.n:
        raise InputError("colouring and graph disagree on the number of vertices")
    oracle = oracle or parity_counter(t)
    family = enumerate_index_family(k, t, allow_large=allow_large)
    matrix = build_reduction_matrix(k, t, family)
    fact = math.factorial(k)

    z = [int(oracle(filter_graph(g, f, pattern), f)) for pattern in family]
    for pattern, zi in zip(family, z):
        if zi % fact:
            raise ConsistencyError(f"oracle value {zi} for {pattern} is not divisible by {k}! = {fact}")

    # divide through by k!: 0/1 matrix, subset-level right-hand side
    unit = [[1 if a else 0 for a in row] for row in matrix]
    sol = solve_exact(unit, [zi // fact for zi in z])
    ints: list[int] = []
    for pattern, x in zip(family, sol):
        if x.denominator != 1 or x < 0:
            raise ConsistencyError(f"solution entry for {pattern} is {x}, not a non-negative integer")
        ints.append(int(x))
    return ReductionInstance(g, f, k, t, family, matrix, z, ints)


def run_reduction(
    g: Graph,
    f: Colouring,
    k: int,
    t: ParityTarget | str,
    oracle: Oracle | None = None,
    *,
    allow_large: bool = False,
) -> int:
    """Number of colourful ``k``-cliques, computed through ``oracle`` calls only."""
    return reduce_instance(g, f, k, t, oracle, allow_large=allow_large).clique_count


def census_vector(g: Graph, f: Colouring, k: int, family: list[EdgePattern]) -> list[int]:
    """Independent route to ``N``: census counts in ``family`` order."""
    census = colour_pattern_census(g, f, k)
    return [census.get(p, 0) for p in family]


def pad_instance(g: Graph, f: Colouring, k: int, k_new: int) -> tuple[Graph, Colouring]:
    """Add ``k_new - k`` universal vertices with fresh colours ``k+1..k_new``."""
    if k_new <= k:
        raise InputError(f"padding needs k' > k, got k'={k_new}, k={k}")
    if f.k != k:
        raise InputError(f"colouring declares {f.k} colours but k = {k}")
    extra = k_new - k
    n_new = g.n + extra
    full = (1 << n_new) - 1
    new_bits = full ^ ((1 << g.n) - 1)
    rows = [row | new_bits for row in g.adj] + [full ^ (1 << (g.n + i)) for i in range(extra)]
    colours = f.colours + tuple(range(k + 1, k_new + 1))
    return Graph(n_new, tuple(rows)), Colouring(colours, k_new)
