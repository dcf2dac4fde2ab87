"""Structure recognition and the FPT decision procedures for even/odd subgraphs.

For ``n >= 2^(2k)`` the answer depends only on ``k mod 4`` and on whether the
graph is a clique, an independent set, a disjoint union of two cliques or a
complete bipartite graph.  Below that threshold the procedures fall back to an
exhaustive (budgeted, early-exit) search, after first trying the class tests,
which are sufficient for a NO answer at every ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from .errors import InputError
from .exact import DEFAULT_BUDGET, find_parity_subset
from .graph import Graph, ParityTarget, VertexSet, induced_edge_count, iter_bits

__all__ = [
    "StructureKind",
    "StructureClass",
    "Decision",
    "classify",
    "is_clique",
    "is_independent",
    "two_clique_partition",
    "bipartite_partition",
    "decide",
    "decide_even",
    "decide_odd",
    "find_parity_flip",
    "ramsey_threshold",
]


class StructureKind(enum.Enum):
    CLIQUE = "clique"
    INDEPENDENT_SET = "independent_set"
    TWO_CLIQUE_UNION = "two_clique_union"
    COMPLETE_BIPARTITE = "complete_bipartite"
    OTHER = "other"


@dataclass(frozen=True)
class StructureClass:
    """Result of :func:`classify`.

    ``part`` is one side of the witnessing partition for the two partitioned
    classes (the side containing vertex 0).  For ``OTHER``, ``violations``
    holds one offending vertex pair per rejected class.
    """

    kind: StructureKind
    part: VertexSet | None = None
    violations: dict[StructureKind, tuple[int, int]] = field(default_factory=dict)


def ramsey_threshold(k: int) -> int:
    return 1 << (2 * k)


def is_clique(g: Graph) -> bool:
    full = g.vertex_mask
    return all(row == full ^ (1 << i) for i, row in enumerate(g.adj))


def is_independent(g: Graph) -> bool:
    return not any(g.adj)


def _clique_violation(g: Graph, side: int) -> tuple[int, int] | None:
    for v in iter_bits(side):
        missing = side & ~g.adj[v] & ~(1 << v)
        if missing:
            return (v, (missing & -missing).bit_length() - 1)
    return None


def two_clique_partition(g: Graph) -> tuple[VertexSet | None, tuple[int, int] | None]:
    """Split as two disjoint cliques with both sides non-empty, or report a bad pair."""
    if g.n < 2:
        return None, None
    side = g.adj[0] | 1
    other = g.vertex_mask & ~side
    if not other:
        # 0 is adjacent to everything: a two-clique union would force a clique
        return None, _clique_violation(g, side)
    for v in iter_bits(side):
        if g.adj[v] & other:
            w = g.adj[v] & other
            return None, (v, (w & -w).bit_length() - 1)
    bad = _clique_violation(g, side) or _clique_violation(g, other)
    if bad:
        return None, bad
    return VertexSet(side), None


def bipartite_partition(g: Graph) -> tuple[VertexSet | None, tuple[int, int] | None]:
    """Split as a complete bipartite graph with both sides non-empty, or report a bad pair."""
    if g.n < 2:
        return None, None
    right = g.adj[0]
    left = g.vertex_mask & ~right
    if not right:
        # 0 is isolated, so both sides cannot be non-empty; any edge is a witness
        v = next((i for i, row in enumerate(g.adj) if row), None)
        if v is None:
            # edgeless: 0 and 1 would need a cross edge
            return None, (0, 1)
        return None, (v, (g.adj[v] & -g.adj[v]).bit_length() - 1)
    for v in iter_bits(left):
        if g.adj[v] != right:
            diff = g.adj[v] ^ right
            return None, (v, (diff & -diff).bit_length() - 1)
    for v in iter_bits(right):
        if g.adj[v] != left:
            diff = g.adj[v] ^ left
            return None, (v, (diff & -diff).bit_length() - 1)
    return VertexSet(left), None


def classify(g: Graph) -> StructureClass:
    """Most specific of clique > independent set > two cliques > complete bipartite > other."""
    if g.n < 1:
        raise InputError("classify needs at least one vertex")
    if is_clique(g):
        return StructureClass(StructureKind.CLIQUE)
    if is_independent(g):
        return StructureClass(StructureKind.INDEPENDENT_SET)
    part, bad_two = two_clique_partition(g)
    if part is not None:
        return StructureClass(StructureKind.TWO_CLIQUE_UNION, part)
    part, bad_bip = bipartite_partition(g)
    if part is not None:
        return StructureClass(StructureKind.COMPLETE_BIPARTITE, part)
    return StructureClass(
        StructureKind.OTHER,
        violations={StructureKind.TWO_CLIQUE_UNION: bad_two, StructureKind.COMPLETE_BIPARTITE: bad_bip},
    )


@dataclass(frozen=True)
class Decision:
    """Answer of a decision procedure; truthy iff the answer is YES.

    ``reason`` names the step that produced the answer.
    """

    answer: bool
    reason: str
    witness: VertexSet | None = None

    def __bool__(self) -> bool:
        return self.answer


def _no_classes(g: Graph, k: int, target: ParityTarget) -> str | None:
    """Name of a class forcing NO (valid for every n >= k), else None."""
    kind = classify(g).kind
    odd_pairs = comb(k, 2) & 1
    if target is ParityTarget.EVEN:
        if odd_pairs and kind is StructureKind.CLIQUE:
            return "clique with C(k,2) odd"
        if k % 4 == 3 and kind is StructureKind.TWO_CLIQUE_UNION:
            return "two cliques with k = 3 mod 4"
        return None
    if kind is StructureKind.INDEPENDENT_SET:
        return "independent set"
    if k % 2 == 1 and kind is StructureKind.COMPLETE_BIPARTITE:
        return "complete bipartite with k odd"
    if not odd_pairs and kind is StructureKind.CLIQUE:
        return "clique with C(k,2) even"
    if k % 4 == 1 and kind is StructureKind.TWO_CLIQUE_UNION:
        return "two cliques with k = 1 mod 4"
    return None


def _large_graph_answer(g: Graph, k: int, target: ParityTarget) -> tuple[bool, str]:
    """Answer from the structural class alone, valid once n >= 2^(2k)."""
    kind = classify(g).kind
    if target is ParityTarget.EVEN:
        if k % 4 in (0, 1):
            return True, "C(k,2) even: a k-clique or k-independent set exists"
        if kind is StructureKind.CLIQUE:
            return False, "clique"
        if k % 4 == 2:
            return True, "k = 2 mod 4 and not a clique"
        if kind is StructureKind.TWO_CLIQUE_UNION:
            return False, "disjoint union of two cliques"
        return True, "none of the excluded classes"
    if kind is StructureKind.INDEPENDENT_SET:
        return False, "independent set"
    if k % 2 == 1 and kind is StructureKind.COMPLETE_BIPARTITE:
        return False, "complete bipartite with k odd"
    if k % 4 in (0, 1) and kind is StructureKind.CLIQUE:
        return False, "clique with k = 0, 1 mod 4"
    if k % 4 == 1 and kind is StructureKind.TWO_CLIQUE_UNION:
        return False, "disjoint union of two cliques with k = 1 mod 4"
    return True, "none of the excluded classes"


def decide(
    g: Graph,
    k: int,
    target: ParityTarget | str,
    *,
    witness: bool = False,
    budget: int | None = DEFAULT_BUDGET,
    fast_path: bool = True,
) -> Decision:
    """Does ``g`` have a ``k``-subset inducing an edge count of the target parity?

    With ``witness=True`` a YES answer carries a certifying subset (found by
    budgeted search when the answer came from the structural steps).
    """
    target = ParityTarget.parse(target)
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if k > g.n:
        return Decision(False, "k > n")
    if k == 1:
        if target is ParityTarget.ODD:
            return Decision(False, "k = 1")
        return Decision(True, "k = 1", VertexSet(1) if witness else None)
    if fast_path:
        reason = _no_classes(g, k, target)
        if reason is not None:
            return Decision(False, reason)
    if g.n < ramsey_threshold(k):
        found = find_parity_subset(g, k, target, budget=budget)
        if found is None:
            return Decision(False, "exhaustive search")
        return Decision(True, "exhaustive search", found)
    answer, reason = _large_graph_answer(g, k, target)
    wit = None
    if answer and witness:
        wit = find_parity_subset(g, k, target, budget=budget)
    return Decision(answer, reason, wit)


def decide_even(g: Graph, k: int, **kw) -> Decision:
    return decide(g, k, ParityTarget.EVEN, **kw)


def decide_odd(g: Graph, k: int, **kw) -> Decision:
    return decide(g, k, ParityTarget.ODD, **kw)


def find_parity_flip(g: Graph, h: VertexSet, v: int) -> VertexSet:
    """Swap one vertex of the clique ``h`` for ``v`` so the edge parity flips.

    Requires ``|h| = k >= 3`` inducing a clique, ``v`` outside ``h`` and not
    adjacent to all of ``h``; for odd ``k``, ``v`` must also have a neighbour
    in ``h``.  The result shares ``k - 1`` vertices with ``h``.
    """
    k = h.size
    if k < 3:
        raise InputError(f"the clique must have at least 3 vertices, got {k}")
    if v in h:
        raise InputError(f"vertex {v} already belongs to the clique")
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} is not in the graph")
    if induced_edge_count(g, h) != comb(k, 2):
        raise InputError("h does not induce a clique")
    hm = h.members
    nbrs = g.adj[v] & hm
    non = hm & ~nbrs
    if not non:
        raise InputError(f"vertex {v} is adjacent to every vertex of h")
    if not nbrs:
        if k % 2:
            raise InputError(f"vertex {v} has no neighbour in h and k = {k} is odd")
        # v plus any k-1 clique vertices: C(k,2) - (k-1) edges, opposite parity for even k
        drop = hm & -hm
        return VertexSet((hm ^ drop) | (1 << v))
    r = non.bit_count()
    u = non & -non
    w = nbrs & -nbrs
    # dropping a non-neighbour leaves C(k,2)-(r-1) edges; dropping a neighbour leaves C(k,2)-r
    drop = w if r % 2 else u
    return VertexSet((hm ^ drop) | (1 << v))
