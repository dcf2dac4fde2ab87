"""Simple undirected graphs stored as bitset adjacency rows.

Row ``i`` of a :class:`Graph` is a Python ``int`` whose bit ``j`` is set iff
``ij`` is an edge.  Vertex subsets use the same encoding, so the number of
edges induced by a subset is a sum of popcounts.

Vertices are 0-indexed everywhere, including the edge-list and colouring
file formats.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InputError

__all__ = [
    "Graph",
    "VertexSet",
    "Colouring",
    "ParityTarget",
    "parse_graph",
    "format_graph",
    "parse_colouring",
    "complement",
    "induced_edge_count",
    "clique",
    "independent",
    "two_cliques",
    "complete_bipartite",
    "gnp",
    "cycle",
    "path",
    "generate",
    "k_subsets",
    "colex_rank",
    "colex_unrank",
    "iter_bits",
]


class ParityTarget(enum.Enum):
    EVEN = 0
    ODD = 1

    def accepts(self, edges: int) -> bool:
        return (edges & 1) == self.value

    @classmethod
    def parse(cls, text: str | "ParityTarget") -> "ParityTarget":
        if isinstance(text, ParityTarget):
            return text
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise InputError(f"unknown parity {text!r}; expected 'even' or 'odd'") from None

    def __str__(self) -> str:
        return self.name.lower()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    members: int
    size: int = field(init=False)

    def __post_init__(self) -> None:
        if self.members < 0:
            raise ValueError("vertex set mask must be non-negative")
        object.__setattr__(self, "size", self.members.bit_count())

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex {v}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.members)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.members >> v & 1)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.members))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


# From this size on, symmetry is checked on the dense matrix instead of per edge.
_DENSE_CHECK_N = 64


def _bit_matrix(n: int, rows: tuple[int, ...]) -> np.ndarray:
    """Row ``i`` holds the bits of ``rows[i]``, least significant first."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    width = (n + 7) // 8
    buf = b"".join(r.to_bytes(width, "little") for r in rows)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(n, width)
    return np.ascontiguousarray(np.unpackbits(packed, axis=1, bitorder="little")[:, :n])


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside [0, {self.n})")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        if self.n >= _DENSE_CHECK_N:
            m = _bit_matrix(self.n, self.adj)
            bad = np.argwhere(m != m.T)
            if bad.size:
                i, j = sorted(int(x) for x in bad[0])
                raise ValueError(f"asymmetric adjacency between {i} and {j}")
            return
        for i, row in enumerate(self.adj):
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adj) for j in iter_bits(row >> (i + 1) << (i + 1))]

    def to_numpy(self) -> np.ndarray:
        """Dense 0/1 ``uint8`` adjacency matrix."""
        return _bit_matrix(self.n, self.adj)

    def toggle_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot toggle a loop")
        rows = list(self.adj)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


@dataclass(frozen=True)
class Colouring:
    """Map from vertices to colours ``1..k``; need not be surjective."""

    colours: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("a colouring needs k >= 1")
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has colour {c} outside [1, {self.k}]")

    @property
    def n(self) -> int:
        return len(self.colours)

    def classes(self) -> list[list[int]]:
        """Vertices of each colour, indexed ``0..k-1`` for colours ``1..k``."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colours):
            out[c - 1].append(v)
        return out

    def num_colourful_sets(self) -> int:
        total = 1
        for cls in self.classes():
            total *= len(cls)
        return total

    def is_colourful(self, u: VertexSet) -> bool:
        seen = 0
        for v in u:
            bit = 1 << (self.colours[v] - 1)
            if seen & bit:
                return False
            seen |= bit
        return seen == (1 << self.k) - 1


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------

def _ints(line: str, lineno: int, expected: int) -> list[int]:
    parts = line.split(" ")
    if len(parts) != expected or any(p == "" for p in parts):
        raise InputError(f"line {lineno}: expected {expected} space-separated integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(f"line {lineno}: non-integer token in {line!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``"n m"`` then ``m`` lines ``"u v"``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InputError("line 1: missing header 'n m'")
    n, m = _ints(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise InputError("line 1: n and m must be non-negative")
    if len(lines) - 1 != m:
        raise InputError(f"line 1: header declares {m} edges, found {len(lines) - 1} edge lines")
    rows = [0] * n
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise InputError(f"line {lineno}: loop at vertex {u}")
        if rows[u] >> v & 1:
            raise InputError(f"line {lineno}: duplicate edge {u} {v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def format_graph(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_colouring(text: str, k: int, n: int) -> Colouring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != n:
        raise InputError(f"colouring has {len(lines)} lines, expected {n}")
    if k < 1:
        raise InputError("k must be at least 1")
    colours = []
    for lineno, line in enumerate(lines, start=1):
        try:
            c = int(line)
        except ValueError:
            raise InputError(f"line {lineno}: expected an integer colour, got {line!r}") from None
        if not 1 <= c <= k:
            raise InputError(f"line {lineno}: colour {c} outside [1, {k}]")
        colours.append(c)
    return Colouring(tuple(colours), k)


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((~row & full) ^ (1 << i) for i, row in enumerate(g.adj)))


def induced_edge_count(g: Graph, u: VertexSet | int) -> int:
    """Number of edges of ``g`` with both endpoints in ``u``."""
    mask = u.members if isinstance(u, VertexSet) else u
    adj = g.adj
    total = 0
    m = mask
    while m:
        low = m & -m
        total += (adj[low.bit_length() - 1] & mask).bit_count()
        m ^= low
    return total >> 1


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def clique(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def independent(n: int) -> Graph:
    return Graph(n, (0,) * n)


def two_cliques(a: int, b: int) -> Graph:
    """Disjoint union of ``K_a`` (vertices ``0..a-1``) and ``K_b``."""
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    rows = [left ^ (1 << i) for i in range(a)] + [right ^ (1 << (a + i)) for i in range(b)]
    return Graph(a + b, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)``; deterministic for a fixed 64-bit seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed & 0xFFFFFFFFFFFFFFFF)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


_GENERATORS = {
    "clique": (clique, (int,)),
    "independent": (independent, (int,)),
    "two_cliques": (two_cliques, (int, int)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "gnp": (gnp, (int, float, int)),
}


def generate(kind: str, *params) -> Graph:
    """Dispatch by class name, e.g. ``generate("two_cliques", 3, 4)``."""
    key = kind.replace("-", "_")
    key = {"two_clique": "two_cliques", "bipartite": "complete_bipartite"}.get(key, key)
    try:
        fn, types = _GENERATORS[key]
    except KeyError:
        raise InputError(f"unknown graph class {kind!r}") from None
    if len(params) != len(types):
        raise InputError(f"{key} takes {len(types)} parameters, got {len(params)}")
    args = [t(p) for t, p in zip(types, params)]
    if any(isinstance(a, int) and a < 0 for a in args):
        raise InputError("sizes must be non-negative")
    return fn(*args)


# ---------------------------------------------------------------------------
# k-subset enumeration (colex order == increasing bitmask order)
# ---------------------------------------------------------------------------

def colex_rank(mask: int) -> int:
    """Position of the subset ``mask`` among all subsets of its size in colex order."""
    return sum(comb(v, i) for i, v in enumerate(iter_bits(mask), start=1))


def colex_unrank(rank: int, n: int, k: int) -> int:
    if not 0 <= rank < comb(n, k):
        raise IndexError(f"rank {rank} out of range for C({n}, {k})")
    mask = 0
    v = n
    for i in range(k, 0, -1):
        v -= 1
        while comb(v, i) > rank:
            v -= 1
        rank -= comb(v, i)
        mask |= 1 << v
    return mask


def _next_colex(mask: int) -> int:
    # Gosper's hack: next larger integer with the same popcount.
    low = mask & -mask
    ripple = mask + low
    return ripple | (((mask ^ ripple) >> 2) // low)


def k_subset_masks(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Bitmasks of the ``k``-subsets of ``range(n)`` with colex rank in ``[start, stop)``."""
    total = comb(n, k) if 0 <= k <= n else 0
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    if k == 0:
        yield 0
        return
    mask = colex_unrank(start, n, k)
    for _ in range(stop - start - 1):
        yield mask
        mask = _next_colex(mask)
    yield mask


def k_subsets(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[VertexSet]:
    """Stream every ``k``-subset of ``range(n)`` once, in colex order.

    ``start``/``stop`` select a colex-rank range so that disjoint ranges can be
    consumed by separate workers.  ``k > n`` yields nothing.
    """
    if k < 0 or n < 0:
        raise ValueError("n and k must be non-negative")
    for mask in k_subset_masks(n, k, start, stop):
        yield VertexSet(mask)


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def vertex_lists(sets: Sequence[VertexSet]) -> list[list[int]]:
    return [s.to_list() for s in sets]
