"""Incidence algebra of the subset lattice of a small finite ground set.

Elements of the lattice are bitmasks over a ground set of ``width`` items.
When the ground set is the set of colour pairs ``{a, b}`` of ``[k]`` the masks
are wrapped as :class:`EdgePattern`; bit ``i`` stands for the ``i``-th pair in
colex order (``{1,2}, {1,3}, {2,3}, {1,4}, ...``).

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .errors import ConsistencyError, InputError

BigMatrix = list[list[int]]

__all__ = [
    "EdgePattern",
    "LatticeFn",
    "BigMatrix",
    "pair_index",
    "index_pair",
    "mobius",
    "mobius_recursive",
    "totient",
    "meet_matrix",
    "upward_closure_of_support",
    "lattice_order",
    "det_via_formula",
    "det_exact",
    "solve_exact",
    "decomposition_check",
]


def pair_index(a: int, b: int) -> int:
    """Colex index of the unordered pair of distinct colours ``{a, b}`` (1-based)."""
    if a == b:
        raise ValueError("a colour pair needs two distinct colours")
    lo, hi = (a, b) if a < b else (b, a)
    return comb(hi - 1, 2) + lo - 1


@lru_cache(maxsize=None)
def _pairs(k: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(combinations(range(1, k + 1), 2), key=lambda p: pair_index(*p)))


def index_pair(i: int, k: int) -> tuple[int, int]:
    return _pairs(k)[i]


@dataclass(frozen=True, order=True)
class EdgePattern:
    """A set of colour pairs, i.e. the edge set of a graph on colours ``1..k``."""

    bits: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"pattern bits exceed the {self.width} colour pairs of k={self.k}")

    @property
    def width(self) -> int:
        return self.k * (self.k - 1) // 2

    @classmethod
    def full(cls, k: int) -> "EdgePattern":
        return cls((1 << (k * (k - 1) // 2)) - 1, k)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], k: int) -> "EdgePattern":
        bits = 0
        for a, b in pairs:
            bits |= 1 << pair_index(a, b)
        return cls(bits, k)

    def pairs(self) -> list[tuple[int, int]]:
        return [index_pair(i, self.k) for i in range(self.width) if self.bits >> i & 1]

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __and__(self, other: "EdgePattern") -> "EdgePattern":
        _same_k(self, other)
        return EdgePattern(self.bits & other.bits, self.k)

    def issubset(self, other: "EdgePattern") -> bool:
        _same_k(self, other)
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        inner = ",".join(f"{a}{b}" for a, b in self.pairs())
        return f"EdgePattern({{{inner}}}, k={self.k})"


def _same_k(x: EdgePattern, y: EdgePattern) -> None:
    if x.k != y.k:
        raise InputError(f"patterns over different colour sets (k={x.k} vs k={y.k})")


Element = Union[int, EdgePattern]


def _bits(x: Element) -> int:
    return x.bits if isinstance(x, EdgePattern) else x


class LatticeFn:
    """Integer-valued function on the subset lattice of ``width`` items.

    Built from a full table (index = mask) or from a mapping; entries missing
    from a mapping make the function partial, and evaluating there raises.
    """

    def __init__(self, width: int, values: Sequence[int] | Mapping[int, int]):
        if width < 0:
            raise ValueError("width must be non-negative")
        self.width = width
        size = 1 << width
        if isinstance(values, Mapping):
            table: list[int | None] = [None] * size
            for key, val in values.items():
                table[_bits(key)] = int(val)
        else:
            if len(values) != size:
                raise ValueError(f"a total table on width {width} needs {size} values, got {len(values)}")
            table = [int(v) for v in values]
        self._table = table

    @classmethod
    def from_callable(cls, width: int, fn) -> "LatticeFn":
        return cls(width, [fn(x) for x in range(1 << width)])

    @property
    def size(self) -> int:
        return 1 << self.width

    def is_total(self) -> bool:
        return all(v is not None for v in self._table)

    def __call__(self, x: Element) -> int:
        val = self._table[_bits(x)]
        if val is None:
            raise InputError(f"lattice function undefined at {_bits(x):#b}")
        return val

    def support(self) -> list[int]:
        return [x for x, v in enumerate(self._table) if v]

    def __repr__(self) -> str:
        return f"LatticeFn(width={self.width}, {self._table})"


# ---------------------------------------------------------------------------
# Möbius function and totient
# ---------------------------------------------------------------------------

def mobius(x: Element, y: Element) -> int:
    """Möbius function of the subset lattice: ``(-1)^{|y - x|}`` if ``x ⊆ y`` else 0."""
    if isinstance(x, EdgePattern) and isinstance(y, EdgePattern):
        _same_k(x, y)
    xb, yb = _bits(x), _bits(y)
    if xb & ~yb:
        return 0
    return -1 if (yb ^ xb).bit_count() & 1 else 1


def _submasks(y: int) -> Iterable[int]:
    s = y
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & y


def mobius_recursive(x: int, y: int) -> int:
    """Möbius function straight from its recursive definition (test oracle)."""
    return _mobius_rec(x, y)


@lru_cache(maxsize=None)
def _mobius_rec(x: int, y: int) -> int:
    if x == y:
        return 1
    if x & ~y:
        return 0
    # x < y: minus the sum over x <= z < y
    return -sum(_mobius_rec(x, z) for z in _submasks(y) if z != y and z & x == x)


def _totient_inductive(f: LatticeFn, x: int) -> int:
    memo: dict[int, int] = {}

    def psi(z: int) -> int:
        if z not in memo:
            memo[z] = f(z) - sum(psi(w) for w in _submasks(z) if w != z)
        return memo[z]

    return psi(x)


def _totient_mobius(f: LatticeFn, x: int) -> int:
    return sum(f(z) * mobius(z, x) for z in _submasks(x))


def totient(f: LatticeFn, x: Element) -> int:
    """Generalised Euler totient ``Ψ_f(x)``.

    Computed both from the inductive definition and as a Möbius sum over the
    down-set of ``x``; a disagreement raises :class:`ConsistencyError`.
    """
    xb = _bits(x)
    a = _totient_inductive(f, xb)
    b = _totient_mobius(f, xb)
    if a != b:
        raise ConsistencyError(f"totient mismatch at {xb:#b}: inductive {a} vs Möbius sum {b}")
    return a


# ---------------------------------------------------------------------------
# Meet matrices
# ---------------------------------------------------------------------------

def meet_matrix(S: Sequence[Element], f: LatticeFn) -> BigMatrix:
    """``a_ij = f(x_i ∩ x_j)`` for the listed lattice elements."""
    bits = [_bits(x) for x in S]
    if len(set(bits)) != len(bits):
        raise InputError("meet_matrix needs distinct lattice elements")
    return [[f(xi & xj) for xj in bits] for xi in bits]


def lattice_order(width: int) -> list[int]:
    """All masks, by non-decreasing cardinality with ties broken by mask value."""
    return sorted(range(1 << width), key=lambda x: (x.bit_count(), x))


def upward_closure_of_support(f: LatticeFn) -> list[int]:
    """Masks lying above some point of the support of ``f``, in lattice order."""
    support = f.support()
    return [x for x in lattice_order(f.width) if any(y & ~x == 0 for y in support)]


def det_via_formula(S: Sequence[Element], f: LatticeFn) -> int:
    """Product formula for the determinant of the meet matrix on ``S``.

    ``S`` must be the upward closure of the support of ``f`` and must list
    elements so that ``x_i ⊂ x_j`` implies ``i < j``.
    """
    bits = [_bits(x) for x in S]
    if set(bits) != set(upward_closure_of_support(f)) or len(set(bits)) != len(bits):
        raise InputError("S is not the upward closure of the support of f")
    for i, xi in enumerate(bits):
        for xj in bits[:i]:
            if xi != xj and xi & ~xj == 0:
                raise InputError(f"ordering violation: {xi:#b} is a proper subset of an earlier element {xj:#b}")
    members = set(bits)
    det = 1
    for xi in bits:
        det *= sum(f(xj) * mobius(xj, xi) for xj in _submasks(xi) if xj in members)
    return det


@dataclass(frozen=True)
class DecompositionResult:
    ok: bool
    mismatch: tuple[int, int] | None = None
    expected: int | None = None
    got: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def decomposition_check(
    S: Sequence[Element],
    f: LatticeFn,
    P: Sequence[Element] | None = None,
    *,
    diagonal: Sequence[int] | None = None,
) -> DecompositionResult:
    """Verify ``meet_matrix(S, f) == E Λ Eᵀ`` exactly.

    ``P`` lists the whole lattice (defaults to ``S`` followed by the remaining
    masks); ``E[i][j] = 1`` iff ``P[j] ⊆ S[i]`` and ``Λ`` is the diagonal of
    totients over ``P``.  ``diagonal`` replaces ``Λ`` (used by negative tests).
    """
    sb = [_bits(x) for x in S]
    if P is None:
        seen = set(sb)
        pb = sb + [x for x in lattice_order(f.width) if x not in seen]
    else:
        pb = [_bits(x) for x in P]
        if not set(sb) <= set(pb):
            raise InputError("S must be a subset of P")
    lam = list(diagonal) if diagonal is not None else [totient(f, x) for x in pb]
    if len(lam) != len(pb):
        raise InputError("diagonal length must equal |P|")
    E = [[1 if pj & ~xi == 0 else 0 for pj in pb] for xi in sb]
    A = meet_matrix(sb, f)
    for i in range(len(sb)):
        for j in range(len(sb)):
            val = sum(E[i][r] * lam[r] * E[j][r] for r in range(len(pb)))
            if val != A[i][j]:
                return DecompositionResult(False, (i, j), A[i][j], val)
    return DecompositionResult(True)


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------

def _check_square(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("matrix must be square")
    return n


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination (every division is exact)."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_exact(m: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly: Bareiss elimination, then rational back-substitution.

    Raises :class:`ConsistencyError` if ``m`` is singular.
    """
    n = _check_square(m)
    if len(rhs) != n:
        raise InputError("right-hand side length must match the matrix")
    a = [list(map(int, row)) + [int(b)] for row, b in zip(m, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                raise ConsistencyError("singular system")
            a[k], a[swap] = a[swap], a[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n]) - sum((a[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / a[i][i]
    return x
