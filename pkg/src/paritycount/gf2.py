"""Zero counting for quadratic polynomials over GF(2).

A graph ``G`` is encoded as ``p_G = sum over edges ij of x_i x_j``; a 0/1
assignment is the indicator vector of a vertex subset ``U`` and
``p_G(U) = e(G[U]) mod 2``.  Counting zeros of ``p_G`` therefore counts the
even induced subgraphs of every size, the empty set included.

``count_zeros`` runs in polynomial time.  It repeatedly takes a monomial
``x_a x_b``, writes ``q = x_a x_b + x_a L_a + x_b L_b + R`` and substitutes
``y_a = x_a + L_b``, ``y_b = x_b + L_a`` so that ``q = y_a y_b + (L_a L_b + R)``
with the bracket free of ``x_a, x_b``.  Then
``N0(q) = 3 N0(q') + (2^(m-2) - N0(q'))`` where ``q' = L_a L_b + R`` on the
``m - 2`` remaining variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, iter_bits

__all__ = ["QuadraticFormF2", "encode_polynomial", "count_zeros", "eliminate_pair", "total_even_subgraphs"]


@dataclass(frozen=True)
class QuadraticFormF2:
    """``sum(x_i x_j for (i, j) in quad) + sum(x_i for i in lin) + const`` over GF(2)."""

    n: int
    quad: frozenset[tuple[int, int]]
    lin: int = 0
    const: int = 0

    def __post_init__(self) -> None:
        for i, j in self.quad:
            if not (0 <= i < j < self.n):
                raise ValueError(f"monomial ({i}, {j}) must satisfy 0 <= i < j < n")
        if self.lin >> self.n or self.lin < 0:
            raise ValueError("linear part refers to variables outside range(n)")
        if self.const not in (0, 1):
            raise ValueError("constant must be 0 or 1")

    @classmethod
    def from_terms(cls, n: int, quad: Iterable[tuple[int, int]], lin: Iterable[int] = (), const: int = 0) -> "QuadraticFormF2":
        """Build from possibly repeated terms; repeated monomials cancel mod 2."""
        pairs: set[tuple[int, int]] = set()
        for i, j in quad:
            if i == j:
                raise ValueError("use the linear part for x_i^2 = x_i")
            pairs ^= {(min(i, j), max(i, j))}
        lin_mask = 0
        for i in lin:
            lin_mask ^= 1 << i
        return cls(n, frozenset(pairs), lin_mask, const & 1)

    def evaluate(self, x: int) -> int:
        """Value at the assignment whose bit ``i`` is ``x_i``."""
        acc = self.const ^ ((self.lin & x).bit_count() & 1)
        for i, j in self.quad:
            acc ^= (x >> i) & (x >> j) & 1
        return acc

    def sorted_quad(self) -> list[tuple[int, int]]:
        return sorted(self.quad)

    def __str__(self) -> str:
        terms = [f"x{i}*x{j}" for i, j in self.sorted_quad()]
        terms += [f"x{i}" for i in iter_bits(self.lin)]
        if self.const:
            terms.append("1")
        return " + ".join(terms) if terms else "0"


def encode_polynomial(g: Graph) -> QuadraticFormF2:
    return QuadraticFormF2(g.n, frozenset(g.edges()))


# Working representation: symmetric adjacency masks for the quadratic part.

def _to_rows(q: QuadraticFormF2) -> list[int]:
    rows = [0] * q.n
    for i, j in q.quad:
        rows[i] ^= 1 << j
        rows[j] ^= 1 << i
    return rows


def _from_rows(n: int, rows: list[int], lin: int, const: int) -> QuadraticFormF2:
    quad = frozenset((i, j) for i in range(n) for j in iter_bits(rows[i]) if j > i)
    return QuadraticFormF2(n, quad, lin, const)


def _eliminate(rows: list[int], lin: int, const: int, a: int, b: int) -> tuple[int, int]:
    """Remove variables ``a, b`` (with ``x_a x_b`` present) in place.

    Returns the new ``(lin, const)``; ``rows`` is updated to the quadratic part
    of ``L_a L_b + R``.
    """
    bit_a, bit_b = 1 << a, 1 << b
    # L_a: everything multiplying x_a except x_b; constant term from the linear part
    la, ca = rows[a] & ~bit_b, lin >> a & 1
    lb, cb = rows[b] & ~bit_a, lin >> b & 1
    for v in iter_bits(rows[a]):
        rows[v] &= ~bit_a
    for v in iter_bits(rows[b]):
        rows[v] &= ~bit_b
    rows[a] = rows[b] = 0
    lin &= ~(bit_a | bit_b)
    # add L_a * L_b = (la + ca)(lb + cb)
    for i in iter_bits(la):
        for j in iter_bits(lb):
            if i == j:
                lin ^= 1 << i
            else:
                rows[i] ^= 1 << j
                rows[j] ^= 1 << i
    if ca:
        lin ^= lb
    if cb:
        lin ^= la
    return lin, const ^ (ca & cb)


def eliminate_pair(q: QuadraticFormF2, a: int, b: int) -> QuadraticFormF2:
    """The residual form ``L_a L_b + R`` (still on ``n`` variables, free of ``x_a, x_b``)."""
    if (min(a, b), max(a, b)) not in q.quad:
        raise ValueError(f"x{a}*x{b} is not a monomial of the form")
    rows = _to_rows(q)
    lin, const = _eliminate(rows, q.lin, q.const, a, b)
    return _from_rows(q.n, rows, lin, const)


def count_zeros(q: QuadraticFormF2) -> int:
    """Exact number of ``x`` in ``GF(2)^n`` with ``q(x) = 0``."""
    rows = _to_rows(q)
    lin, const = q.lin, q.const
    m = q.n
    # N0(q) = scale * N0(residual) + offset, accumulated as the pairs are peeled off
    scale, offset = 1, 0
    while True:
        a = next((i for i, r in enumerate(rows) if r), None)
        if a is None:
            break
        b = (rows[a] & -rows[a]).bit_length() - 1
        lin, const = _eliminate(rows, lin, const, a, b)
        m -= 2
        # N0 = 3*N0' + 2^m - N0' = 2*N0' + 2^m
        offset += scale << m
        scale *= 2
    if lin:
        base = 1 << (m - 1)
    else:
        base = (1 << m) if const == 0 else 0
    return scale * base + offset


def total_even_subgraphs(g: Graph) -> int:
    """Even induced subgraphs summed over all sizes, the empty subgraph included."""
    return count_zeros(encode_polynomial(g))
