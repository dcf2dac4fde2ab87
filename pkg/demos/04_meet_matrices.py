"""
Meet matrices on the subset lattice
===================================

Determinants of matrices f(x_i & x_j) factor through totients, which is what
makes the parity reduction matrix invertible.
"""

from paritycount import LatticeFn, decomposition_check, det_exact, det_via_formula, meet_matrix, totient
from paritycount.lattice import lattice_order, upward_closure_of_support

# f = indicator of the empty set on a 2-element ground set
f = LatticeFn(2, [1, 0, 0, 0])
s = lattice_order(2)
for row in meet_matrix(s, f):
    print(row)
print("det:", det_exact(meet_matrix(s, f)), "formula:", det_via_formula(s, f))

# Parity indicator on 3 pairs: 1 when |x| is even
g = LatticeFn.from_callable(3, lambda x: 1 - x.bit_count() % 2)
s = upward_closure_of_support(g)
print("totients:", [totient(g, x) for x in s])
print("det:", det_exact(meet_matrix(s, g)), "formula:", det_via_formula(s, g))
print("A = E diag E^T:", bool(decomposition_check(s, g)))
