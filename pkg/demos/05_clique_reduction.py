"""
Multicolour cliques from a parity oracle
=========================================

Colourful k-cliques are recovered by querying a colourful parity counter on
filtered copies of the graph and solving one exact linear system.
"""

from itertools import count

from paritycount import EVEN, ODD, Colouring, ConsistencyError, count_multicolour_cliques, pad_instance
from paritycount.exact import parity_counter
from paritycount.graph import gnp
from paritycount.reduction import reduce_instance

g = gnp(12, 0.6, seed=9)
f = Colouring(tuple(v % 3 + 1 for v in range(g.n)), 3)
print("direct count:", count_multicolour_cliques(g, f, 3))

for t in (EVEN, ODD):
    inst = reduce_instance(g, f, 3, t)
    print(f"{t}: {inst.oracle_calls} oracle calls, z = {inst.z}")
    print(f"      pattern counts N = {inst.solution} -> cliques {inst.clique_count}")

# A wrong oracle is caught by the integrality checks
exact_oracle = parity_counter(EVEN)
calls = count(1)


def noisy(h, f):
    return exact_oracle(h, f) + (next(calls) == 3)


try:
    reduce_instance(g, f, 3, EVEN, noisy)
except ConsistencyError as exc:
    print("corrupted oracle:", exc)

# Padding with universal vertices keeps the count
g5, f5 = pad_instance(g, f, 3, 5)
print("after padding to k = 5:", count_multicolour_cliques(g5, f5, 5))
