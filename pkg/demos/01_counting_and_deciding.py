"""
Counting and deciding even/odd subgraphs
=========================================

Exact counts on small graphs, then the decision procedure on graphs far too
large to enumerate.
"""

from paritycount import EVEN, ODD, classify, count_parity_subsets, decide, edge_count_histogram
from paritycount.graph import clique, cycle, gnp, two_cliques

# A 5-cycle: every 3-subset induces one or two edges
c5 = cycle(5)
print("histogram over 3-subsets:", edge_count_histogram(c5, 3))
print("even:", count_parity_subsets(c5, 3, EVEN), "odd:", count_parity_subsets(c5, 3, ODD))

# Even and odd counts always add up to C(n, k)
g = gnp(16, 0.5, seed=1)
print("gnp(16):", count_parity_subsets(g, 4, EVEN), "+", count_parity_subsets(g, 4, ODD))

# Cliques and unions of two cliques are the only obstacles for even subgraphs
for h in (clique(80), two_cliques(40, 40), gnp(80, 0.5, seed=2)):
    d = decide(h, 3, EVEN)
    print(f"{classify(h).kind.value:>18}: even 3-subgraph? {'YES' if d else 'NO':3}  ({d.reason})")

# Asking for a witness runs a budgeted search
d = decide(c5, 3, ODD, witness=True)
print("odd witness in C5:", d.witness.to_list())
