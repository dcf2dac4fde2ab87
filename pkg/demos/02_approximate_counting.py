"""
Approximate counting by sampling
================================

The worst-case density bound makes the textbook sample count hopeless, so the
adaptive stopping rule does the real work.
"""

from fractions import Fraction

from paritycount import EVEN, Mode, count_parity_subsets, density_lower_bound, estimate_parity_count
from paritycount.approx import SampleCapExceeded, adaptive_success_target
from paritycount.graph import gnp

g = gnp(30, 0.5, seed=4)
truth = count_parity_subsets(g, 4, EVEN)
eps, delta = Fraction(1, 10), Fraction(1, 20)

# Worst-case density for k = 3 at the threshold n = 64
b = density_lower_bound(3, 64)
print("bound for (3, 64):", b.bound, "applicable:", b.applicable)

# Guaranteed mode reports its sample count and refuses
try:
    estimate_parity_count(g, 4, EVEN, eps, delta, Mode.GUARANTEED)
except SampleCapExceeded as exc:
    print(f"guaranteed mode would need {exc.required:.3e} samples")

# Adaptive mode stops after a fixed number of successes
print("success target:", adaptive_success_target(eps, delta))
for seed in range(5):
    est = estimate_parity_count(g, 4, EVEN, eps, delta, Mode.ADAPTIVE, seed=seed)
    err = float(abs(est.value - truth) / truth)
    print(f"seed {seed}: {float(est.value):9.1f} vs {truth} (rel. error {err:.3f}, {est.samples_used} samples)")
