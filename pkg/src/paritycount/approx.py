"""Randomised approximation of even/odd ``k``-subset counts.

Every nonzero count on ``n >= 2^(2k)`` vertices is at least
``C(n,k) / (2^(2k^2+1) k^2 n^2)``, so plain uniform sampling of ``k``-subsets
has a success probability bounded away from zero by a function of ``k`` and
a polynomial in ``n``.  Two sample-size rules are offered:

``GUARANTEED``
    Fixed sample count from Hoeffding's inequality using that worst-case
    density.  This is the textbook scheme and is astronomically expensive;
    it refuses to run above ``max_samples`` unless forced.
``ADAPTIVE``
    Sample until ``ceil(3 (1+eps) ln(2/delta) / eps^2)`` successes have been
    seen (the classic stopping rule estimator), then scale.

The sampler is a reconstruction: the existence result it rests on does not
spell out an algorithm.  Both modes return an exact zero without sampling
when the decision procedure answers NO.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decide import decide, ramsey_threshold
from .errors import BudgetExceeded, InputError
from .exact import DEFAULT_BUDGET, count_parity_subsets
from .graph import Graph, ParityTarget, VertexSet

__all__ = [
    "Mode",
    "Estimate",
    "DensityBound",
    "SampleCapExceeded",
    "density_lower_bound",
    "sample_k_subset",
    "sample_k_subsets",
    "guaranteed_sample_count",
    "adaptive_success_target",
    "estimate_parity_count",
]

DEFAULT_MAX_SAMPLES = 10**8
_BATCH = 8192


class Mode(enum.Enum):
    GUARANTEED = "guaranteed"
    ADAPTIVE = "adaptive"

    @classmethod
    def parse(cls, text: "str | Mode") -> "Mode":
        if isinstance(text, Mode):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InputError(f"unknown mode {text!r}; expected 'guaranteed' or 'adaptive'") from None


class SampleCapExceeded(BudgetExceeded):
    """The sampler would need (or used) more samples than allowed."""


@dataclass(frozen=True)
class DensityBound:
    k: int
    n: int
    bound: Fraction
    applicable: bool

    @property
    def min_density(self) -> Fraction:
        """The bound as a fraction of all ``k``-subsets."""
        return self.bound / math.comb(self.n, self.k)


@dataclass(frozen=True)
class Estimate:
    value: Fraction
    samples_used: int
    successes: int
    epsilon: Fraction
    delta: Fraction
    mode: Mode
    exact: bool = False

    def __post_init__(self) -> None:
        if not self.samples_used >= self.successes >= 0:
            raise ValueError("need samples_used >= successes >= 0")


def density_lower_bound(k: int, n: int) -> DensityBound:
    """``C(n,k) / (2^(2k^2+1) k^2 n^2)`` exactly; ``applicable`` iff ``n >= 2^(2k)``."""
    if k < 3:
        raise InputError(f"the density bound needs k >= 3, got {k}")
    if n < k:
        raise InputError(f"need n >= k, got n={n}, k={k}")
    bound = Fraction(math.comb(n, k), (1 << (2 * k * k + 1)) * k * k * n * n)
    return DensityBound(k, n, bound, n >= ramsey_threshold(k))


def _rng(seed: int | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)


def sample_k_subset(n: int, k: int, rng: int | np.random.Generator) -> VertexSet:
    """One uniformly random ``k``-subset of ``range(n)``."""
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={n}")
    return VertexSet.of(int(v) for v in sample_k_subsets(n, k, 1, rng)[0])


def sample_k_subsets(n: int, k: int, count: int, rng: int | np.random.Generator) -> np.ndarray:
    """``count`` independent uniform ``k``-subsets as a ``(count, k)`` index array.

    Each row takes the ``k`` smallest of ``n`` i.i.d. uniform keys, which is a
    uniformly random ``k``-subset.
    """
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={n}")
    keys = _rng(rng).random((count, n))
    if k == n:
        return np.broadcast_to(np.arange(n), (count, n)).copy()
    return np.argpartition(keys, k - 1, axis=1)[:, :k]


def _subset_parities(a: np.ndarray, idx: np.ndarray) -> np.ndarray:
    k = idx.shape[1]
    edges = np.zeros(idx.shape[0], dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            edges += a[idx[:, i], idx[:, j]]
    return edges & 1


def guaranteed_sample_count(k: int, n: int, eps: Fraction, delta: Fraction) -> int:
    """Hoeffding sample count ``ceil(ln(2/delta) / (2 (eps * mu_min)^2))``."""
    mu = density_lower_bound(k, n).min_density
    return math.ceil(Fraction(math.log(2 / float(delta))) / (2 * (Fraction(eps) * mu) ** 2))


def adaptive_success_target(eps: Fraction, delta: Fraction) -> int:
    """Successes required by the stopping rule: ``ceil(3 (1+eps) ln(2/delta) / eps^2)``."""
    eps = Fraction(eps)
    return math.ceil(3 * (1 + eps) * Fraction(math.log(2 / float(delta))) / eps**2)


def _count_successes(args: tuple[np.ndarray, int, int, int, np.random.SeedSequence]) -> int:
    a, k, want, m, seq = args
    rng = np.random.default_rng(seq)
    n = a.shape[0]
    hits = 0
    while m > 0:
        batch = min(m, _BATCH)
        hits += int(np.count_nonzero(_subset_parities(a, sample_k_subsets(n, k, batch, rng)) == want))
        m -= batch
    return hits


def _as_fraction(x, name: str) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise InputError(f"{name} must be a number, got {x!r}") from None


def estimate_parity_count(
    g: Graph,
    k: int,
    t: ParityTarget | str,
    eps,
    delta,
    mode: Mode | str = Mode.ADAPTIVE,
    seed: int = 0,
    *,
    max_samples: int = DEFAULT_MAX_SAMPLES,
    force: bool = False,
    workers: int = 1,
    budget: int | None = DEFAULT_BUDGET,
) -> Estimate:
    """Estimate the number of ``k``-subsets of ``g`` with edge parity ``t``.

    With probability at least ``1 - delta`` the value is within relative error
    ``eps`` of the truth, provided the true density is at least the
    worst-case density bound (always the case for ``n >= 2^(2k)``).

    ``GUARANTEED`` raises :class:`SampleCapExceeded` when its sample count
    exceeds ``max_samples`` and ``force`` is false.  ``ADAPTIVE`` raises it
    if ``max_samples`` draws do not reach the success target.
    """
    t = ParityTarget.parse(t)
    mode = Mode.parse(mode)
    eps = _as_fraction(eps, "eps")
    delta = _as_fraction(delta, "delta")
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if eps <= 0:
        raise InputError("eps must be positive")
    if not 0 < delta < 1:
        raise InputError("delta must lie strictly between 0 and 1")

    def exact(value: int) -> Estimate:
        return Estimate(Fraction(value), 0, 0, eps, delta, mode, exact=True)

    if not decide(g, k, t, budget=budget):
        return exact(0)
    if mode is Mode.GUARANTEED and k < 3:
        # no density bound below k = 3, but these counts are quadratic-time exact
        return exact(count_parity_subsets(g, k, t, budget=None))

    total = math.comb(g.n, k)
    a = g.to_numpy().astype(np.int64)
    want = t.value
    root = np.random.SeedSequence(seed & 0xFFFFFFFFFFFFFFFF)

    if mode is Mode.GUARANTEED:
        m = guaranteed_sample_count(k, g.n, eps, delta)
        if m > max_samples and not force:
            raise SampleCapExceeded(
                f"guaranteed mode needs m = {m} samples (about 10^{len(str(m)) - 1}), above the cap of {max_samples}",
                required=m,
                budget=max_samples,
            )
        workers = max(1, workers)
        shares = [m // workers + (1 if i < m % workers else 0) for i in range(workers)]
        jobs = [(a, k, want, share, seq) for share, seq in zip(shares, root.spawn(workers))]
        if workers == 1:
            hits = _count_successes(jobs[0])
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = sum(pool.map(_count_successes, jobs))
        return Estimate(Fraction(total * hits, m), m, hits, eps, delta, mode)

    target = adaptive_success_target(eps, delta)
    rng = np.random.default_rng(root)
    used = hits = 0
    while used < max_samples:
        batch = min(_BATCH, max_samples - used)
        ok = _subset_parities(a, sample_k_subsets(g.n, k, batch, rng)) == want
        cum = np.cumsum(ok)
        if hits + int(cum[-1]) >= target:
            stop = int(np.searchsorted(cum, target - hits)) + 1
            used += stop
            return Estimate(Fraction(total * target, used), used, target, eps, delta, mode)
        hits += int(cum[-1])
        used += batch
    raise SampleCapExceeded(
        f"adaptive mode drew {used} samples without reaching {target} successes",
        required=None,
        budget=max_samples,
    )
