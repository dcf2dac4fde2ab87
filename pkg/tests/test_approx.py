import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from paritycount.approx import (
    Estimate,
    Mode,
    SampleCapExceeded,
    _count_successes,
    adaptive_success_target,
    density_lower_bound,
    estimate_parity_count,
    guaranteed_sample_count,
    sample_k_subset,
    sample_k_subsets,
)
from paritycount.errors import InputError
from paritycount.exact import count_parity_subsets
from paritycount.graph import ParityTarget, clique, complete_bipartite, gnp, independent

EVEN, ODD = ParityTarget.EVEN, ParityTarget.ODD


class TestDensityBound:
    def test_k3_n64(self):
        b = density_lower_bound(3, 64)
        assert b.bound == Fraction(41664, 19327352832)
        assert b.applicable
        assert abs(float(b.bound) - 2.156e-6) < 1e-9

    def test_below_threshold(self):
        assert not density_lower_bound(3, 8).applicable

    def test_k4_denominator_has_two_to_33(self):
        b = density_lower_bound(4, 256)
        assert b.applicable
        assert b.bound == Fraction(math.comb(256, 4), 2**33 * 16 * 256**2)
        assert b.bound.denominator % 2**20 == 0

    @given(st.integers(3, 6), st.integers(0, 200))
    def test_follows_formula_in_n(self, k, extra):
        n = k + extra
        a, b = density_lower_bound(k, n), density_lower_bound(k, n + 1)
        ratio = Fraction(math.comb(n + 1, k), math.comb(n, k)) * Fraction(n * n, (n + 1) ** 2)
        assert b.bound == a.bound * ratio

    def test_rejects_small_k(self):
        with pytest.raises(InputError):
            density_lower_bound(2, 10)


class TestSampler:
    def test_forced(self):
        assert sample_k_subset(5, 5, 123).to_list() == [0, 1, 2, 3, 4]

    def test_regression_value(self):
        assert sample_k_subset(6, 3, 42).to_list() == [1, 3, 4]
        assert sample_k_subset(6, 3, 42) == sample_k_subset(6, 3, 42)

    def test_rows_are_distinct_k_sets(self):
        rows = sample_k_subsets(12, 5, 1000, np.random.default_rng(0))
        assert rows.shape == (1000, 5)
        assert all(len(set(r)) == 5 for r in rows.tolist())

    def test_singletons_uniform_chi_square(self):
        n, draws = 10, 10**5
        picks = sample_k_subsets(n, 1, draws, np.random.default_rng(7))[:, 0]
        observed = np.bincount(picks, minlength=n)
        expected = draws / n
        chi2 = float(((observed - expected) ** 2 / expected).sum())
        assert chi2 < 27.88  # 0.999 quantile of chi-square with 9 degrees of freedom

    def test_pairs_uniform_chi_square(self):
        n, draws = 6, 6 * 10**4
        rows = np.sort(sample_k_subsets(n, 2, draws, np.random.default_rng(9)), axis=1)
        codes = rows[:, 0] * n + rows[:, 1]
        counts = np.array([np.count_nonzero(codes == a * n + b) for a in range(n) for b in range(a + 1, n)])
        expected = draws / 15
        chi2 = float(((counts - expected) ** 2 / expected).sum())
        assert chi2 < 36.12  # 0.999 quantile, 14 degrees of freedom


class TestSampleSizes:
    def test_adaptive_target(self):
        assert adaptive_success_target(Fraction(1, 10), Fraction(1, 20)) == 1218

    def test_guaranteed_is_astronomical(self):
        m = guaranteed_sample_count(4, 30, Fraction(1, 10), Fraction(1, 20))
        assert m > 2**33 * 16 * 900


class TestEstimate:
    def test_decide_no_gives_exact_zero(self):
        for g, k, t in [(clique(20), 3, EVEN), (independent(15), 3, ODD), (complete_bipartite(8, 8), 5, ODD)]:
            for mode in Mode:
                est = estimate_parity_count(g, k, t, "0.1", "0.05", mode)
                assert est.value == 0 and est.samples_used == 0 and est.exact

    def test_guaranteed_refuses(self):
        with pytest.raises(SampleCapExceeded) as info:
            estimate_parity_count(gnp(30, 0.5, 1), 4, EVEN, "0.1", "0.05", Mode.GUARANTEED)
        assert info.value.required > 2**33 * 16 * 900
        assert info.value.exit_code == 3

    def test_guaranteed_small_k_is_exact(self):
        g = gnp(15, 0.5, 2)
        est = estimate_parity_count(g, 2, ODD, "0.1", "0.05", Mode.GUARANTEED)
        assert est.exact and est.value == count_parity_subsets(g, 2, ODD)

    def test_adaptive_close_and_deterministic(self):
        g = gnp(24, 0.5, 5)
        truth = count_parity_subsets(g, 4, EVEN)
        a = estimate_parity_count(g, 4, EVEN, "0.1", "0.05", seed=11)
        b = estimate_parity_count(g, 4, EVEN, "0.1", "0.05", seed=11)
        assert a == b
        assert a.successes == 1218
        assert abs(a.value - truth) <= Fraction(1, 10) * truth

    def test_adaptive_cap(self):
        with pytest.raises(SampleCapExceeded):
            estimate_parity_count(gnp(24, 0.5, 5), 4, EVEN, "0.1", "0.05", max_samples=100)

    @pytest.mark.parametrize("eps, delta", [("0", "0.1"), ("0.1", "1"), ("x", "0.1"), ("0.1", "0")])
    def test_bad_parameters(self, eps, delta):
        with pytest.raises(InputError):
            estimate_parity_count(clique(5), 3, ODD, eps, delta)

    def test_estimate_invariant(self):
        with pytest.raises(ValueError):
            Estimate(Fraction(1), 1, 2, Fraction(1), Fraction(1, 2), Mode.ADAPTIVE)


class TestUnbiasedness:
    def test_mean_within_three_standard_errors(self):
        g = gnp(20, 0.5, 13)
        n, k = 20, 3
        truth = count_parity_subsets(g, k, EVEN)
        total = math.comb(n, k)
        a = g.to_numpy().astype(np.int64)
        runs, m = 40, 10**4
        seqs = np.random.SeedSequence(2024).spawn(runs)
        estimates = [total * _count_successes((a, k, 0, m, s)) / m for s in seqs]
        p = truth / total
        se = total * math.sqrt(p * (1 - p) / (m * runs))
        assert abs(sum(estimates) / runs - truth) < 3 * se
