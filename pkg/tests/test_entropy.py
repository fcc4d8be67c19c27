"""Approximate entropy: raw statistic, rescaling, and regularity ordering."""
from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.lib.stride_tricks import sliding_window_view
from scipy.spatial.distance import cdist

from effindex import (
    LOG_PRICE,
    LOG_RETURN,
    ApEnConfig,
    BadToleranceError,
    LogSeries,
    TooShortError,
    ValidationError,
    WrongKindError,
    ZeroVarianceError,
    apen_raw,
    apen_rescaled,
    approximate_entropy,
    fgn,
    iid_gaussian,
    mixture,
    sine,
)

CEILING = math.log(math.sqrt(3.0) / 0.2)  # iid limit for r = 0.2


def returns(values):
    return LogSeries("x", values, LOG_RETURN)


def brute_apen(values, m=2, r=0.2):
    """Naive double-loop translation of the match-counting definition."""
    x = [float(v) for v in values]
    t = len(x)
    mean = sum(x) / t
    sd = math.sqrt(sum((v - mean) ** 2 for v in x) / t)
    u = [(v - mean) / sd for v in x]

    def phi(mm):
        nm = t - mm + 1
        total = 0.0
        for i in range(nm):
            count = 0
            for j in range(nm):
                if max(abs(u[i + k] - u[j + k]) for k in range(mm)) <= r:
                    count += 1
            total += math.log(count / nm)
        return total / nm

    return phi(m) - phi(m + 1)


def cdist_apen(values, m=2, r=0.2):
    """Second independent route: Chebyshev distances over embedded windows."""
    u = np.asarray(values, dtype=float)
    u = (u - u.mean()) / u.std()

    def phi(mm):
        windows = sliding_window_view(u, mm)
        counts = (cdist(windows, windows, "chebyshev") <= r).sum(axis=1)
        return float(np.log(counts / windows.shape[0]).mean())

    return phi(m) - phi(m + 1)


class TestRawStatistic:
    def test_alternating_series_is_regular(self):
        x = np.tile([1.0, -1.0], 512)
        assert apen_raw(returns(x)) <= 0.01

    def test_never_negative(self):
        cases = [
            sine(256, period=8).values,
            sine(1024).values,
            np.tile([1.0, -1.0], 128),
            iid_gaussian(256, 9).values,
        ]
        for x in cases:
            assert apen_raw(returns(x)) >= 0.0

    @pytest.mark.parametrize("t,seed", [(64, 101), (100, 102), (256, 103)])
    def test_matches_brute_force_on_noise(self, t, seed):
        x = iid_gaussian(t, seed).values
        assert apen_raw(returns(x)) == pytest.approx(brute_apen(x), abs=1e-12)

    def test_matches_brute_force_on_persistent_series(self):
        x = fgn(0.75, 128, seed=104).values
        assert apen_raw(returns(x)) == pytest.approx(brute_apen(x), abs=1e-12)

    def test_matches_brute_force_other_config(self):
        x = iid_gaussian(96, 105).values
        cfg = ApEnConfig(embedding=3, tolerance=0.5)
        assert apen_raw(returns(x), cfg) == pytest.approx(
            brute_apen(x, m=3, r=0.5), abs=1e-12)

    def test_monte_carlo_mean_matches_reference(self, apen_mc):
        # same draws through a structurally different implementation
        ref = [cdist_apen(iid_gaussian(4096, s).values) for s in apen_mc["seeds"]]
        ref_mean = float(np.mean(ref))
        prod_mean = float(np.mean(apen_mc["raw"]))
        assert abs(prod_mean - ref_mean) <= 0.10 * ref_mean

    def test_affine_invariance_is_exact(self):
        x = iid_gaussian(256, 50).values
        base = apen_raw(returns(x))
        for a, b in [(3.7, -2.3), (-2.0, 1.0), (1e-3, 5.0)]:
            assert apen_raw(returns(a * x + b)) == base


class TestRescaling:
    def test_ceiling_constant(self):
        assert CEILING == pytest.approx(2.1587, abs=1e-4)

    def test_zero_maps_to_zero(self):
        assert apen_rescaled(0.0).rescaled == 0.0

    def test_ceiling_maps_to_one(self):
        est = apen_rescaled(CEILING)
        assert est.rescaled == 1.0
        assert est.raw == CEILING

    def test_iid_mean_near_one(self, apen_mc):
        mean = float(np.mean(apen_mc["rescaled"]))
        assert 0.85 <= mean <= 1.15

    def test_sine_fixture_is_nearly_deterministic(self):
        est = approximate_entropy(sine(1024))
        assert est.rescaled < 0.1

    def test_bad_tolerance_guard(self):
        cfg = ApEnConfig()
        object.__setattr__(cfg, "tolerance", 2.0)  # bypass validation
        with pytest.raises(BadToleranceError):
            apen_rescaled(1.0, cfg)


class TestOrdering:
    def test_entropy_increases_with_noise_weight(self):
        thetas = (0.0, 0.25, 0.5, 0.75, 1.0)
        reps = 100
        means = []
        for theta in thetas:
            vals = [approximate_entropy(
                        mixture(theta, 1024, seed=6_000 + i,
                                period=32.0, amplitude=6.0)).rescaled
                    for i in range(reps)]
            means.append(float(np.mean(vals)))
        assert all(b > a for a, b in zip(means, means[1:])), means

    def test_shuffling_a_sine_raises_entropy(self):
        base = sine(512)
        unshuffled = approximate_entropy(base).rescaled
        shuffled = []
        for i in range(100):
            rng = np.random.Generator(np.random.Philox(7_000 + i))
            x = rng.permutation(base.values)
            shuffled.append(approximate_entropy(returns(x)).rescaled)
        assert abs(float(np.mean(shuffled)) - unshuffled) >= 0.2


class TestValidation:
    def test_wrong_kind(self):
        with pytest.raises(WrongKindError):
            apen_raw(LogSeries("x", np.arange(128.0), LOG_PRICE))

    def test_too_short(self):
        with pytest.raises(TooShortError):
            apen_raw(returns(np.arange(32.0)))

    def test_zero_variance(self):
        with pytest.raises(ZeroVarianceError):
            apen_raw(returns(np.full(128, 0.5)))

    def test_config_bounds(self):
        with pytest.raises(ValidationError):
            ApEnConfig(embedding=0)
        with pytest.raises(ValidationError):
            ApEnConfig(tolerance=0.0)
        with pytest.raises(ValidationError):
            ApEnConfig(tolerance=1.5)
