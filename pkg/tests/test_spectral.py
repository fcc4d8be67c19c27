"""Periodogram and frequency-domain Hurst estimators."""
from __future__ import annotations

import math

import numpy as np
import pytest

from effindex import (
    LOG_PRICE,
    LOG_RETURN,
    Bandwidth,
    DegenerateSpectrumError,
    LogSeries,
    Periodogram,
    TooFewFrequenciesError,
    TooShortError,
    ValidationError,
    WrongKindError,
    ZeroOrdinateError,
    fgn,
    gph,
    local_whittle,
    periodogram,
)

LW_TOL = 0.03
GPH_TOL = 0.05


def returns(values):
    return LogSeries("x", values, LOG_RETURN)


class TestPeriodogram:
    def test_grid_and_length(self):
        pg = periodogram(returns(np.sin(np.arange(100.0))))
        assert len(pg) == 50
        np.testing.assert_allclose(pg.frequencies,
                                   2 * math.pi * np.arange(1, 51) / 100)
        assert pg.series_length == 100

    def test_constant_series_all_zero(self):
        pg = periodogram(returns(np.full(128, 3.33)))
        assert pg.ordinates.max() == 0.0

    def test_single_tone_concentrates(self):
        t, k = 256, 5
        x = np.cos(2 * math.pi * k * np.arange(t) / t)
        pg = periodogram(returns(x))
        ords = pg.ordinates.copy()
        peak = ords[k - 1]
        ords[k - 1] = 0.0
        assert peak >= 10 * ords.max()

    def test_iid_mean_ordinate_near_flat_density(self):
        # white noise spectral density is 1 / (2 pi)
        total, count = 0.0, 0
        for i in range(100):
            pg = periodogram(fgn(0.5, 1024, seed=4_000 + i))
            total += pg.ordinates.sum()
            count += len(pg)
        assert total / count == pytest.approx(1 / (2 * math.pi), rel=0.10)

    @pytest.mark.parametrize("t", [1024, 1025])
    def test_parseval_within_two_percent(self, t):
        x = fgn(0.5, t, seed=77).values
        pg = periodogram(returns(x))
        ratio = 4 * math.pi * pg.ordinates.sum() / (t * x.var())
        assert 0.98 <= ratio <= 1.02

    def test_wrong_kind(self):
        with pytest.raises(WrongKindError):
            periodogram(LogSeries("x", np.zeros(128), LOG_PRICE))

    def test_too_short(self):
        with pytest.raises(TooShortError):
            periodogram(returns(np.ones(32)))

    def test_negative_ordinate_rejected(self):
        with pytest.raises(ValidationError):
            Periodogram(np.array([0.1]), np.array([-1.0]), 64)


class TestBandwidth:
    def test_default_exponent_values(self):
        assert Bandwidth.from_length(4096).m == 147
        assert Bandwidth.from_length(64).m == 12
        assert Bandwidth.from_length(3400).m == 131

    def test_capped_at_half_length(self):
        b = Bandwidth.from_length(64, exponent=0.99)
        assert b.m == 32

    def test_exponent_bounds(self):
        with pytest.raises(ValidationError):
            Bandwidth.from_length(4096, exponent=1.0)
        with pytest.raises(ValidationError):
            Bandwidth.from_length(4096, exponent=0.0)

    def test_minimum_m(self):
        with pytest.raises(ValidationError):
            Bandwidth(m=1)


class TestLocalWhittle:
    def test_calibration_h05(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.5][0] - 0.5) <= LW_TOL

    def test_calibration_h07(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.7][0] - 0.7) <= LW_TOL

    def test_calibration_h03(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.3][0] - 0.3) <= LW_TOL

    def test_grid_global_minimum(self):
        series = fgn(0.6, 2048, seed=11)
        pg = periodogram(series)
        bw = Bandwidth.from_length(2048)
        est = local_whittle(pg, bw)

        lam = pg.frequencies[:bw.m]
        ords = pg.ordinates[:bw.m] / pg.ordinates[:bw.m].mean()
        log_lam = np.log(lam)

        def objective(h):
            return math.log(np.mean(lam ** (2 * h - 1) * ords)) \
                - (2 * h - 1) * log_lam.mean()

        best_on_grid = min(objective(h) for h in np.linspace(0.0, 0.999, 1001))
        assert best_on_grid >= objective(est.value) - 1e-10

    def test_std_error(self):
        pg = periodogram(fgn(0.5, 1024, seed=3))
        est = local_whittle(pg, Bandwidth(m=100))
        assert est.std_error == pytest.approx(1 / 20)
        assert est.m_used == 100
        assert est.method == "local-whittle"

    def test_degenerate_spectrum(self):
        pg = periodogram(returns(np.zeros(128)))
        with pytest.raises(DegenerateSpectrumError):
            local_whittle(pg, Bandwidth(m=10))

    def test_bandwidth_exceeding_grid(self):
        pg = periodogram(fgn(0.5, 128, seed=1))
        with pytest.raises(ValidationError):
            local_whittle(pg, Bandwidth(m=65))

    def test_value_within_bounds(self):
        for seed in range(5):
            pg = periodogram(fgn(0.9, 512, seed=seed))
            v = local_whittle(pg, Bandwidth.from_length(512)).value
            assert 0.0 <= v <= 0.999


class TestGph:
    def test_calibration_h05(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.5][1] - 0.5) <= GPH_TOL

    def test_calibration_h03(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.3][1] - 0.3) <= GPH_TOL

    def test_calibration_h07(self, hurst_mc):
        means, _ = hurst_mc
        assert abs(means[0.7][1] - 0.7) <= GPH_TOL

    def test_std_error(self):
        pg = periodogram(fgn(0.5, 1024, seed=3))
        est = gph(pg, Bandwidth(m=96))
        assert est.std_error == pytest.approx(math.pi / math.sqrt(24 * 96))
        assert est.method == "gph"

    def test_zero_ordinate_rejected(self):
        freqs = 2 * math.pi * np.arange(1, 11) / 128
        ords = np.ones(10)
        ords[4] = 0.0
        with pytest.raises(ZeroOrdinateError, match="frequency index 5"):
            gph(Periodogram(freqs, ords, 128), Bandwidth(m=10))

    def test_too_few_frequencies(self):
        pg = periodogram(fgn(0.5, 128, seed=2))
        with pytest.raises(TooFewFrequenciesError):
            gph(pg, Bandwidth(m=2))

    def test_clamped_to_valid_range(self):
        # an extreme slope cannot push the estimate outside [0, 0.999]
        freqs = 2 * math.pi * np.arange(1, 13) / 1024
        ords = freqs ** -4.0  # implies slope -4, h = 4.5 before clamping
        est = gph(Periodogram(freqs, ords, 1024), Bandwidth(m=12))
        assert est.value == 0.999


@pytest.fixture(scope="module")
def draw():
    series = fgn(0.6, 1024, seed=21)
    bw = Bandwidth.from_length(1024)
    pg = periodogram(series)
    return series, bw, local_whittle(pg, bw).value, gph(pg, bw).value


class TestInvariances:
    @pytest.mark.parametrize("scale", [1e-6, 0.5, 3.7, 1e6])
    def test_scale_invariance(self, draw, scale):
        series, bw, lw0, gph0 = draw
        pg = periodogram(returns(scale * series.values))
        assert abs(local_whittle(pg, bw).value - lw0) <= 1e-9
        assert abs(gph(pg, bw).value - gph0) <= 1e-9

    @pytest.mark.parametrize("shift", [-5.0, 1e-3, 42.0])
    def test_mean_invariance(self, draw, shift):
        series, bw, lw0, gph0 = draw
        pg = periodogram(returns(series.values + shift))
        assert abs(local_whittle(pg, bw).value - lw0) <= 1e-9
        assert abs(gph(pg, bw).value - gph0) <= 1e-9

    def test_reversal_invariance(self, draw):
        series, bw, lw0, gph0 = draw
        pg = periodogram(returns(series.values[::-1].copy()))
        assert abs(local_whittle(pg, bw).value - lw0) <= 1e-9
        assert abs(gph(pg, bw).value - gph0) <= 1e-9
