"""Shared Monte Carlo fixtures and acceptance reporting.

The expensive replication sweeps are session-scoped so the estimator
calibration tests and the acceptance suite share one run.  Each fixture
returns its wall-clock cost so the acceptance suite can assert the
runtime budget.
"""
from __future__ import annotations

import time

import numpy as np
import pytest

import effindex as e

MC_LENGTH = 4096
MC_REPS = 200
APEN_REPS = 100
HURST_GRID = (0.3, 0.5, 0.7)
FRACTAL_GRID = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)


@pytest.fixture(scope="session")
def hurst_mc():
    """Mean local-Whittle and GPH estimates on fGn, per Hurst value.

    Returns ``(means, elapsed)`` where ``means[h] = (lw_mean, gph_mean)``.
    """
    start = time.perf_counter()
    bandwidth = e.Bandwidth.from_length(MC_LENGTH)
    means = {}
    for h in HURST_GRID:
        lw, gp = [], []
        for i in range(MC_REPS):
            series = e.fgn(h, MC_LENGTH, seed=1_000 + i)
            pgram = e.periodogram(series)
            lw.append(e.local_whittle(pgram, bandwidth).value)
            gp.append(e.gph(pgram, bandwidth).value)
        means[h] = (float(np.mean(lw)), float(np.mean(gp)))
    return means, time.perf_counter() - start


@pytest.fixture(scope="session")
def fractal_mc():
    """Mean Hall-Wood and Genton estimates on fBm, per Hurst value."""
    start = time.perf_counter()
    means = {}
    for h in FRACTAL_GRID:
        hw, gn = [], []
        for i in range(MC_REPS):
            path = e.fbm(h, MC_LENGTH, seed=2_000 + i)
            hw.append(e.hall_wood(path).value)
            gn.append(e.genton(path).value)
        means[h] = (float(np.mean(hw)), float(np.mean(gn)))
    return means, time.perf_counter() - start


@pytest.fixture(scope="session")
def apen_mc():
    """Raw and rescaled entropy on iid Gaussian draws, one pair per seed."""
    seeds = [3_000 + i for i in range(APEN_REPS)]
    raws, rescaleds = [], []
    for seed in seeds:
        series = e.iid_gaussian(MC_LENGTH, seed)
        est = e.approximate_entropy(series)
        raws.append(est.raw)
        rescaleds.append(est.rescaled)
    return {"seeds": seeds, "raw": raws, "rescaled": rescaleds}


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\n[acceptance] {name}: {verdict}", flush=True)
