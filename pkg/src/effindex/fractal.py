"""Fractal dimension of a log-price path from variation at the two finest scales.

Both estimators compare path variation at lag 1 and lag 2 on a unit grid.
For a self-similar path with Hurst exponent H the population value is
``D = 2 - H``; a Brownian path gives 1.5, smoother paths give values near
1, rougher (antipersistent) paths approach 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePathError, TooShortError, WrongKindError
from .ingest import LOG_PRICE, MIN_SERIES_LENGTH, LogSeries

METHOD_HALL_WOOD = "hall-wood"
METHOD_GENTON = "genton"

D_MIN = 1.0 + 1e-6
D_MAX = 2.0

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class FractalEstimate:
    """Fractal dimension estimate.

    ``value`` is clamped into ``(1, 2]``; ``raw`` keeps the unclamped
    number and ``clamped`` records whether clamping happened.
    """

    value: float
    method: str
    raw: float
    clamped: bool = False


def _checked_values(series: LogSeries) -> np.ndarray:
    if series.kind != LOG_PRICE:
        raise WrongKindError(
            f"{series.symbol}: fractal dimension needs {LOG_PRICE!r}, "
            f"got {series.kind!r}"
        )
    if len(series) < MIN_SERIES_LENGTH:
        raise TooShortError(
            f"{series.symbol}: {len(series)} observations, need {MIN_SERIES_LENGTH}"
        )
    return series.values


def _clamp(raw: float, method: str) -> FractalEstimate:
    if raw < D_MIN:
        return FractalEstimate(D_MIN, method, raw, clamped=True)
    if raw > D_MAX:
        return FractalEstimate(D_MAX, method, raw, clamped=True)
    return FractalEstimate(raw, method, raw)


def hall_wood(series: LogSeries) -> FractalEstimate:
    """Hall-Wood box-count estimate from absolute increments.

    With ``n`` increments, the scale-l statistic is the average absolute
    l-step increment over the ``floor(n/l)`` non-overlapping blocks,
    weighted by ``l/n``; the dimension is
    ``2 - (log A(2) - log A(1)) / log 2``.
    """
    v = _checked_values(series)
    n = v.shape[0] - 1
    steps = np.abs(np.diff(v))
    a1 = steps.sum() / n
    if a1 == 0.0:
        raise DegeneratePathError(f"{series.symbol}: path is constant")
    nb = n // 2
    a2 = 2.0 * np.abs(v[2:2 * nb + 1:2] - v[0:2 * nb - 1:2]).sum() / n
    raw = math.inf if a2 == 0.0 else 2.0 - (math.log(a2) - math.log(a1)) / _LOG2
    return _clamp(raw, METHOD_HALL_WOOD)


def genton(series: LogSeries) -> FractalEstimate:
    """Genton variogram estimate from squared increments.

    The lag-l semivariance is ``sum((x_i - x_{i-l})^2) / (2 (n - l))`` and
    the dimension is ``2 - (log V(2) - log V(1)) / (2 log 2)``.
    """
    v = _checked_values(series)
    n = v.shape[0]
    d1 = v[1:] - v[:-1]
    d2 = v[2:] - v[:-2]
    v1 = float(np.dot(d1, d1)) / (2.0 * (n - 1))
    if v1 == 0.0:
        raise DegeneratePathError(f"{series.symbol}: path is constant")
    v2 = float(np.dot(d2, d2)) / (2.0 * (n - 2))
    raw = math.inf if v2 == 0.0 else 2.0 - (math.log(v2) - math.log(v1)) / (2.0 * _LOG2)
    return _clamp(raw, METHOD_GENTON)
