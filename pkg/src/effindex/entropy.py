"""Approximate entropy of a return series, raw and rescaled to [0, 1].

The raw statistic follows Pincus: embed the standardized series in m
dimensions, count Chebyshev-ball matches (self-matches included), and take
the difference of the mean log match rates at dimensions m and m+1.

Because the series is standardized first, the tolerance r is in units of
one standard deviation.  Dividing the raw value by ``log(sqrt(3)/r)`` --
the large-sample value for iid data with that tolerance -- maps "fully
unpredictable" to roughly 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadToleranceError,
    TooShortError,
    ValidationError,
    WrongKindError,
    ZeroVarianceError,
)
from .ingest import LOG_RETURN, MIN_SERIES_LENGTH, LogSeries

DEFAULT_EMBEDDING = 2
DEFAULT_TOLERANCE = 0.2

_SQRT3 = math.sqrt(3.0)
_CHUNK = 512  # rows of the distance matrix built at a time


@dataclass(frozen=True)
class ApEnConfig:
    embedding: int = DEFAULT_EMBEDDING
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.embedding < 1:
            raise ValidationError(f"embedding dimension {self.embedding} < 1")
        if not 0.0 < self.tolerance <= 1.0:
            raise ValidationError(f"tolerance {self.tolerance} not in (0, 1]")


@dataclass(frozen=True)
class EntropyEstimate:
    raw: float
    rescaled: float


def _close_pairs(u: np.ndarray, rho: float) -> np.ndarray:
    """Boolean matrix of ``|u_i - u_j| <= rho``, built in row chunks."""
    t = u.shape[0]
    out = np.empty((t, t), dtype=bool)
    for lo in range(0, t, _CHUNK):
        hi = min(lo + _CHUNK, t)
        out[lo:hi] = np.abs(u[lo:hi, None] - u[None, :]) <= rho
    return out


def _phi(close: np.ndarray, m: int) -> float:
    """Mean log proportion of m-dimensional template matches."""
    t = close.shape[0]
    nm = t - m + 1
    match = close[:nm, :nm].copy()
    for k in range(1, m):
        match &= close[k:k + nm, k:k + nm]
    counts = match.sum(axis=1, dtype=np.int64)
    return float(np.mean(np.log(counts / nm)))


def apen_raw(series: LogSeries, config: ApEnConfig = ApEnConfig()) -> float:
    """Raw approximate entropy ApEn(m, r) of a log-return series.

    The series is standardized (zero mean, unit population variance), so
    ``config.tolerance`` acts as a fraction of one standard deviation.
    Values are floored at zero: perfectly regular inputs can round to a
    tiny negative difference.
    """
    if series.kind != LOG_RETURN:
        raise WrongKindError(
            f"{series.symbol}: entropy needs {LOG_RETURN!r}, got {series.kind!r}"
        )
    t = len(series)
    if t < MIN_SERIES_LENGTH or t < config.embedding + 2:
        raise TooShortError(f"{series.symbol}: {t} observations is too short")
    x = series.values
    sd = float(x.std())
    if sd == 0.0:
        raise ZeroVarianceError(f"{series.symbol}: constant series")
    u = (x - x.mean()) / sd
    close = _close_pairs(u, config.tolerance)
    value = _phi(close, config.embedding) - _phi(close, config.embedding + 1)
    return max(value, 0.0)


def apen_rescaled(raw: float, config: ApEnConfig = ApEnConfig()) -> EntropyEstimate:
    """Divide a raw ApEn by the iid ceiling ``log(sqrt(3) / r)``."""
    if config.tolerance >= _SQRT3:
        raise BadToleranceError(
            f"tolerance {config.tolerance} >= sqrt(3); rescaling undefined"
        )
    ceiling = math.log(_SQRT3 / config.tolerance)
    return EntropyEstimate(raw=raw, rescaled=raw / ceiling)


def approximate_entropy(series: LogSeries,
                        config: ApEnConfig = ApEnConfig()) -> EntropyEstimate:
    """Raw and rescaled approximate entropy in one call."""
    return apen_rescaled(apen_raw(series, config), config)
