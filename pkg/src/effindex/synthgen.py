"""Deterministic synthetic series with known memory and regularity.

All randomness comes from the counter-based Philox engine: draw 64-bit
words, map them to open-interval uniforms, and push those through the
inverse normal CDF.  The same ``(kind, parameters, seed)`` therefore gives
bitwise-identical output on every platform and run, independent of global
RNG state.

Fractional Gaussian noise uses circulant embedding of the autocovariance:
the eigenvalues of the length-2n circulant are obtained by FFT, and one
complex normal vector shaped by those eigenvalues transforms back into an
exact sample path.  For fGn the embedding is nonnegative definite for all
H in (0, 1), so the method is exact, not approximate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter
from scipy.special import ndtri

from .errors import BadSpecError, EmbeddingFailureError
from .ingest import LOG_PRICE, LOG_RETURN, LogSeries

KIND_FGN = "fgn"
KIND_FBM = "fbm"
KIND_IID = "iid-gaussian"
KIND_AR1 = "ar1"
KIND_SINE = "sine"
KIND_MIXTURE = "mixture"
KINDS = (KIND_FGN, KIND_FBM, KIND_IID, KIND_AR1, KIND_SINE, KIND_MIXTURE)

DEFAULT_PERIOD = 16.0
DEFAULT_AMPLITUDE = 1.0
_AR1_BURN_IN = 1000
_TWO53 = float(1 << 53)
_EIG_TOL = -1e-8


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one synthetic series.

    ``hurst`` is required for fgn/fbm, ``phi`` for ar1, ``weight`` for
    mixture; ``period`` and ``amplitude`` shape the sine and the sine part
    of the mixture.
    """

    kind: str
    length: int
    seed: int = 0
    hurst: float | None = None
    phi: float | None = None
    weight: float | None = None
    period: float = DEFAULT_PERIOD
    amplitude: float = DEFAULT_AMPLITUDE

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpecError(f"unknown kind {self.kind!r}")
        if self.length < 2:
            raise BadSpecError(f"length {self.length} < 2")
        if self.kind in (KIND_FGN, KIND_FBM):
            if self.hurst is None:
                raise BadSpecError(f"{self.kind} requires a hurst value")
            if not 0.0 < self.hurst < 1.0:
                raise BadSpecError(f"hurst {self.hurst} not in (0, 1)")
        if self.kind == KIND_AR1:
            if self.phi is None:
                raise BadSpecError("ar1 requires a phi value")
            if not -1.0 < self.phi < 1.0:
                raise BadSpecError(f"phi {self.phi} not in (-1, 1)")
        if self.kind == KIND_MIXTURE:
            if self.weight is None:
                raise BadSpecError("mixture requires a weight value")
            if not 0.0 <= self.weight <= 1.0:
                raise BadSpecError(f"weight {self.weight} not in [0, 1]")
        if self.kind in (KIND_SINE, KIND_MIXTURE):
            if self.period <= 0.0:
                raise BadSpecError(f"period {self.period} must be positive")
            if self.amplitude < 0.0:
                raise BadSpecError(f"amplitude {self.amplitude} must be nonnegative")


def normals(seed: int, n: int) -> np.ndarray:
    """``n`` standard normals from the Philox stream for ``seed``.

    Raw 64-bit words become uniforms on (0, 1) via the usual 53-bit
    mantissa trick with a half-step offset, then normals via the inverse
    CDF.  No global RNG state is read or written.
    """
    raw = np.random.Philox(int(seed)).random_raw(n)
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) / _TWO53
    return ndtri(u)


def _fgn_values(hurst: float, n: int, seed: int) -> np.ndarray:
    if n == 1:
        return normals(seed, 1)
    k = np.arange(n + 1, dtype=float)
    two_h = 2.0 * hurst
    gamma = 0.5 * (np.abs(k + 1) ** two_h - 2.0 * np.abs(k) ** two_h
                   + np.abs(k - 1) ** two_h)
    circ = np.concatenate([gamma, gamma[n - 1:0:-1]])
    eig = np.fft.fft(circ).real
    if eig.min() < _EIG_TOL:
        raise EmbeddingFailureError(
            f"negative circulant eigenvalue {eig.min():.3e} for hurst={hurst}"
        )
    eig = np.clip(eig, 0.0, None)
    m = 2 * n
    z = normals(seed, m)
    w = np.empty(m, dtype=complex)
    w[0] = math.sqrt(eig[0] / m) * z[0]
    w[n] = math.sqrt(eig[n] / m) * z[1]
    a = z[2:n + 1]
    b = z[n + 1:2 * n]
    scale = np.sqrt(eig[1:n] / (2.0 * m))
    w[1:n] = scale * (a + 1j * b)
    w[n + 1:] = np.conj(w[n - 1:0:-1])
    return np.fft.fft(w)[:n].real


def fgn(hurst: float, length: int, seed: int = 0) -> LogSeries:
    """Fractional Gaussian noise: stationary unit-variance increments."""
    if not 0.0 < hurst < 1.0:
        raise BadSpecError(f"hurst {hurst} not in (0, 1)")
    if length < 1:
        raise BadSpecError(f"length {length} < 1")
    return LogSeries("fgn", _fgn_values(hurst, length, seed), LOG_RETURN)


def fbm(hurst: float, length: int, seed: int = 0) -> LogSeries:
    """Fractional Brownian motion: zero start, cumulated fGn increments."""
    if length < 2:
        raise BadSpecError(f"length {length} < 2")
    incr = fgn(hurst, length - 1, seed).values
    path = np.empty(length)
    path[0] = 0.0
    np.cumsum(incr, out=path[1:])
    return LogSeries("fbm", path, LOG_PRICE)


def iid_gaussian(length: int, seed: int = 0) -> LogSeries:
    if length < 1:
        raise BadSpecError(f"length {length} < 1")
    return LogSeries("iid-gaussian", normals(seed, length), LOG_RETURN)


def ar1(phi: float, length: int, seed: int = 0) -> LogSeries:
    """AR(1) with unit innovations; a 1000-step burn-in is discarded."""
    if not -1.0 < phi < 1.0:
        raise BadSpecError(f"phi {phi} not in (-1, 1)")
    if length < 1:
        raise BadSpecError(f"length {length} < 1")
    e = normals(seed, _AR1_BURN_IN + length)
    x = lfilter([1.0], [1.0, -phi], e)
    return LogSeries("ar1", x[_AR1_BURN_IN:], LOG_RETURN)


def sine(length: int, period: float = DEFAULT_PERIOD,
         amplitude: float = DEFAULT_AMPLITUDE) -> LogSeries:
    """Deterministic sampled sine wave (no seed involved)."""
    if length < 1:
        raise BadSpecError(f"length {length} < 1")
    if period <= 0.0:
        raise BadSpecError(f"period {period} must be positive")
    t = np.arange(length, dtype=float)
    return LogSeries("sine", amplitude * np.sin(2.0 * math.pi * t / period),
                     LOG_RETURN)


def mixture(weight: float, length: int, seed: int = 0,
            period: float = DEFAULT_PERIOD,
            amplitude: float = DEFAULT_AMPLITUDE) -> LogSeries:
    """Convex blend ``(1 - weight) * sine + weight * noise``.

    At weight 0 the series is perfectly regular, at weight 1 it is iid
    noise, and entropy rises with the weight in between.
    """
    if not 0.0 <= weight <= 1.0:
        raise BadSpecError(f"weight {weight} not in [0, 1]")
    s = sine(length, period, amplitude).values
    z = normals(seed, length)
    return LogSeries("mixture", (1.0 - weight) * s + weight * z, LOG_RETURN)


def generate(spec: GeneratorSpec) -> LogSeries:
    """Dispatch on ``spec.kind``; the spec has already validated itself."""
    if spec.kind == KIND_FGN:
        return fgn(spec.hurst, spec.length, spec.seed)
    if spec.kind == KIND_FBM:
        return fbm(spec.hurst, spec.length, spec.seed)
    if spec.kind == KIND_IID:
        return iid_gaussian(spec.length, spec.seed)
    if spec.kind == KIND_AR1:
        return ar1(spec.phi, spec.length, spec.seed)
    if spec.kind == KIND_SINE:
        return sine(spec.length, spec.period, spec.amplitude)
    return mixture(spec.weight, spec.length, spec.seed,
                   spec.period, spec.amplitude)
