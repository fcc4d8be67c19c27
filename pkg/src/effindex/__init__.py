"""Informational-efficiency measures for price series.

Estimate long memory (local Whittle and log-periodogram Hurst exponents),
path roughness (Hall-Wood and Genton fractal dimensions), and regularity
(rescaled approximate entropy) from a price history, then compose them
into a single efficiency index: distance from an ideal unpredictable
random walk.  Includes deterministic synthetic generators for calibration
and a batch CLI.
"""
from .entropy import (
    ApEnConfig,
    EntropyEstimate,
    apen_raw,
    apen_rescaled,
    approximate_entropy,
)
from .errors import (
    BadSpecError,
    BadToleranceError,
    DegeneratePathError,
    DegenerateRegressorError,
    DegenerateSpectrumError,
    EffindexError,
    EmbeddingFailureError,
    MissingReportError,
    NoInputError,
    NonConvergenceError,
    ParseError,
    TooFewFrequenciesError,
    TooShortError,
    UnknownSymbolError,
    ValidationError,
    WrongKindError,
    ZeroOrdinateError,
    ZeroVarianceError,
)
from .fractal import FractalEstimate, genton, hall_wood
from .index import (
    EfficiencyReport,
    IndexBenchmarks,
    MeasureSet,
    dh_regression,
    efficiency_index,
    group_means,
    rank,
    read_report_csv,
    write_report_csv,
    write_report_json,
)
from .ingest import (
    LOG_PRICE,
    LOG_RETURN,
    MIN_SERIES_LENGTH,
    UNGROUPED,
    LogSeries,
    Manifest,
    ManifestEntry,
    PriceSeries,
    load_manifest,
    load_series,
    to_log_prices,
    to_log_returns,
)
from .spectral import (
    Bandwidth,
    HurstEstimate,
    Periodogram,
    gph,
    local_whittle,
    periodogram,
)
from .synthgen import (
    GeneratorSpec,
    ar1,
    fbm,
    fgn,
    generate,
    iid_gaussian,
    mixture,
    normals,
    sine,
)

__version__ = "0.1.0"

__all__ = [
    "ApEnConfig", "EntropyEstimate", "apen_raw", "apen_rescaled",
    "approximate_entropy",
    "BadSpecError", "BadToleranceError", "DegeneratePathError",
    "DegenerateRegressorError", "DegenerateSpectrumError", "EffindexError",
    "EmbeddingFailureError", "MissingReportError", "NoInputError",
    "NonConvergenceError", "ParseError", "TooFewFrequenciesError",
    "TooShortError", "UnknownSymbolError", "ValidationError",
    "WrongKindError", "ZeroOrdinateError", "ZeroVarianceError",
    "FractalEstimate", "genton", "hall_wood",
    "EfficiencyReport", "IndexBenchmarks", "MeasureSet", "dh_regression",
    "efficiency_index", "group_means", "rank", "read_report_csv",
    "write_report_csv", "write_report_json",
    "LOG_PRICE", "LOG_RETURN", "MIN_SERIES_LENGTH", "UNGROUPED",
    "LogSeries", "Manifest", "ManifestEntry", "PriceSeries",
    "load_manifest", "load_series", "to_log_prices", "to_log_returns",
    "Bandwidth", "HurstEstimate", "Periodogram", "gph", "local_whittle",
    "periodogram",
    "GeneratorSpec", "ar1", "fbm", "fgn", "generate", "iid_gaussian",
    "mixture", "normals", "sine",
    "__version__",
]
